// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <webforge/gallery.hpp>
#include <webforge/verify.hpp>

using namespace webforge;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note << "failed: " << what << "; ";
    passed = passed && ok;
  }
};

StandardTableau running_tableau() {
  return make_standard({1, 2, 3, 5, 6, 8, 10, 13, 14}, {4, 7, 9, 11, 12, 15, 16, 17, 18});
}

NoncrossingMatching running_matching() {
  return make_matching(9, {{1, 18}, {2, 17}, {3, 4}, {5, 12}, {6, 7}, {8, 9}, {10, 11}, {13, 16}, {14, 15}});
}

void report_duality(Outcome& o) {
  o.note << "sizes";
  for (int k = 2; k <= 5; ++k) {
    auto r = verify_duality(k);
    o.require(r.passed, "duality k=" + std::to_string(k));
    o.require(r.details["size"] == catalan_number(k), "matrix size k=" + std::to_string(k));
    o.note << " " << r.details["size"].get<long long>();
  }
  o.note << " are identity matrices";
}

void report_running(Outcome& o) {
  auto st = pipeline_stages(running_tableau());
  o.require(st.matching == running_matching(), "matching of the tableau");

  std::vector<std::vector<int>> colors;
  for (const auto& c : st.colors) colors.push_back(c.elements());
  o.require(colors == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7, 8}, {9, 10}, {11, 12, 13, 14},
                                                     {15, 16, 17, 18}},
            "(a) color sets");

  const auto& d = st.dissection;
  bool sides = d.s == 6 && d.weight({1, 2}) == 1 && d.weight({2, 3}) == 1 && d.weight({3, 4}) == 1 &&
               d.weight({4, 5}) == 1 && d.weight({5, 6}) == 2 && d.weight({1, 6}) == 2;
  int diagonals = 0;
  for (const auto& [c, x] : d.weights)
    if (!is_side(c, d.s)) diagonals += x == 1;
  o.require(sides && diagonals == 1 && d.weights.size() == 7u && d.total_weight() == 9, "(b) hexagon dissection");
  o.require(st.extensions.size() == 4u, "(c) four extensions");

  std::vector<int> letters;
  for (char ch : std::string("123345566774899821")) letters.push_back(ch - '0');
  auto word = make_word(9, 2, letters);
  auto webs = tableau_to_web(running_tableau(), ExtensionChoice::all());
  for (const auto& w : webs) {
    o.require(labelings(w, word).size() == 1u, "(d) unique labeling");
    auto dual = dual_matchings(w);
    o.require(dual.size() == 1u && dual.front().first == running_matching() && dual.front().second == 1,
              "(e) unique dual matching");
  }
  o.note << "color sets, hexagon weights 1,1,1,1,2,2 + diagonal 1, " << st.extensions.size()
         << " extensions, unique labeling and dual matching on each of " << webs.size() << " webs";
}

void report_flip(Outcome& o) {
  long long webs = 0;
  for (int k = 1; k <= 5; ++k) {
    auto r = verify_flip(k);
    o.require(r.passed, "flip k=" + std::to_string(k));
    webs += r.details["webs"].get<long long>();
  }
  o.note << webs << " webs across k<=5, invariant vectors equal within each tableau";
}

void report_positroid(Outcome& o) {
  long long webs = 0;
  for (int k = 1; k <= 5; ++k) {
    auto r = verify_positroid(k);
    o.require(r.passed, "positroid k=" + std::to_string(k));
    webs += r.details["webs"].get<long long>();
  }
  o.note << webs << " webs: dimer positroid = color-set positroid, trips as predicted";
}

void report_signs(Outcome& o) {
  long long count = 0;
  for (int k = 1; k <= 5; ++k) {
    auto r = verify_signs(k);
    o.require(r.passed, "sign lemma k=" + std::to_string(k));
    count += r.details["tableaux"].get<long long>();
  }
  o.note << count << " tableaux";
}

void report_immanant(Outcome& o) {
  for (int k = 2; k <= 3; ++k) {
    auto r = verify_immanant(k, kDefaultSeed, 5);
    o.require(r.passed, "immanant k=" + std::to_string(k));
    auto formula = r.details["sign_formula"].get<std::string>();
    std::string text = formula == "final"   ? "(-1)^sum(i_j-1) only"
                       : formula == "lemma" ? "(-1)^sum(i_j-j) only"
                       : formula == "both"  ? "both candidate signs"
                                            : "neither candidate sign";
    o.note << "k=" << k << " sign is " << text << "; ";
  }
  o.note << "5 networks per tableau";
}

void report_stitching(Outcome& o) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 7}, {3, 8}}) {
    auto r = verify_stitching(k, n, kDefaultSeed, 25);
    o.require(r.passed, "stitching k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  o.note << "(k,n) in (1,3) (1,4) (2,5) (2,6) (2,8) (3,7) (3,8), 25 samples each";
}

void report_counterexamples(Outcome& o) {
  auto [w1, w2] = same_graph_pair();
  o.require(validate_web(w1).ok() && validate_web(w2).ok(), "(a) valid webs");
  o.require(plabic_isomorphic(plabic_of_web(w1), plabic_of_web(w2)), "(a) same plabic graph");
  auto d1 = dual_matchings(w1);
  auto d2 = dual_matchings(w2);
  o.require(d1.size() == 1u && d2.size() == 1u && d1.front().first != d2.front().first, "(a) distinct dual matchings");

  std::size_t nonzero = 0;
  for (int x : {1, 2}) {
    auto w = noncanonical_sl5_web(x);
    o.require(validate_web(w).ok(), "(b) valid web");
    nonzero = dual_matchings(w).size();
    o.require(nonzero >= 2u, "(b) at least two nonzero pairings");
  }
  o.note << "same plabic graph with distinct duals; SL5 web pairs with " << nonzero << " matchings";
}

void report_pluecker(Outcome& o) {
  long long networks = 0;
  for (int n = 3; n <= 8; ++n) {
    auto r = verify_pluecker(2, n, kDefaultSeed, 5);
    o.require(r.passed, "pluecker n=" + std::to_string(n));
    networks += r.details["networks_checked"].get<long long>();
  }
  o.note << networks << " networks, k=2, n=3..8";
}

void report_structure(Outcome& o) {
  long long webs = 0;
  for (int k = 1; k <= 7; ++k) {
    auto tableaux = enumerate_standard(k);
    auto matchings = enumerate_matchings(k);
    o.require(tableaux.size() == catalan_number(k) && matchings.size() == catalan_number(k),
              "Catalan counts k=" + std::to_string(k));
    for (const auto& m : matchings) {
      auto d = dissection_of_matching(m);
      auto content = d.content();
      int sum = 0;
      for (int x : content) sum += x;
      o.require(sum == 2 * d.total_weight() && d.total_weight() == k, "degree sum k=" + std::to_string(k));
    }
    for (const auto& t : tableaux) {
      auto w = tableau_to_web(t).front();
      o.require(w.interior_count(Color::White) - w.interior_count(Color::Black) == 2, "white minus black");
      o.require(graph_type(plabic_of_web(w)) == std::make_pair(2, 2 * k), "plabic type (2,2k)");
      ++webs;
    }
  }
  o.note << "Catalan counts, degree sums and type (2,2k) for " << webs << " webs with k<=7";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "duality identity k=2..5", report_duality},
      {2, "running example", report_running},
      {3, "flip invariance k<=5", report_flip},
      {4, "positroid and trips k<=5", report_positroid},
      {5, "sign lemma k<=5", report_signs},
      {6, "immanant = sign * invariant k=2,3", report_immanant},
      {7, "semistandard stitching k<=3 n<=8", report_stitching},
      {8, "counterexamples", report_counterexamples},
      {9, "Pluecker relations k=2 n<=8", report_pluecker},
      {10, "structural invariants k<=7", report_structure},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ("
              << o.note.str() << ", " << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
