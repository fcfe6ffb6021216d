#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dissections.hpp"
#include "immanants.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "plabic.hpp"
#include "tableaux.hpp"
#include "web.hpp"

namespace webforge {

/// Outcome of one verification suite. A failing report carries a counterexample that
/// `replay` can re-check without rerunning the suite.
struct VerificationReport {
  std::string suite;
  Json parameters = Json::object();
  bool passed = true;
  std::optional<Json> counterexample;
  Json details = Json::object();
  double seconds = 0;

  explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

  Json to_json() const {
    Json out{{"suite", suite}, {"parameters", parameters}, {"passed", passed}, {"seconds", seconds}, {"details", details}};
    out["counterexample"] = counterexample ? *counterexample : Json(nullptr);
    return out;
  }

  void fail(Json payload) {
    if (!passed) return;  // keep the first counterexample
    passed = false;
    payload["suite"] = suite;
    counterexample = std::move(payload);
  }
};

constexpr std::uint64_t kDefaultSeed = 20240917;

namespace detail {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline VectorTuple random_vectors(int dim, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  VectorTuple vt{dim, std::vector<std::vector<Rational>>(count, std::vector<Rational>(dim))};
  for (auto& c : vt.columns)
    for (auto& x : c) x = dist(rng);
  return vt;
}

inline Json vectors_json(const VectorTuple& vt) {
  Json out = Json::array();
  for (const auto& c : vt.columns) {
    Json col = Json::array();
    for (const auto& x : c) col.push_back(rational_string(x));
    out.push_back(col);
  }
  return out;
}

inline VectorTuple vectors_from_json(const Json& j) {
  std::vector<std::vector<Rational>> cols;
  for (const auto& c : j) {
    std::vector<Rational> col;
    for (const auto& x : c) col.push_back(parse_rational(x.get<std::string>()));
    cols.push_back(std::move(col));
  }
  return make_vector_tuple(std::move(cols));
}

inline std::string sign_formula(int sigma, const StandardTableau& t) {
  const bool lemma = sigma == sign_lemma_factor(t);
  const bool final = sigma == final_proof_sign(t);
  if (lemma && final) return "both";
  if (lemma) return "lemma";
  if (final) return "final";
  return "neither";
}

inline void stitched_tuple(const VectorTuple& vt, const ContentEncoding& enc, VectorTuple* out) {
  out->dim = vt.dim;
  out->columns.clear();
  for (int a : enc.a) out->columns.push_back(vt.columns[a - 1]);
}

}  // namespace detail

using WebProvider = std::function<WebDiagram(const StandardTableau&)>;

inline WebDiagram default_web(const StandardTableau& t) { return tableau_to_web(t).front(); }

// -- duality ----------------------------------------------------------------------------

/// The pairing matrix a(W(T), w(M')) over SYT(2^k) x matchings is the identity.
inline VerificationReport verify_duality(int k, const WebProvider& provider = default_web) {
  detail::Stopwatch clock;
  VerificationReport r{"duality"};
  r.parameters = {{"k", k}};
  auto tableaux = enumerate_standard(k);
  auto matchings = enumerate_matchings(k);
  long long ones = 0, entries = 0;
  for (const auto& t : tableaux) {
    auto w = provider(t);
    auto own = catalan_bijection(t);
    for (const auto& m : matchings) {
      long long a = labeling_count(w, word_of_matching(m));
      long long expected = m == own ? 1 : 0;
      ++entries;
      if (a == 1) ++ones;
      if (a != expected)
        r.fail({{"tableau", to_json(t)}, {"web", to_json(w)}, {"matching", to_json(m)}, {"expected", expected}, {"observed", a}});
    }
  }
  r.details = {{"size", tableaux.size()}, {"entries", entries}, {"ones", ones}};
  r.seconds = clock.seconds();
  return r;
}

// -- flip invariance ------------------------------------------------------------------------

inline VerificationReport verify_flip(int k) {
  detail::Stopwatch clock;
  VerificationReport r{"flip"};
  r.parameters = {{"k", k}};
  long long webs = 0;
  for (const auto& t : enumerate_standard(k)) {
    auto all = tableau_to_web(t, ExtensionChoice::all());
    webs += static_cast<long long>(all.size());
    auto reference = invariant_vector(all.front());
    for (std::size_t i = 1; i < all.size(); ++i)
      if (!(invariant_vector(all[i]) == reference))
        r.fail({{"tableau", to_json(t)}, {"extensions", {0, i}}, {"webs", {to_json(all.front()), to_json(all[i])}}});
  }
  r.details = {{"tableaux", catalan_number(k)}, {"webs", webs}};
  r.seconds = clock.seconds();
  return r;
}

// -- positroids -------------------------------------------------------------------------

/// Trip targets predicted for a pipeline web with these color sets.
inline std::vector<int> predicted_trips(const std::vector<CyclicInterval>& sets) {
  const int s = static_cast<int>(sets.size());
  std::vector<int> target(sets.front().n, 0);
  for (int a = 0; a < s; ++a) {
    auto el = sets[a].elements();
    for (std::size_t i = 0; i + 1 < el.size(); ++i) target[el[i] - 1] = el[i + 1];
    target[el.back() - 1] = sets[(a + 2) % s].elements().front();
  }
  return target;
}

inline std::optional<std::string> positroid_defect(const StandardTableau& t, const WebDiagram& w) {
  auto sets = color_sets(catalan_bijection(t));
  auto g = plabic_of_web(w);
  if (graph_type(g) != std::make_pair(2, 2 * t.k)) return "type";
  if (positroid_of_graph(g) != cyclic_interval_positroid(sets)) return "positroid";
  if (trip_permutation(g).target != predicted_trips(sets)) return "trips";
  return std::nullopt;
}

inline VerificationReport verify_positroid(int k) {
  detail::Stopwatch clock;
  VerificationReport r{"positroid"};
  r.parameters = {{"k", k}};
  long long webs = 0;
  for (const auto& t : enumerate_standard(k)) {
    auto all = tableau_to_web(t, ExtensionChoice::all());
    for (std::size_t i = 0; i < all.size(); ++i) {
      ++webs;
      if (auto defect = positroid_defect(t, all[i]))
        r.fail({{"tableau", to_json(t)}, {"extension", i}, {"web", to_json(all[i])}, {"check", *defect}});
    }
  }
  r.details = {{"webs", webs}};
  r.seconds = clock.seconds();
  return r;
}

// -- signs ------------------------------------------------------------------------------

inline bool sign_lemma_holds(const StandardTableau& t) {
  auto m = catalan_bijection(t);
  return invariant_vector(sl2_web_of_matching(m)) == word_expansion(m).scaled(sign_lemma_factor(t));
}

inline VerificationReport verify_signs(int k) {
  detail::Stopwatch clock;
  VerificationReport r{"signs"};
  r.parameters = {{"k", k}};
  for (const auto& t : enumerate_standard(k))
    if (!sign_lemma_holds(t)) r.fail({{"tableau", to_json(t)}});
  r.details = {{"tableaux", catalan_number(k)}};
  r.seconds = clock.seconds();
  return r;
}

// -- Pluecker relations -----------------------------------------------------------------

/// Random networks on the top-cell graph of type (k, n) and, for n = 2k, on pipeline webs.
inline VerificationReport verify_pluecker(int k, int n, std::uint64_t seed = kDefaultSeed, int networks = 5) {
  detail::Stopwatch clock;
  VerificationReport r{"pluecker"};
  r.parameters = {{"k", k}, {"n", n}, {"seed", seed}, {"networks", networks}};
  std::mt19937_64 rng(seed);
  std::vector<PlabicGraph> graphs{top_cell_graph(k, n)};
  if (k == 2 && n % 2 == 0)
    for (const auto& t : enumerate_standard(n / 2)) graphs.push_back(plabic_of_web(default_web(t)));
  long long checked = 0;
  for (const auto& g : graphs)
    for (int rep = 0; rep < networks; ++rep) {
      auto net = random_network(g, rng);
      ++checked;
      if (auto bad = check_pluecker(boundary_measurements(net)))
        r.fail({{"network", to_json(net)}, {"i", bad->i}, {"j", bad->j}, {"value", rational_string(bad->value)}});
    }
  r.details = {{"networks_checked", checked}};
  r.seconds = clock.seconds();
  return r;
}

// -- immanants --------------------------------------------------------------------------

/// F_{M(T)} = sigma(T) [W(T)] on random networks of type (k, 2k) with sigma(T) = +-1 constant.
inline VerificationReport verify_immanant(int k, std::uint64_t seed = kDefaultSeed, int networks = 5) {
  detail::Stopwatch clock;
  VerificationReport r{"immanant"};
  r.parameters = {{"k", k}, {"seed", seed}, {"networks", networks}};
  std::mt19937_64 rng(seed);
  auto g = top_cell_graph(k, 2 * k);
  Json per_tableau = Json::array();
  std::set<std::string> formulas;
  for (const auto& t : enumerate_standard(k)) {
    int sigma = 0;
    for (int rep = 0; rep < networks; ++rep) {
      auto net = random_network(g, rng);
      auto c = immanant_vs_invariant(t, net);
      bool bad = c.sign == 0 || (sigma != 0 && c.sign != sigma);
      if (bad)
        r.fail({{"tableau", to_json(t)}, {"network", to_json(net)}, {"expected_sign", sigma},
                {"lhs", rational_string(c.lhs)}, {"rhs", rational_string(c.rhs)}});
      if (sigma == 0) sigma = c.sign;
    }
    auto formula = detail::sign_formula(sigma, t);
    formulas.insert(formula);
    per_tableau.push_back({{"col1", t.col1}, {"sigma", sigma}, {"matches", formula}});
  }
  std::string overall = "neither";
  if (formulas == std::set<std::string>{"both"}) overall = "both";
  if (formulas == std::set<std::string>{"final"} || formulas == std::set<std::string>{"final", "both"}) overall = "final";
  if (formulas == std::set<std::string>{"lemma"} || formulas == std::set<std::string>{"lemma", "both"}) overall = "lemma";
  r.details = {{"sign_formula", overall}, {"tableaux", per_tableau}};
  r.seconds = clock.seconds();
  return r;
}

// -- semistandard stitching -----------------------------------------------------------------

/// Both stitching identities on type (k, n), plus immanant = +-invariant for sampled SSYT.
inline VerificationReport verify_stitching(int k, int n, std::uint64_t seed = kDefaultSeed, int samples = 25) {
  detail::Stopwatch clock;
  VerificationReport r{"stitching"};
  r.parameters = {{"k", k}, {"n", n}, {"seed", seed}, {"samples", samples}};
  std::mt19937_64 rng(seed);

  auto pick = [&](std::size_t size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    if (static_cast<int>(idx.size()) > samples) idx.resize(samples);
    std::sort(idx.begin(), idx.end());
    return idx;
  };

  // [W](v_1..v_n) = [W-hat](v_{a_1}..v_{a_2k})
  auto ssyt = enumerate_semistandard(k, n);
  long long web_checks = 0;
  for (std::size_t i : pick(ssyt.size())) {
    const auto& t = ssyt[i];
    auto vt = detail::random_vectors(k, n, rng);
    auto [hat_t, enc] = standardize(t);
    VectorTuple picked;
    detail::stitched_tuple(vt, enc, &picked);
    ++web_checks;
    if (evaluate_web(tableau_to_web(t).front(), vt) != evaluate_web(default_web(hat_t), picked))
      r.fail({{"identity", "web"}, {"tableau", to_json(t)}, {"vectors", detail::vectors_json(vt)}});
  }

  // F_{(M,P)}(N) = F_{hat(M,P)}(N') and the measurements of N' are the stitched minors
  auto net = random_network(top_cell_graph(k, n), rng);
  auto table = immanant_table(net);
  auto vt = realize_matrix(boundary_measurements(net));
  auto pms = enumerate_partial_matchings(k, n);
  long long immanant_checks = 0;
  for (std::size_t i : pick(pms.size())) {
    const auto& pm = pms[i];
    auto enc = ContentEncoding::from_content(pm.content());
    auto stitched = stitch_network(net, enc);
    VectorTuple picked;
    detail::stitched_tuple(vt, enc, &picked);
    auto it = table.find(pm);
    Rational lhs = it == table.end() ? Rational(0) : it->second;
    auto h = hat(pm);
    ++immanant_checks;
    if (boundary_measurements(stitched).values != minors_of(picked).values ||
        lhs != immanant_value(stitched, make_partial_matching(2 * k, h.arcs, {})))
      r.fail({{"identity", "immanant"}, {"network", to_json(net)}, {"partial_matching", to_json(pm)}});
  }

  // F_{pm(T)} = sigma(T-hat) [W(T)] for semistandard T
  long long end_to_end = 0;
  auto g = top_cell_graph(k, n);
  for (std::size_t i : pick(ssyt.size())) {
    const auto& t = ssyt[i];
    auto sample = random_network(g, rng);
    auto c = immanant_vs_invariant(t, sample);
    int expected = final_proof_sign(standardize(t).first);
    ++end_to_end;
    bool ok = c.rhs == 0 ? c.lhs == 0 : c.sign == expected;
    if (!ok)
      r.fail({{"identity", "semistandard immanant"}, {"tableau", to_json(t)}, {"network", to_json(sample)},
              {"expected_sign", expected}});
  }
  r.details = {{"web_checks", web_checks}, {"immanant_checks", immanant_checks}, {"end_to_end_checks", end_to_end}};
  r.seconds = clock.seconds();
  return r;
}

// -- replay -----------------------------------------------------------------------------

namespace detail {

inline bool replay_unchecked(const Json& payload) {
  const std::string suite = detail::field(payload, "suite").get<std::string>();
  auto standard = [&] { return tableau_from_json(payload.at("tableau")).as_standard(); };
  if (suite == "duality") {
    auto w = web_from_json(payload.at("web"));
    auto m = matching_from_json(payload.at("matching"));
    return labeling_count(w, word_of_matching(m)) != payload.at("expected").get<long long>();
  }
  if (suite == "flip") {
    auto a = web_from_json(payload.at("webs")[0]);
    auto b = web_from_json(payload.at("webs")[1]);
    return !(invariant_vector(a) == invariant_vector(b));
  }
  if (suite == "positroid") return positroid_defect(standard(), web_from_json(payload.at("web"))).has_value();
  if (suite == "signs") return !sign_lemma_holds(standard());
  if (suite == "pluecker") return check_pluecker(boundary_measurements(network_from_json(payload.at("network")))).has_value();
  if (suite == "immanant") {
    auto c = immanant_vs_invariant(standard(), network_from_json(payload.at("network")));
    int expected = payload.at("expected_sign").get<int>();
    return c.sign == 0 || (expected != 0 && c.sign != expected);
  }
  if (suite == "stitching") {
    const std::string identity = payload.at("identity").get<std::string>();
    if (identity == "web") {
      auto t = tableau_from_json(payload.at("tableau")).tableau;
      auto vt = detail::vectors_from_json(payload.at("vectors"));
      auto [hat_t, enc] = standardize(t);
      VectorTuple picked;
      detail::stitched_tuple(vt, enc, &picked);
      return evaluate_web(tableau_to_web(t).front(), vt) != evaluate_web(default_web(hat_t), picked);
    }
    auto net = network_from_json(payload.at("network"));
    if (identity == "immanant") {
      auto pm = partial_matching_from_json(payload.at("partial_matching"));
      auto enc = ContentEncoding::from_content(pm.content());
      auto stitched = stitch_network(net, enc);
      VectorTuple picked;
      detail::stitched_tuple(realize_matrix(boundary_measurements(net)), enc, &picked);
      auto h = hat(pm);
      return boundary_measurements(stitched).values != minors_of(picked).values ||
             immanant_value(net, pm) != immanant_value(stitched, make_partial_matching(h.k * 2, h.arcs, {}));
    }
    auto t = tableau_from_json(payload.at("tableau")).tableau;
    auto c = immanant_vs_invariant(t, net);
    return c.rhs == 0 ? c.lhs != 0 : c.sign != payload.at("expected_sign").get<int>();
  }
  throw ParseError("unknown suite \"" + suite + "\"");
}

}  // namespace detail

/// Re-runs a recorded counterexample; true means the failure still reproduces.
inline bool replay(const Json& payload) {
  try {
    return detail::replay_unchecked(payload);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed counterexample: ") + e.what());
  }
}

}  // namespace webforge
