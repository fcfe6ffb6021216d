// Command-line front end: pipeline runs, verification suites, enumeration and export.
//
// Exit codes: 0 success / verification passed, 1 verification failed, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <webforge/export.hpp>
#include <webforge/json_io.hpp>
#include <webforge/verify.hpp>

using namespace webforge;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, int> default_budgets() {
  return {{"duality", 5},   {"flip", 5},      {"positroid", 5}, {"immanant", 3},  {"signs", 5},
          {"pluecker", 8},  {"stitching", 3}, {"stitching_n", 8}, {"enumerate", 7}, {"enumerate_webs", 5}};
}

// WEBFORGE_BUDGET is either one integer applied to every suite or "name=value,..." overrides.
std::map<std::string, int> budgets() {
  auto out = default_budgets();
  const char* env = std::getenv("WEBFORGE_BUDGET");
  if (!env || !*env) return out;
  std::string spec(env);
  auto to_int = [](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (...) {
    }
    throw UsageError("bad WEBFORGE_BUDGET value \"" + s + "\"");
  };
  if (spec.find('=') == std::string::npos) {
    int v = to_int(spec);
    for (auto& [name, b] : out) b = v;
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("bad WEBFORGE_BUDGET entry \"" + item + "\"");
    auto name = item.substr(0, eq);
    if (!out.count(name)) throw UsageError("unknown budget \"" + name + "\"");
    out[name] = to_int(item.substr(eq + 1));
  }
  return out;
}

void check_budget(const std::string& name, int value) {
  int limit = budgets().at(name);
  if (value > limit)
    throw UsageError(name + ": " + std::to_string(value) + " exceeds the budget " + std::to_string(limit) +
                     " (set WEBFORGE_BUDGET to raise it)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON if the argument starts with '{', otherwise a file path.
Json read_document(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  std::string text = first != std::string::npos && arg[first] == '{' ? arg : read_file(arg);
  return parse_json_text(text);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

struct Output {
  bool pretty = false;
  void emit(const Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

Json stages_json(const StandardTableau& t) {
  auto st = pipeline_stages(t);
  Json colors = Json::array();
  for (const auto& c : st.colors) colors.push_back(c.elements());
  Json extensions = Json::array();
  for (const auto& e : st.extensions) extensions.push_back(to_json(e));
  return {{"tableau", to_json(t)}, {"matching", to_json(st.matching)}, {"color_sets", colors},
          {"dissection", to_json(st.dissection)}, {"extensions", extensions}};
}

// -- web -------------------------------------------------------------------------------

struct WebArgs {
  std::string tableau;
  std::string extension = "0";
  std::string format = "json";
  std::string out_dir;
  bool stages = false;
};

int run_web(const WebArgs& a, const Output& out) {
  auto parsed = tableau_from_json(read_document(a.tableau));
  const auto& t = parsed.tableau;
  ExtensionChoice which = ExtensionChoice::all();
  if (a.extension != "all") {
    try {
      which = ExtensionChoice::single(std::stoi(a.extension));
    } catch (...) {
      throw UsageError("--extension must be an index or \"all\"");
    }
  }
  auto hat_t = standardize(t).first;
  if (a.stages) out.emit(stages_json(hat_t));
  auto webs = tableau_to_web(t, which);

  // Full invariant vectors are only affordable for small k; beyond the flip budget the
  // extensions are compared through their pairings with every noncrossing matching word.
  std::optional<bool> attestation;
  std::string method;
  if (a.extension == "all") {
    auto standard_webs = tableau_to_web(hat_t, ExtensionChoice::all());
    attestation = true;
    if (hat_t.k <= budgets().at("flip")) {
      method = "invariant vectors";
      auto reference = invariant_vector(standard_webs.front());
      for (const auto& w : standard_webs) attestation = *attestation && invariant_vector(w) == reference;
    } else {
      method = "pairings with all noncrossing matchings";
      auto reference = dual_matchings(standard_webs.front());
      for (const auto& w : standard_webs) attestation = *attestation && dual_matchings(w) == reference;
    }
  }

  for (std::size_t i = 0; i < webs.size(); ++i) {
    const auto& w = webs[i];
    std::string text;
    if (a.format == "json")
      text = out.pretty ? to_json(w).dump(2) : to_json(w).dump();
    else if (a.format == "dot")
      text = to_dot(w);
    else
      text = to_tikz(w);
    if (a.out_dir.empty()) {
      std::cout << text;
      if (a.format == "json") std::cout << "\n";
    } else {
      std::filesystem::create_directories(a.out_dir);
      const char* ext = a.format == "json" ? ".json" : a.format == "dot" ? ".dot" : ".tex";
      write_file(std::filesystem::path(a.out_dir) / ("web-" + std::to_string(i) + ext), text + (a.format == "json" ? "\n" : ""));
    }
  }
  if (attestation) {
    Json att{{"attestation", "web invariants of all extensions agree"}, {"method", method},
             {"extensions", webs.size()}, {"equal", *attestation}};
    if (a.out_dir.empty())
      out.emit(att);
    else
      write_file(std::filesystem::path(a.out_dir) / "attestation.json", att.dump(2) + "\n");
    if (!*attestation) return kExitFail;
  }
  return 0;
}

// -- verify ------------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int k = 3;
  std::optional<int> n;
  std::uint64_t seed = kDefaultSeed;
  int networks = 5;
  int samples = 25;
  std::string replay_file;
};

int run_verify(const VerifyArgs& a, const Output& out) {
  if (!a.replay_file.empty()) {
    bool reproduces = replay(read_document(a.replay_file));
    out.emit({{"replay", a.replay_file}, {"reproduces", reproduces}});
    return reproduces ? kExitFail : 0;
  }
  if (a.suite.empty()) throw UsageError("verify needs a suite or --replay");
  if (a.k < 1) throw UsageError("--k must be positive");
  VerificationReport r;
  if (a.suite == "duality") {
    check_budget("duality", a.k);
    r = verify_duality(a.k);
  } else if (a.suite == "flip") {
    check_budget("flip", a.k);
    r = verify_flip(a.k);
  } else if (a.suite == "positroid") {
    check_budget("positroid", a.k);
    r = verify_positroid(a.k);
  } else if (a.suite == "signs") {
    check_budget("signs", a.k);
    r = verify_signs(a.k);
  } else if (a.suite == "immanant") {
    check_budget("immanant", a.k);
    r = verify_immanant(a.k, a.seed, a.networks);
  } else if (a.suite == "pluecker") {
    int n = a.n.value_or(2 * a.k);
    if (n <= a.k) throw UsageError("pluecker needs n > k");
    check_budget("pluecker", n);
    r = verify_pluecker(a.k, n, a.seed, a.networks);
  } else if (a.suite == "stitching") {
    int n = a.n.value_or(2 * a.k + 1);
    if (n < 1) throw UsageError("--n must be positive");
    check_budget("stitching", a.k);
    check_budget("stitching_n", n);
    r = verify_stitching(a.k, n, a.seed, a.samples);
  } else {
    throw UsageError("unknown suite \"" + a.suite + "\"");
  }
  out.emit(r.to_json());
  return r.passed ? 0 : kExitFail;
}

// -- enumerate ----------------------------------------------------------------------------

int run_enumerate(const std::string& kind, int k, const Output& out) {
  if (k < 1) throw UsageError("--k must be positive");
  long long count = 0;
  if (kind == "syt") {
    check_budget("enumerate", k);
    for (const auto& t : enumerate_standard(k)) {
      out.emit(to_json(t));
      ++count;
    }
  } else if (kind == "matchings") {
    check_budget("enumerate", k);
    for (const auto& m : enumerate_matchings(k)) {
      out.emit(to_json(m));
      ++count;
    }
  } else if (kind == "webs") {
    check_budget("enumerate_webs", k);
    for (const auto& t : enumerate_standard(k)) {
      auto w = default_web(t);
      Json duals = Json::array();
      for (const auto& [m, a] : dual_matchings(w)) duals.push_back({{"matching", to_json(m)}, {"pairing", a}});
      out.emit({{"tableau", to_json(t)}, {"web", to_json(w)}, {"dual_matchings", duals}});
      ++count;
    }
  } else {
    throw UsageError("unknown kind \"" + kind + "\" (expected syt, matchings or webs)");
  }
  out.emit({{"count", count}});
  return 0;
}

// -- export -------------------------------------------------------------------------------

int run_export(const std::string& file, const std::string& format) {
  auto w = web_from_json(read_document(file));
  auto report = validate_web(w);
  if (!report.ok()) throw UsageError("invalid web (" + report.code + "): " + report.message);
  std::cout << (format == "dot" ? to_dot(w) : to_tikz(w));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"webforge: webs from two-column tableaux, with verification suites"};
  app.require_subcommand(1);
  Output out;

  WebArgs web_args;
  auto* web = app.add_subcommand("web", "run the tableau-to-web pipeline");
  web->add_option("tableau", web_args.tableau, "tableau JSON file or inline JSON")->required();
  web->add_option("-e,--extension", web_args.extension, "triangulation extension index, or \"all\"");
  web->add_option("-f,--format", web_args.format, "json, dot or tikz")->check(CLI::IsMember({"json", "dot", "tikz"}));
  web->add_option("-o,--out", web_args.out_dir, "write files into this directory instead of stdout");
  web->add_flag("--stages", web_args.stages, "also print the intermediate pipeline stages");
  web->add_flag("--pretty", out.pretty, "indent JSON output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_args.suite, "duality, flip, positroid, immanant, signs, pluecker or stitching");
  verify->add_option("-k,--k", verify_args.k, "rank parameter");
  verify->add_option("-n,--n", verify_args.n, "number of boundary vertices (pluecker, stitching)");
  verify->add_option("--seed", verify_args.seed, "random seed");
  verify->add_option("--networks", verify_args.networks, "random networks per case");
  verify->add_option("--samples", verify_args.samples, "sampled cases (stitching)");
  verify->add_option("--replay", verify_args.replay_file, "re-check a counterexample JSON file");
  verify->add_flag("--pretty", out.pretty, "indent JSON output");

  std::string kind;
  int enum_k = 3;
  auto* enumerate = app.add_subcommand("enumerate", "stream objects as JSON lines");
  enumerate->add_option("kind", kind, "syt, matchings or webs")->required();
  enumerate->add_option("-k,--k", enum_k, "rank parameter");
  enumerate->add_flag("--pretty", out.pretty, "indent JSON output");

  std::string export_file;
  std::string export_format = "dot";
  auto* exporter = app.add_subcommand("export", "render a web JSON file");
  exporter->add_option("web", export_file, "web JSON file or inline JSON")->required();
  exporter->add_option("-f,--format", export_format, "dot or tikz")->check(CLI::IsMember({"dot", "tikz"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*web) return run_web(web_args, out);
    if (*verify) return run_verify(verify_args, out);
    if (*enumerate) return run_enumerate(kind, enum_k, out);
    if (*exporter) return run_export(export_file, export_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
