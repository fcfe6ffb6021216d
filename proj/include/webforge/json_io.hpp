#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "common.hpp"
#include "dissections.hpp"
#include "immanants.hpp"
#include "invariants.hpp"
#include "matchings.hpp"
#include "plabic.hpp"
#include "tableaux.hpp"
#include "web.hpp"

namespace webforge {

using Json = nlohmann::json;

// Conventions: vertex ids are 1-based, boundary vertices keep their labels 1..n and interior
// vertices follow as n+1, n+2, ...; edge ids are 1-based as well.

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline std::vector<Arc> arc_list(const Json& v) {
  if (!v.is_array()) throw ParseError("arcs must be an array");
  std::vector<Arc> out;
  for (const auto& a : v) {
    auto pair = int_list(a, "arc");
    if (pair.size() != 2) throw ParseError("each arc needs two endpoints");
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

inline Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const auto& [a, b] : arcs) out.push_back({a, b});
  return out;
}

// Domain errors raised while assembling a parsed object are reported as parse errors.
template <typename F>
auto checked(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string rational_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("not a rational number: \"" + s + "\"");
  if (r.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

// -- tableaux ---------------------------------------------------------------------------

inline Json to_json(const StandardTableau& t) { return {{"k", t.k}, {"col1", t.col1}, {"col2", t.col2}}; }

inline Json to_json(const SemistandardTableau& t) {
  return {{"k", t.k}, {"n", t.n}, {"col1", t.col1}, {"col2", t.col2}};
}

/// A tableau document; `standard` is set when "n" was omitted.
struct ParsedTableau {
  SemistandardTableau tableau;
  bool standard = false;

  StandardTableau as_standard() const {
    require(standard, "tableau is not standard");
    return StandardTableau{tableau.k, tableau.col1, tableau.col2};
  }
};

inline ParsedTableau tableau_from_json(const Json& j) {
  const int k = detail::int_field(j, "k");
  auto col1 = detail::int_list(detail::field(j, "col1"), "col1");
  auto col2 = detail::int_list(detail::field(j, "col2"), "col2");
  if (static_cast<int>(col1.size()) != k || static_cast<int>(col2.size()) != k)
    throw ParseError("tableau columns must have k entries");
  return detail::checked([&] {
    if (!j.contains("n")) {
      auto t = make_standard(col1, col2);
      return ParsedTableau{as_semistandard(t), true};
    }
    return ParsedTableau{make_semistandard(detail::int_field(j, "n"), col1, col2), false};
  });
}

// -- matchings --------------------------------------------------------------------------

inline Json to_json(const NoncrossingMatching& m) { return {{"k", m.k}, {"arcs", detail::arcs_json(m.arcs)}}; }

inline Json to_json(const PartialMatching& pm) {
  return {{"n", pm.n}, {"arcs", detail::arcs_json(pm.arcs)}, {"doubled", pm.doubled}};
}

inline NoncrossingMatching matching_from_json(const Json& j) {
  const int k = detail::int_field(j, "k");
  auto arcs = detail::arc_list(detail::field(j, "arcs"));
  return detail::checked([&] { return make_matching(k, arcs); });
}

inline PartialMatching partial_matching_from_json(const Json& j) {
  const int n = detail::int_field(j, "n");
  auto arcs = detail::arc_list(detail::field(j, "arcs"));
  auto doubled = j.contains("doubled") ? detail::int_list(j["doubled"], "doubled") : std::vector<int>{};
  return detail::checked([&] { return make_partial_matching(n, arcs, doubled); });
}

// -- dissections ------------------------------------------------------------------------

inline Json to_json(const WeightedDissection& d) {
  Json chords = Json::array();
  for (const auto& [c, w] : d.weights) chords.push_back({{"a", c.a}, {"b", c.b}, {"wt", w}});
  return {{"s", d.s}, {"chords", chords}};
}

inline Json to_json(const WeightedTriangulation& t) { return to_json(t.dissection); }

inline WeightedDissection dissection_from_json(const Json& j) {
  WeightedDissection d{detail::int_field(j, "s"), {}};
  const auto& chords = detail::field(j, "chords");
  if (!chords.is_array()) throw ParseError("chords must be an array");
  for (const auto& c : chords) {
    Chord chord(detail::int_field(c, "a"), detail::int_field(c, "b"));
    if (d.weights.count(chord)) throw ParseError("repeated chord");
    d.weights[chord] = detail::int_field(c, "wt");
  }
  detail::checked([&] {
    validate(d);
    return 0;
  });
  return d;
}

// -- webs -------------------------------------------------------------------------------

inline Json to_json(const WebDiagram& w) {
  Json interior = Json::array();
  for (int v = w.n; v < w.vertex_count(); ++v) interior.push_back({{"id", v + 1}, {"color", color_name(w.color[v])}});
  Json edges = Json::array();
  for (int e = 0; e < w.edge_count(); ++e)
    edges.push_back({{"id", e + 1}, {"ends", {w.edges[e].u + 1, w.edges[e].v + 1}}, {"mult", w.edges[e].mult}});
  Json rotations = Json::object();
  for (int v = 0; v < w.vertex_count(); ++v) {
    Json r = Json::array();
    for (int e : w.rotation[v]) r.push_back(e + 1);
    rotations[std::to_string(v + 1)] = r;
  }
  return {{"version", 1}, {"k", w.k}, {"n", w.n}, {"interior", interior}, {"edges", edges}, {"rotations", rotations}};
}

/// Reads the web document without validating it as a web (see validate_web).
inline WebDiagram web_from_json(const Json& j) {
  if (detail::int_field(j, "version") != 1) throw ParseError("unsupported web version");
  const int k = detail::int_field(j, "k");
  const int n = detail::int_field(j, "n");
  if (k < 0 || n < 0) throw ParseError("k and n must be nonnegative");
  WebDiagram w(k, n);

  const auto& interior = detail::field(j, "interior");
  if (!interior.is_array()) throw ParseError("interior must be an array");
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const auto& v = interior[i];
    if (detail::int_field(v, "id") != n + 1 + static_cast<int>(i))
      throw ParseError("interior ids must be n+1, n+2, ... in order");
    const auto& c = detail::field(v, "color");
    if (c == "b")
      w.add_interior(Color::Black);
    else if (c == "w")
      w.add_interior(Color::White);
    else
      throw ParseError("vertex color must be \"b\" or \"w\"");
  }

  const auto& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (detail::int_field(e, "id") != static_cast<int>(i) + 1) throw ParseError("edge ids must be 1, 2, ... in order");
    auto ends = detail::int_list(detail::field(e, "ends"), "ends");
    if (ends.size() != 2) throw ParseError("an edge has two ends");
    for (int x : ends)
      if (x < 1 || x > w.vertex_count()) throw ParseError("edge end is not a vertex id");
    w.add_edge(ends[0] - 1, ends[1] - 1, detail::int_field(e, "mult"));
  }

  const auto& rotations = detail::field(j, "rotations");
  if (!rotations.is_object()) throw ParseError("rotations must be an object");
  for (const auto& [key, list] : rotations.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("");
    } catch (...) {
      throw ParseError("rotation key \"" + key + "\" is not a vertex id");
    }
    if (v < 1 || v > w.vertex_count()) throw ParseError("rotation key \"" + key + "\" is not a vertex id");
    for (int e : detail::int_list(list, "rotation")) {
      if (e < 1 || e > w.edge_count()) throw ParseError("rotation refers to an unknown edge");
      w.rotation[v - 1].push_back(e - 1);
    }
  }
  return w;
}

// -- invariants, positroids, networks -------------------------------------------------------

inline std::string word_string(const std::vector<int>& letters, int k) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (k > 9 && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

inline Json to_json(const InvariantVector& iv) {
  Json coeffs = Json::array();
  for (const auto& [word, c] : iv.coeffs) coeffs.push_back({{"word", word_string(word, iv.k)}, {"c", c}});
  return {{"k", iv.k}, {"d", iv.d}, {"coeffs", coeffs}};
}

inline Json to_json(const Positroid& p) {
  Json bases = Json::array();
  for (const auto& b : p.bases) bases.push_back(b);
  return {{"k", p.k}, {"n", p.n}, {"bases", bases}};
}

inline Positroid positroid_from_json(const Json& j) {
  Positroid p{detail::int_field(j, "k"), detail::int_field(j, "n"), {}};
  const auto& bases = detail::field(j, "bases");
  if (!bases.is_array()) throw ParseError("bases must be an array");
  for (const auto& b : bases) {
    auto s = detail::int_list(b, "basis");
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != p.k) throw ParseError("each basis needs k elements");
    for (int x : s)
      if (x < 1 || x > p.n) throw ParseError("basis element outside [n]");
    p.bases.insert(s);
  }
  return p;
}

inline Json to_json(const PlabicNetwork& net) {
  WebDiagram w = shape_of(net.graph);
  w.k = graph_type(net.graph).first;
  Json out = to_json(w);
  Json weights = Json::object();
  for (int e = 0; e < net.graph.edge_count(); ++e) weights[std::to_string(e + 1)] = rational_string(net.weight[e]);
  out["weights"] = weights;
  return out;
}

inline PlabicNetwork network_from_json(const Json& j) {
  PlabicNetwork net{plabic_of_web(web_from_json(j)), {}};
  net.weight.assign(net.graph.edge_count(), 0);
  const auto& weights = detail::field(j, "weights");
  if (!weights.is_object()) throw ParseError("weights must be an object");
  std::vector<bool> seen(net.graph.edge_count(), false);
  for (const auto& [key, value] : weights.items()) {
    int e = 0;
    try {
      e = std::stoi(key);
    } catch (...) {
      throw ParseError("weight key \"" + key + "\" is not an edge id");
    }
    if (e < 1 || e > net.graph.edge_count()) throw ParseError("weight key \"" + key + "\" is not an edge id");
    if (!value.is_string()) throw ParseError("weights are strings \"p/q\"");
    net.weight[e - 1] = parse_rational(value.get<std::string>());
    if (net.weight[e - 1] == 0) throw ParseError("edge weights must be nonzero");
    seen[e - 1] = true;
  }
  for (bool s : seen)
    if (!s) throw ParseError("every edge needs a weight");
  return net;
}

}  // namespace webforge
