#include "coxsds/io.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

#include "coxsds/error.hpp"

namespace coxsds::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// Runs `body` and converts JSON type/shape errors into InvalidInput.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("unexpected JSON structure: ") + e.what());
  }
}

int parse_endpoint(const Json& value, int n,
                   const std::vector<std::string>& names) {
  if (value.is_number_integer()) {
    const int v = value.get<int>();
    if (v < 1 || v > n) throw InvalidInput("vertex out of range");
    return v - 1;
  }
  if (value.is_string()) {
    const auto name = value.get<std::string>();
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == name) return static_cast<int>(k);
    }
    throw InvalidInput("unknown vertex name '" + name + "'");
  }
  throw InvalidInput("vertex must be an index or a name");
}

EdgeLabel parse_label(const Json& value) {
  if (value.is_string() && value.get<std::string>() == "inf") {
    return EdgeLabel::infinity();
  }
  if (value.is_number_integer()) {
    const int m = value.get<int>();
    if (m < 3) throw InvalidInput("edge labels must be >= 3 or \"inf\"");
    return EdgeLabel(m);
  }
  throw InvalidInput("edge label must be an integer or \"inf\"");
}

Graph graph_from(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("graph must be a JSON object");
  const int n = doc.at("n").get<int>();
  if (n < 0 || n > Graph::kMaxVertices) {
    throw InvalidInput("n must be in 0.." + std::to_string(Graph::kMaxVertices));
  }
  std::vector<std::string> names;
  if (doc.contains("names")) {
    names = doc.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != n) {
      throw InvalidInput("names must list one alias per vertex");
    }
  }
  std::map<std::pair<int, int>, EdgeLabel> edges;
  for (const auto& e : doc.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be [i,j]");
    int u = parse_endpoint(e[0], n, names);
    int v = parse_endpoint(e[1], n, names);
    if (u > v) std::swap(u, v);
    if (!edges.emplace(std::pair{u, v}, EdgeLabel(3)).second) {
      throw InvalidInput("duplicate edge");
    }
  }
  for (const auto& l : doc.value("labels", Json::array())) {
    if (!l.is_array() || l.size() != 3) {
      throw InvalidInput("label must be [i,j,m]");
    }
    int u = parse_endpoint(l[0], n, names);
    int v = parse_endpoint(l[1], n, names);
    if (u > v) std::swap(u, v);
    auto it = edges.find({u, v});
    if (it == edges.end()) throw InvalidInput("label on a missing edge");
    it->second = parse_label(l[2]);
  }
  Graph g(n);
  for (const auto& [uv, label] : edges) g.add_edge(uv.first, uv.second, label);
  if (!names.empty()) g.set_names(std::move(names));
  return g;
}

Json graph_json(const Graph& g) {
  Json doc;
  doc["n"] = g.vertex_count();
  Json edges = Json::array();
  Json labels = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({e.u + 1, e.v + 1});
    if (e.label.is_infinite()) {
      labels.push_back({e.u + 1, e.v + 1, "inf"});
    } else if (e.label.value() != 3) {
      labels.push_back({e.u + 1, e.v + 1, e.label.value()});
    }
  }
  doc["edges"] = edges;
  if (!labels.empty()) doc["labels"] = labels;
  if (g.has_custom_names()) doc["names"] = g.names();
  return doc;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

Json scalar_json(const FieldScalar& x) {
  Json arr = Json::array();
  for (const auto& c : x.coefficients()) arr.push_back(c.get_str());
  return arr;
}

FieldScalar scalar_from(const Json& doc) {
  if (!doc.is_array() || doc.size() != FieldScalar::kBasisSize) {
    throw InvalidInput("field scalar must be an array of 8 rationals");
  }
  std::array<mpq_class, FieldScalar::kBasisSize> coeffs;
  for (int k = 0; k < FieldScalar::kBasisSize; ++k) {
    const auto text = doc[k].get<std::string>();
    try {
      coeffs[k] = mpq_class(text);
    } catch (const std::invalid_argument&) {
      throw InvalidInput("bad rational '" + text + "'");
    }
    if (coeffs[k].get_den() == 0) throw InvalidInput("zero denominator");
    coeffs[k].canonicalize();
  }
  return FieldScalar::from_coefficients(coeffs);
}

State state_from(const Json& value, int n) {
  return parse_state(value.get<std::string>(), n);
}

}  // namespace

Graph graph_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] { return graph_from(doc); });
}

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

SdsSpec sds_spec_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] {
    Graph g = graph_from(doc.at("graph"));
    const Json& rules = doc.at("rules");
    if (rules.contains("all")) {
      return SdsSpec::uniform(std::move(g),
                              RuleName::parse(rules.at("all").get<std::string>()));
    }
    const auto names = rules.at("per_vertex").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != g.vertex_count()) {
      throw InvalidInput("per_vertex must list one rule per vertex");
    }
    std::vector<LocalRule> local;
    for (int v = 0; v < g.vertex_count(); ++v) {
      local.push_back(RuleName::parse(names[v]).instantiate(g.degree(v) + 1));
    }
    return SdsSpec(std::move(g), std::move(local));
  });
}

std::string field_scalar_to_json(const FieldScalar& x) {
  return scalar_json(x).dump();
}

FieldScalar field_scalar_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] { return scalar_from(doc); });
}

namespace {

Json orientation_json(const Graph& g, Orientation o) {
  Json doc;
  Json list = Json::array();
  for (auto [tail, head] : arcs(g, o)) list.push_back({tail + 1, head + 1});
  doc["arcs"] = list;
  doc["linear_extension"] = linear_extension(g, o).to_string();
  return doc;
}

}  // namespace

std::string orientation_to_json(const Graph& g, Orientation o) {
  return orientation_json(g, o).dump();
}

std::string partition_to_json(const Graph& g,
                              const OrientationPartition& partition) {
  Json doc = Json::array();
  for (const auto& cls : partition) {
    Json members = Json::array();
    for (Orientation o : cls) members.push_back(orientation_json(g, o));
    doc.push_back(members);
  }
  return doc.dump();
}

std::string orientation_to_dot(const Graph& g, Orientation o) {
  std::ostringstream out;
  out << "digraph orientation {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << quoted(g.vertex_name(v)) << ";\n";
  }
  for (auto [tail, head] : arcs(g, o)) {
    out << "  " << quoted(g.vertex_name(tail)) << " -> "
        << quoted(g.vertex_name(head)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string phase_space_to_json(const PhaseSpace& ps) {
  Json doc;
  doc["n"] = ps.n;
  Json edges = Json::array();
  for (std::size_t x = 0; x < ps.successor.size(); ++x) {
    edges.push_back({format_state(static_cast<State>(x), ps.n),
                     format_state(ps.successor[x], ps.n)});
  }
  doc["edges"] = edges;
  return doc.dump();
}

PhaseSpace phase_space_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] {
    PhaseSpace ps;
    ps.n = doc.at("n").get<int>();
    if (ps.n < 0 || ps.n > 24) throw InvalidInput("n out of range");
    const std::size_t states = std::size_t{1} << ps.n;
    ps.successor.assign(states, 0);
    std::vector<char> seen(states, 0);
    for (const auto& e : doc.at("edges")) {
      const State x = state_from(e.at(0), ps.n);
      if (seen[x]) throw InvalidInput("state listed twice");
      seen[x] = 1;
      ps.successor[x] = state_from(e.at(1), ps.n);
    }
    for (char s : seen) {
      if (!s) throw InvalidInput("phase space must list every state");
    }
    return ps;
  });
}

std::string phase_space_to_dot(const PhaseSpace& ps) {
  std::ostringstream out;
  out << "digraph phase_space {\n";
  for (std::size_t x = 0; x < ps.successor.size(); ++x) {
    out << "  " << quoted(format_state(static_cast<State>(x), ps.n)) << " -> "
        << quoted(format_state(ps.successor[x], ps.n)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string state_automaton_to_json(const StateAutomaton& aut) {
  Json doc;
  doc["n"] = aut.n;
  Json edges = Json::array();
  const std::size_t states = std::size_t{1} << aut.n;
  for (std::size_t x = 0; x < states; ++x) {
    for (int v = 0; v < aut.n; ++v) {
      edges.push_back({format_state(static_cast<State>(x), aut.n),
                       format_state(aut.successor[v][x], aut.n), v + 1});
    }
  }
  doc["edges"] = edges;
  return doc.dump();
}

StateAutomaton state_automaton_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] {
    StateAutomaton aut;
    aut.n = doc.at("n").get<int>();
    if (aut.n < 0 || aut.n > 16) throw InvalidInput("n out of range");
    const std::size_t states = std::size_t{1} << aut.n;
    aut.successor.assign(aut.n, std::vector<State>(states, 0));
    std::vector<char> seen(states * aut.n, 0);
    for (const auto& e : doc.at("edges")) {
      const State x = state_from(e.at(0), aut.n);
      const int label = e.at(2).get<int>();
      if (label < 1 || label > aut.n) throw InvalidInput("label out of range");
      char& flag = seen[x * aut.n + (label - 1)];
      if (flag) throw InvalidInput("edge listed twice");
      flag = 1;
      aut.successor[label - 1][x] = state_from(e.at(1), aut.n);
    }
    for (char s : seen) {
      if (!s) throw InvalidInput("automaton must list every labeled edge");
    }
    return aut;
  });
}

std::string state_automaton_to_dot(const StateAutomaton& aut) {
  std::ostringstream out;
  out << "digraph state_automaton {\n";
  const std::size_t states = std::size_t{1} << aut.n;
  for (std::size_t x = 0; x < states; ++x) {
    for (int v = 0; v < aut.n; ++v) {
      out << "  " << quoted(format_state(static_cast<State>(x), aut.n))
          << " -> " << quoted(format_state(aut.successor[v][x], aut.n))
          << " [label=\"" << v + 1 << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string root_automaton_to_json(const RootAutomaton& aut) {
  Json doc;
  doc["rank"] = aut.roots.empty() ? 0 : aut.roots.front().size();
  Json roots = Json::array();
  for (std::size_t k = 0; k < aut.roots.size(); ++k) {
    Json coords = Json::array();
    for (const auto& x : aut.roots[k]) coords.push_back(scalar_json(x));
    Json root;
    root["coords"] = coords;
    root["positive"] = aut.signs[k] == RootSign::kPositive;
    roots.push_back(root);
  }
  doc["roots"] = roots;
  Json edges = Json::array();
  for (const auto& a : aut.arcs) {
    edges.push_back({a.from, a.to, a.generator + 1});
  }
  doc["edges"] = edges;
  Json hasse = Json::array();
  for (auto [lo, hi] : aut.hasse) hasse.push_back({lo, hi});
  doc["hasse"] = hasse;
  return doc.dump();
}

RootAutomaton root_automaton_from_json(std::string_view text) {
  const Json doc = parse_document(text);
  return guarded([&] {
    RootAutomaton aut;
    const auto rank = doc.at("rank").get<std::size_t>();
    for (const auto& r : doc.at("roots")) {
      FieldVector z;
      for (const auto& c : r.at("coords")) z.push_back(scalar_from(c));
      if (z.size() != rank) throw InvalidInput("root length differs from rank");
      aut.roots.push_back(std::move(z));
      aut.signs.push_back(r.at("positive").get<bool>() ? RootSign::kPositive
                                                       : RootSign::kNegative);
    }
    const std::size_t total = aut.roots.size();
    for (const auto& e : doc.at("edges")) {
      RootAutomaton::Arc a{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                           e.at(2).get<int>() - 1};
      if (a.from >= total || a.to >= total || a.generator < 0 ||
          static_cast<std::size_t>(a.generator) >= rank) {
        throw InvalidInput("root automaton edge out of range");
      }
      aut.arcs.push_back(a);
    }
    for (const auto& h : doc.at("hasse")) {
      const auto lo = h.at(0).get<std::size_t>();
      const auto hi = h.at(1).get<std::size_t>();
      if (lo >= total || hi >= total) throw InvalidInput("hasse pair out of range");
      aut.hasse.emplace_back(lo, hi);
    }
    return aut;
  });
}

std::string root_automaton_to_dot(const CoxeterSystem& sys,
                                  const RootAutomaton& aut) {
  std::ostringstream out;
  out << "digraph root_automaton {\n";
  const char* sides[] = {"positive", "negative"};
  for (int side = 0; side < 2; ++side) {
    const RootSign want = side == 0 ? RootSign::kPositive : RootSign::kNegative;
    out << "  subgraph cluster_" << sides[side] << " {\n"
        << "    label=\"" << (side == 0 ? "Phi+" : "Phi-") << "\";\n";
    for (std::size_t k = 0; k < aut.roots.size(); ++k) {
      if (aut.signs[k] != want) continue;
      out << "    r" << k << " [label=" << quoted(to_string(aut.roots[k]))
          << ", shape=" << (side == 0 ? "box" : "ellipse") << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& a : aut.arcs) {
    out << "  r" << a.from << " -> r" << a.to << " [label="
        << quoted(sys.graph().vertex_name(a.generator));
    if (aut.signs[a.from] != aut.signs[a.to]) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string eca_classification_to_json(const EcaClassification& c) {
  Json doc;
  doc["k"] = c.k;
  doc["n"] = c.n;
  doc["pi_independent"] = c.pi_independent;
  doc["per_size"] = c.per_size;
  return doc.dump();
}

std::string dynamics_report_to_json(int k, const RestrictedDynamics& dyn,
                                    const GroupFingerprint& fp,
                                    const QuotientPresentation& q) {
  Json doc;
  if (k >= 0) doc["k"] = k;
  doc["n"] = dyn.n;
  doc["per_size"] = dyn.points.size();
  doc["order"] = fp.order.get_str();
  doc["abelian"] = fp.is_abelian;
  doc["exponent_two"] = fp.exponent_two;
  doc["all_generators_involutions"] = fp.all_generators_involutions;
  doc["coxeter_matrix"] = q.matrix;
  doc["consistent_with"] = fp.matched_names;
  auto one_based = [](const std::vector<int>& vs) {
    std::vector<int> out;
    for (int v : vs) out.push_back(v + 1);
    return out;
  };
  Json merged = Json::array();
  for (const auto& m : q.merged) merged.push_back(one_based(m));
  doc["merged_generators"] = merged;
  doc["trivial_generators"] = one_based(q.trivial);
  doc["degenerate"] = q.degenerate;
  return doc.dump();
}

}  // namespace coxsds::io
