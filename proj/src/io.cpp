#include "oeg/io.hpp"

#include <algorithm>
#include <sstream>

#include "oeg/error.hpp"

namespace oeg::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

json quiver_to_json(const IceQuiver& q) {
  return json{{"n", q.mutable_count()}, {"m", q.vertex_count()}, {"matrix", q.rows()}};
}

json quiver_to_arrow_json(const IceQuiver& q) {
  json frozen = json::array();
  for (int v = q.mutable_count(); v < q.vertex_count(); ++v) frozen.push_back(v + 1);
  json arrows = json::array();
  for (const Arrow& a : to_arrows(q)) arrows.push_back({a.source + 1, a.target + 1});
  return json{{"vertices", q.vertex_count()}, {"frozen", frozen}, {"arrows", arrows}};
}

IceQuiver quiver_from_json(const json& j) {
  if (!j.is_object()) throw InputError("quiver JSON must be an object");
  if (j.contains("matrix")) {
    const int n = get<int>(j, "n");
    const int m = get<int>(j, "m");
    const auto rows = get<std::vector<std::vector<IceQuiver::Entry>>>(j, "matrix");
    if (static_cast<int>(rows.size()) != n) throw InputError("matrix must have n rows");
    return IceQuiver::from_rows(m, rows);
  }
  const int vertices = get<int>(j, "vertices");
  std::vector<int> frozen = j.contains("frozen") ? get<std::vector<int>>(j, "frozen") : std::vector<int>{};
  std::sort(frozen.begin(), frozen.end());
  const int f = static_cast<int>(frozen.size());
  for (int i = 0; i < f; ++i)
    if (frozen[i] != vertices - f + 1 + i) throw InputError("frozen vertices must be the last vertices");
  std::vector<Arrow> arrows;
  for (const auto& a : get<std::vector<std::vector<int>>>(j, "arrows")) {
    if (a.size() != 2) throw InputError("arrow must be a [source, target] pair");
    arrows.push_back({a[0] - 1, a[1] - 1});
  }
  return from_arrows(vertices, f, arrows);
}

IceQuiver parse_quiver(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return quiver_from_json(j);
}

json exchange_to_json(const OrientedExchangeGraph& g) {
  json nodes = json::array();
  for (const IceQuiver& q : g.nodes())
    nodes.push_back({{"matrix", q.rows()}, {"c_matrix", canonical_c_matrix(q)}});
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.source, e.target, e.vertex + 1});
  json labels = json::array();
  for (int v : g.initial_labels()) labels.push_back(v + 1);
  json out{{"rank", g.rank()}, {"nodes", nodes}, {"edges", edges},
           {"source", g.source_node()}, {"initial_labels", labels}};
  out["sink"] = g.sink_node() ? json(*g.sink_node()) : json(nullptr);
  return out;
}

OrientedExchangeGraph exchange_from_json(const json& j) {
  const int n = get<int>(j, "rank");
  std::vector<IceQuiver> nodes;
  if (!j.contains("nodes") || !j.at("nodes").is_array()) throw InputError("missing field \"nodes\"");
  for (const auto& node : j.at("nodes")) {
    const auto rows = get<std::vector<std::vector<IceQuiver::Entry>>>(node, "matrix");
    if (static_cast<int>(rows.size()) != n) throw InputError("node matrix must have rank rows");
    nodes.push_back(IceQuiver::from_rows(2 * n, rows));
    if (get<CMatrix>(node, "c_matrix") != canonical_c_matrix(nodes.back()))
      throw InputError("c_matrix disagrees with matrix");
  }
  std::vector<int> labels;
  for (int v : get<std::vector<int>>(j, "initial_labels")) labels.push_back(v - 1);
  OrientedExchangeGraph g(std::move(nodes), std::move(labels));
  const auto edges = get<std::vector<std::vector<int>>>(j, "edges");
  if (edges.size() != g.edges().size()) throw InputError("edge list disagrees with the nodes");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = g.edges()[i];
    if (edges[i] != std::vector<int>{e.source, e.target, e.vertex + 1})
      throw InputError("edge list disagrees with the nodes");
  }
  return g;
}

std::string exchange_to_dot(const OrientedExchangeGraph& g) {
  std::ostringstream out;
  out << dot_header << "\n";
  out << "// node label: c-vector rows; edge label: mutated vertex (1-based, source labeling)\n";
  out << "digraph exchange {\n";
  for (int u = 0; u < static_cast<int>(g.nodes().size()); ++u) {
    out << "  n" << u << " [label=\"";
    const CMatrix c = c_matrix(g.nodes()[u]);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << "\\n";
      out << "(";
      for (std::size_t k = 0; k < c[i].size(); ++k) out << (k ? "," : "") << c[i][k];
      out << ")";
    }
    out << "\"];\n";
  }
  for (const auto& e : g.edges())
    out << "  n" << e.source << " -> n" << e.target << " [label=\"" << e.vertex + 1
        << "\", color=green];\n";
  out << "}\n";
  return out.str();
}

json lattice_to_json(const FiniteLattice& l) {
  json covers = json::array();
  for (const auto& [a, b] : l.covers()) covers.push_back({a, b});
  return json{{"n", l.size()}, {"covers", covers}};
}

FiniteLattice lattice_from_json(const json& j) {
  const int n = get<int>(j, "n");
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : get<std::vector<std::vector<int>>>(j, "covers")) {
    if (c.size() != 2) throw InputError("cover must be a [lower, upper] pair");
    covers.emplace_back(c[0], c[1]);
  }
  return FiniteLattice::from_covers(n, covers);
}

std::string lattice_to_dot(const FiniteLattice& l, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << dot_header << "\n";
  out << "// node label: element label; edges are covers, drawn upward\n";
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (int x = 0; x < l.size(); ++x) {
    std::string label = x < static_cast<int>(labels.size()) ? labels[x] : std::to_string(x);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  e" << x << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& [a, b] : l.covers()) out << "  e" << a << " -> e" << b << ";\n";
  out << "}\n";
  return out.str();
}

json indecomposables_to_json(const Algebra& a) {
  json out = json::array();
  for (const auto& m : a.indecomposables())
    out.push_back({{"id", m.id + 1}, {"word", a.name(m.id)}, {"dim", m.dim}});
  return out;
}

std::vector<int> indecomposables_from_json(const Algebra& a, const json& j) {
  if (!j.is_array()) throw InputError("indecomposable listing must be an array");
  std::vector<int> ids;
  for (const auto& e : j) {
    const auto dim = get<std::vector<int>>(e, "dim");
    if (static_cast<int>(dim.size()) != a.vertex_count()) throw InputError("dim has wrong length");
    std::uint64_t support = 0;
    for (int v = 0; v < a.vertex_count(); ++v) {
      if (dim[v] != 0 && dim[v] != 1) throw InputError("dim entries must be 0 or 1");
      if (dim[v]) support |= std::uint64_t{1} << v;
    }
    const auto id = a.find_by_support(support);
    if (!id || a.name(*id) != get<std::string>(e, "word") || get<int>(e, "id") != *id + 1)
      throw InputError("listing entry does not match a module of the algebra");
    ids.push_back(*id);
  }
  return ids;
}

json closure_space_to_json(const TripleClosureSpace& s) {
  json prods = json::array();
  for (const Production& p : s.productions()) prods.push_back({p.a + 1, p.b + 1, p.c + 1});
  json order = json::array();
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (s.precedes(x, y)) order.push_back({x + 1, y + 1});
  return json{{"elements", s.labels()}, {"productions", prods}, {"order", order}};
}

TripleClosureSpace closure_space_from_json(const json& j) {
  auto labels = get<std::vector<std::string>>(j, "elements");
  const int n = static_cast<int>(labels.size());
  std::vector<Production> prods;
  for (const auto& p : get<std::vector<std::vector<int>>>(j, "productions")) {
    if (p.size() != 3) throw InputError("production must be [a, b, c]");
    prods.push_back({p[0] - 1, p[1] - 1, p[2] - 1});
  }
  std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
  for (const auto& p : get<std::vector<std::vector<int>>>(j, "order")) {
    if (p.size() != 2 || p[0] < 1 || p[1] < 1 || p[0] > n || p[1] > n) throw InputError("bad order pair");
    prec[p[0] - 1][p[1] - 1] = true;
  }
  return TripleClosureSpace(std::move(labels), std::move(prods), std::move(prec));
}

json module_set_to_json(const Algebra& a, Mask x) {
  json out = json::array();
  for (int i = 0; i < a.size(); ++i)
    if ((x >> i) & 1u) out.push_back(i + 1);
  return out;
}

}  // namespace oeg::io
