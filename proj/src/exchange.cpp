#include "oeg/exchange.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "oeg/error.hpp"

namespace oeg {

Color vertex_color(const IceQuiver& node, int k) {
  bool pos = false, neg = false;
  for (int j = node.mutable_count(); j < node.vertex_count(); ++j) {
    pos = pos || node.at(k, j) > 0;
    neg = neg || node.at(k, j) < 0;
  }
  if (pos == neg)
    throw SignCoherenceViolation("c-vector of vertex " + std::to_string(k + 1) +
                                 (pos ? " has mixed signs" : " is zero"));
  return pos ? Color::green : Color::red;
}

CMatrix c_matrix(const IceQuiver& node) {
  CMatrix c;
  for (int i = 0; i < node.mutable_count(); ++i) {
    const auto r = node.row(i);
    c.emplace_back(r.begin() + node.mutable_count(), r.end());
  }
  return c;
}

CMatrix canonical_c_matrix(const IceQuiver& node) {
  CMatrix c = c_matrix(node);
  std::sort(c.begin(), c.end());
  return c;
}

OrientedExchangeGraph::OrientedExchangeGraph(std::vector<IceQuiver> nodes, std::vector<int> initial_labels)
    : nodes_(std::move(nodes)), initial_labels_(std::move(initial_labels)) {
  if (nodes_.empty()) throw InputError("exchange graph has no nodes");
  rank_ = nodes_.front().mutable_count();
  const int n = rank_;
  std::map<IceQuiver, int> index;
  for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
    if (nodes_[u].mutable_count() != n || nodes_[u].vertex_count() != 2 * n)
      throw InputError("exchange graph node has the wrong shape");
    if (!index.emplace(nodes_[u], u).second) throw InputError("duplicate exchange graph node");
  }
  if (static_cast<int>(initial_labels_.size()) != n) throw InputError("initial labels have wrong length");

  out_.assign(nodes_.size(), {});
  std::vector<int> degree(nodes_.size(), 0), indeg(nodes_.size(), 0);
  for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
    if (canonical_form(nodes_[u]).quiver != nodes_[u]) throw InputError("node is not in canonical form");
    for (int k = 0; k < n; ++k) {
      const Color color = vertex_color(nodes_[u], k);
      const CanonicalForm cf = canonical_form(mutate(nodes_[u], k));
      const auto it = index.find(cf.quiver);
      if (it == index.end()) throw InputError("exchange graph is not closed under mutation");
      if (color != Color::green) continue;
      const int v = it->second;
      const int back = static_cast<int>(std::find(cf.permutation.begin(), cf.permutation.end(), k) -
                                        cf.permutation.begin());
      if (vertex_color(nodes_[v], back) != Color::red)
        throw SignCoherenceViolation("mutated vertex is not red at the target node");
      out_[u].push_back(static_cast<int>(edges_.size()));
      edges_.push_back({u, v, k, cf.permutation});
      ++degree[u];
      ++degree[v];
      ++indeg[v];
    }
  }
  for (int u = 0; u < static_cast<int>(nodes_.size()); ++u) {
    if (degree[u] != n) throw InputError("exchange graph node without exactly n incident edges");
    if (static_cast<int>(out_[u].size()) == n) {
      if (source_ >= 0) throw InputError("exchange graph has two all-green nodes");
      source_ = u;
    }
    if (out_[u].empty() && n > 0) sink_ = u;
  }
  if (n == 0) source_ = 0, sink_ = 0;
  if (source_ < 0) throw InputError("exchange graph has no all-green node");

  // Kahn's algorithm; a leftover node means a directed cycle.
  std::vector<int> stack{source_};
  std::size_t seen = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++seen;
    for (int e : out_[u])
      if (--indeg[edges_[e].target] == 0) stack.push_back(edges_[e].target);
  }
  if (seen != nodes_.size()) throw InputError("exchange graph has a directed cycle");
}

FiniteLattice OrientedExchangeGraph::as_lattice() const {
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : edges_) covers.emplace_back(e.source, e.target);
  return FiniteLattice::from_covers(static_cast<int>(nodes_.size()), covers);
}

OrientedExchangeGraph build_exchange_graph(const IceQuiver& q_hat, std::size_t node_cap) {
  const int n = q_hat.mutable_count();
  if (q_hat.vertex_count() != 2 * n) throw DomainError("build: expected a framed quiver (m = 2n)");
  for (int k = 0; k < n; ++k)
    if (vertex_color(q_hat, k) != Color::green) throw DomainError("build: initial node must be all green");

  const CanonicalForm start = canonical_form(q_hat);
  std::set<IceQuiver> seen{start.quiver};
  std::vector<IceQuiver> frontier{start.quiver};
  if (seen.size() > node_cap) throw NotFiniteType(node_cap);
  while (!frontier.empty()) {
    std::vector<IceQuiver> next;
    for (const IceQuiver& node : frontier)
      for (int k = 0; k < n; ++k) {
        vertex_color(node, k);
        IceQuiver c = canonical_form(mutate(node, k)).quiver;
        if (seen.count(c)) continue;
        if (seen.size() >= node_cap) throw NotFiniteType(node_cap);
        seen.insert(c);
        next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  // std::set iterates in canonical-form order, which fixes node indices.
  return OrientedExchangeGraph(std::vector<IceQuiver>(seen.begin(), seen.end()), start.permutation);
}

std::vector<CVector> positive_c_vectors(const OrientedExchangeGraph& g) {
  std::set<CVector> out;
  for (const IceQuiver& node : g.nodes())
    for (int k = 0; k < node.mutable_count(); ++k)
      if (vertex_color(node, k) == Color::green) out.insert(c_matrix(node)[k]);
  return {out.begin(), out.end()};
}

std::vector<GreenSequence> maximal_green_sequences(const OrientedExchangeGraph& g) {
  std::vector<GreenSequence> out;
  if (!g.sink_node()) return out;
  const int sink = *g.sink_node();
  GreenSequence seq;
  auto dfs = [&](auto&& self, int u, const std::vector<int>& labels) -> void {
    if (u == sink) {
      out.push_back(seq);
      return;
    }
    for (int e : g.out_edges(u)) {
      const ExchangeEdge& edge = g.edges()[e];
      std::vector<int> next(labels.size());
      for (std::size_t p = 0; p < next.size(); ++p) next[p] = labels[edge.relabel[p]];
      seq.push_back(labels[edge.vertex]);
      self(self, edge.target, next);
      seq.pop_back();
    }
  };
  dfs(dfs, g.source_node(), g.initial_labels());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> reverse_topological(const OrientedExchangeGraph& g) {
  std::vector<int> order;
  std::vector<int> state(g.nodes().size(), 0);
  auto dfs = [&](auto&& self, int u) -> void {
    state[u] = 1;
    for (int e : g.out_edges(u)) {
      const int v = g.edges()[e].target;
      if (!state[v]) self(self, v);
    }
    order.push_back(u);
  };
  for (int u = 0; u < static_cast<int>(g.nodes().size()); ++u)
    if (!state[u]) dfs(dfs, u);
  return order;
}

}  // namespace

std::uint64_t count_maximal_green_sequences(const OrientedExchangeGraph& g) {
  if (!g.sink_node()) return 0;
  std::vector<std::uint64_t> count(g.nodes().size(), 0);
  for (int u : reverse_topological(g)) {
    if (u == *g.sink_node()) {
      count[u] = 1;
      continue;
    }
    for (int e : g.out_edges(u))
      if (__builtin_add_overflow(count[u], count[g.edges()[e].target], &count[u]))
        throw OverflowError("maximal green sequence count overflows 64 bits");
  }
  return count[g.source_node()];
}

GreenLengthSet green_length_set(const OrientedExchangeGraph& g) {
  GreenLengthSet r;
  if (!g.sink_node()) return r;
  std::vector<std::set<int>> lengths(g.nodes().size());
  for (int u : reverse_topological(g)) {
    if (u == *g.sink_node()) {
      lengths[u] = {0};
      continue;
    }
    for (int e : g.out_edges(u))
      for (int len : lengths[g.edges()[e].target]) lengths[u].insert(len + 1);
  }
  const auto& s = lengths[g.source_node()];
  r.lengths.assign(s.begin(), s.end());
  r.is_interval = !r.lengths.empty() && r.lengths.back() - r.lengths.front() + 1 ==
                                            static_cast<int>(r.lengths.size());
  return r;
}

}  // namespace oeg
