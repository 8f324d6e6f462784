#include "oeg/stringmod.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "oeg/error.hpp"

namespace oeg {

namespace {

std::uint64_t support_of(std::span<const int> vertices) {
  std::uint64_t s = 0;
  for (int v : vertices) s |= std::uint64_t{1} << v;
  return s;
}

template <class T>
bool contains_run(const std::vector<T>& hay, const std::vector<T>& needle) {
  if (needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

Algebra Algebra::bound_quiver(int vertex_count, std::vector<Arrow> arrows,
                              std::vector<std::vector<int>> relations, AlgebraKind kind) {
  if (vertex_count <= 0 || vertex_count > 64) throw DomainError("algebra needs 1..64 vertices");
  Algebra a;
  a.kind_ = kind;
  a.n_ = vertex_count;
  a.arrows_ = std::move(arrows);
  a.relations_ = std::move(relations);
  a.arrow_id_.assign(vertex_count, std::vector<int>(vertex_count, -1));
  for (int id = 0; id < static_cast<int>(a.arrows_.size()); ++id) {
    const Arrow& ar = a.arrows_[id];
    if (a.arrow_id_[ar.source][ar.target] >= 0 || a.arrow_id_[ar.target][ar.source] >= 0)
      throw UnsupportedQuiver("string algebra needs at most one arrow between two vertices");
    a.arrow_id_[ar.source][ar.target] = id;
  }
  for (const auto& r : a.relations_)
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (a.arrows_[r[i]].target != a.arrows_[r[i + 1]].source)
        throw InputError("relation is not a path");
  std::sort(a.relations_.begin(), a.relations_.end());
  a.enumerate_strings();
  a.build_tables();
  return a;
}

Algebra Algebra::from_quiver(const IceQuiver& q) {
  const int n = q.mutable_count();
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.at(i, j) > 0) arrows.push_back({i, j});
  const QuiverClass c = classify(q);
  if (std::holds_alternative<Cyclic>(c)) {
    // Walk the cycle once to list its arrows in order.
    std::vector<int> next(n, -1), id_from(n, -1);
    for (int id = 0; id < static_cast<int>(arrows.size()); ++id) {
      next[arrows[id].source] = arrows[id].target;
      id_from[arrows[id].source] = id;
    }
    std::vector<std::vector<int>> rel;
    for (int s = 0; s < n; ++s) {
      std::vector<int> path;
      for (int v = s; static_cast<int>(path.size()) < n - 1; v = next[v]) path.push_back(id_from[v]);
      rel.push_back(std::move(path));
    }
    return bound_quiver(n, std::move(arrows), std::move(rel), AlgebraKind::cyclic);
  }
  if (!std::holds_alternative<TypeA>(c))
    throw UnsupportedQuiver("quiver is neither of type A nor an oriented cycle");
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int k = 0; k < static_cast<int>(arrows.size()); ++k) id[arrows[k].source][arrows[k].target] = k;
  std::vector<std::vector<int>> rel;
  for (const Arrow& a : arrows)
    for (const Arrow& b : arrows)
      if (b.source == a.target && id[b.target][a.source] >= 0)
        rel.push_back({id[a.source][a.target], id[b.source][b.target]});
  return bound_quiver(n, std::move(arrows), std::move(rel), AlgebraKind::type_a);
}

Algebra Algebra::cyclic(int n) {
  if (n < 3) throw DomainError("cyclic algebra needs n >= 3");
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back({i, (i + 1) % n});
  std::sort(arrows.begin(), arrows.end(),
            [](Arrow x, Arrow y) { return std::pair(x.source, x.target) < std::pair(y.source, y.target); });
  std::vector<int> out(n);
  for (int id = 0; id < n; ++id) out[arrows[id].source] = id;
  std::vector<std::vector<int>> rel;
  for (int s = 0; s < n; ++s) {
    std::vector<int> path;
    for (int k = 0; k < n - 1; ++k) path.push_back(out[(s + k) % n]);
    rel.push_back(std::move(path));
  }
  return bound_quiver(n, std::move(arrows), std::move(rel), AlgebraKind::cyclic);
}

Algebra Algebra::opposite() const {
  std::vector<Arrow> arrows;
  for (const Arrow& a : arrows_) arrows.push_back({a.target, a.source});
  std::vector<int> order(arrows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(arrows[x].source, arrows[x].target) < std::pair(arrows[y].source, arrows[y].target);
  });
  std::vector<int> new_id(arrows.size());
  std::vector<Arrow> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<int>(i);
    sorted.push_back(arrows[order[i]]);
  }
  std::vector<std::vector<int>> rel;
  for (const auto& r : relations_) {
    std::vector<int> rev;
    for (auto it = r.rbegin(); it != r.rend(); ++it) rev.push_back(new_id[*it]);
    rel.push_back(std::move(rev));
  }
  return bound_quiver(n_, std::move(sorted), std::move(rel), kind_);
}

std::optional<int> Algebra::arrow_between(int from, int to) const {
  if (arrow_id_[from][to] >= 0) return arrow_id_[from][to];
  return std::nullopt;
}

namespace {

// Checks a walk (vertices may repeat) for adjacency, backtracking and
// forbidden subpaths within maximal runs of same-direction letters.
bool valid_walk(const std::vector<std::vector<int>>& arrow_id, const std::vector<std::vector<int>>& relations,
                std::span<const int> walk) {
  std::vector<int> run;
  int run_dir = 0;
  auto run_ok = [&]() {
    if (run.empty()) return true;
    std::vector<int> path = run;
    if (run_dir < 0) std::reverse(path.begin(), path.end());
    for (const auto& r : relations)
      if (contains_run(path, r)) return false;
    return true;
  };
  int prev_arrow = -1;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const int a = walk[i], b = walk[i + 1];
    int id, dir;
    if (arrow_id[a][b] >= 0) id = arrow_id[a][b], dir = 1;
    else if (arrow_id[b][a] >= 0) id = arrow_id[b][a], dir = -1;
    else return false;
    if (id == prev_arrow) return false;
    prev_arrow = id;
    if (dir != run_dir) {
      if (!run_ok()) return false;
      run.clear();
      run_dir = dir;
    }
    run.push_back(id);
  }
  return run_ok();
}

}  // namespace

bool Algebra::is_string(std::span<const int> vertices) const {
  if (vertices.empty()) return false;
  for (int v : vertices)
    if (v < 0 || v >= n_) return false;
  if (static_cast<std::size_t>(std::popcount(support_of(vertices))) != vertices.size()) return false;
  return valid_walk(arrow_id_, relations_, vertices);
}

void Algebra::enumerate_strings() {
  std::set<std::vector<int>> found;
  std::vector<int> walk;
  std::vector<bool> on(n_, false);
  auto dfs = [&](auto&& self, int v) -> void {
    std::vector<int> rev(walk.rbegin(), walk.rend());
    found.insert(std::min(walk, rev));
    for (int u = 0; u < n_; ++u) {
      if (arrow_id_[v][u] < 0 && arrow_id_[u][v] < 0) continue;
      walk.push_back(u);
      const bool ok = valid_walk(arrow_id_, relations_, walk);
      if (ok && on[u])
        throw UnsupportedQuiver("string revisits vertex " + std::to_string(u + 1) +
                                "; modules are not multiplicity-free");
      if (ok) {
        on[u] = true;
        self(self, u);
        on[u] = false;
      }
      walk.pop_back();
    }
  };
  for (int s = 0; s < n_; ++s) {
    walk = {s};
    on[s] = true;
    dfs(dfs, s);
    on[s] = false;
  }
  std::vector<std::vector<int>> words(found.begin(), found.end());
  std::stable_sort(words.begin(), words.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  if (words.size() > 64) throw DomainError("more than 64 indecomposables");
  modules_.clear();
  std::set<std::uint64_t> supports;
  for (const auto& w : words) {
    Indecomposable m;
    m.id = static_cast<int>(modules_.size());
    m.vertices = w;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (arrow_id_[w[i]][w[i + 1]] >= 0) m.letters.push_back({arrow_id_[w[i]][w[i + 1]], true});
      else m.letters.push_back({arrow_id_[w[i + 1]][w[i]], false});
    }
    m.dim.assign(n_, 0);
    for (int v : w) m.dim[v] = 1;
    m.support = support_of(w);
    if (!supports.insert(m.support).second)
      throw UnsupportedQuiver("two strings share a support; support does not determine the module");
    modules_.push_back(std::move(m));
  }
}

std::optional<int> Algebra::find_by_support(std::uint64_t support) const {
  for (const auto& m : modules_)
    if (m.support == support) return m.id;
  return std::nullopt;
}

std::optional<int> Algebra::find(std::span<const int> vertices) const {
  if (!is_string(vertices)) return std::nullopt;
  return find_by_support(support_of(vertices));
}

std::string Algebra::name(int id) const {
  const auto& m = modules_[id];
  std::string s = std::to_string(m.vertices[0] + 1);
  for (std::size_t i = 0; i < m.letters.size(); ++i)
    s += (m.letters[i].direct ? "->" : "<-") + std::to_string(m.vertices[i + 1] + 1);
  return s;
}

std::optional<std::pair<int, int>> Algebra::locate(int w, std::uint64_t support) const {
  const auto& vs = modules_[w].vertices;
  int a = -1, b = -1;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i)
    if ((support >> vs[i]) & 1u) {
      if (a < 0) a = i;
      b = i;
    }
  if (a < 0 || b - a + 1 != std::popcount(support)) return std::nullopt;
  if ((support & ~modules_[w].support) != 0) return std::nullopt;
  return std::pair{a, b};
}

bool Algebra::boundary_ok(int w, std::pair<int, int> iv, bool quotient) const {
  const auto& m = modules_[w];
  auto end_ok = [&](int inner, int outer) {
    const Arrow& ar = arrows_[m.letters[std::min(inner, outer)].arrow];
    return quotient ? ar.source == m.vertices[inner] : ar.target == m.vertices[inner];
  };
  if (iv.first > 0 && !end_ok(iv.first, iv.first - 1)) return false;
  if (iv.second + 1 < static_cast<int>(m.vertices.size()) && !end_ok(iv.second, iv.second + 1)) return false;
  return true;
}

std::optional<std::vector<int>> Algebra::compute_extension(int top, int socle_side) const {
  const auto& w1 = modules_[top];
  const auto& w2 = modules_[socle_side];
  std::set<std::vector<int>> candidates;
  auto add = [&](std::vector<int> middle) {
    std::sort(middle.begin(), middle.end());
    candidates.insert(std::move(middle));
  };
  auto lookup = [&](const std::vector<int>& seq) -> std::optional<int> {
    if (!is_string(seq)) return std::nullopt;
    return find_by_support(support_of(seq));
  };
  const std::vector<int> r1(w1.vertices.rbegin(), w1.vertices.rend());
  const std::vector<int> r2(w2.vertices.rbegin(), w2.vertices.rend());

  if ((w1.support & w2.support) == 0) {
    // Arrow gluing: socle_side <-alpha- top, alpha from an end of top to an end of socle_side.
    for (const auto* s2 : {&w2.vertices, &r2})
      for (const auto* s1 : {&w1.vertices, &r1}) {
        if (arrow_id_[s1->front()][s2->back()] < 0) continue;
        std::vector<int> seq = *s2;
        seq.insert(seq.end(), s1->begin(), s1->end());
        if (auto id = lookup(seq)) add({*id});
      }
  } else {
    // Overlap gluing at a common substring m, a submodule of top and a quotient
    // of socle_side: top = A m B, socle_side = C m D, middle = AmD + CmB.
    const auto& v2 = w2.vertices;
    for (int a2 = 0; a2 < static_cast<int>(v2.size()); ++a2)
      for (int b2 = a2; b2 < static_cast<int>(v2.size()); ++b2) {
        const std::uint64_t ms = support_of(std::span(v2).subspan(a2, b2 - a2 + 1));
        if ((ms & ~w1.support) != 0) continue;
        const auto iv1 = locate(top, ms);
        if (!iv1) continue;
        if (!boundary_ok(socle_side, {a2, b2}, true) || !boundary_ok(top, *iv1, false)) continue;
        const std::vector<int> m(v2.begin() + a2, v2.begin() + b2 + 1);
        const std::vector<int> C(v2.begin(), v2.begin() + a2);
        const std::vector<int> D(v2.begin() + b2 + 1, v2.end());
        for (const auto* s1 : {&w1.vertices, &r1}) {
          const auto it = std::search(s1->begin(), s1->end(), m.begin(), m.end());
          if (it == s1->end()) continue;
          const std::vector<int> A(s1->begin(), it);
          const std::vector<int> B(it + static_cast<std::ptrdiff_t>(m.size()), s1->end());
          if ((A.empty() && C.empty()) || (B.empty() && D.empty())) continue;
          std::vector<int> w3 = A, w4 = C;
          w3.insert(w3.end(), m.begin(), m.end());
          w3.insert(w3.end(), D.begin(), D.end());
          w4.insert(w4.end(), m.begin(), m.end());
          w4.insert(w4.end(), B.begin(), B.end());
          const auto i3 = lookup(w3), i4 = lookup(w4);
          if (i3 && i4) add({*i3, *i4});
        }
      }
  }
  if (candidates.empty()) return std::nullopt;
  if (candidates.size() > 1)
    throw DomainError("extension space of " + name(top) + " by " + name(socle_side) +
                      " has more than one gluing");
  return *candidates.begin();
}

void Algebra::build_tables() {
  const int N = size();
  quot_.assign(N, 0);
  sub_.assign(N, 0);
  for (int w = 0; w < N; ++w)
    for (int u = 0; u < N; ++u) {
      const auto iv = locate(w, modules_[u].support);
      if (!iv) continue;
      if (boundary_ok(w, *iv, true)) quot_[w] |= bit(u);
      if (boundary_ok(w, *iv, false)) sub_[w] |= bit(u);
    }
  hom_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int u = 0; u < N; ++u)
    for (int v = 0; v < N; ++v) hom_[idx(u, v)] = std::popcount(quot_[u] & sub_[v]);
  ext_.assign(static_cast<std::size_t>(N) * N, std::nullopt);
  ext_mask_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int t = 0; t < N; ++t)
    for (int s = 0; s < N; ++s) {
      ext_[idx(t, s)] = compute_extension(t, s);
      if (ext_[idx(t, s)])
        for (int z : *ext_[idx(t, s)]) ext_mask_[idx(t, s)] |= bit(z);
    }
}

std::optional<int> Algebra::cyclic_module(int socle, int length) const {
  for (int id = 0; id < size(); ++id)
    if (auto c = cyclic_coordinates(id); c && c->first == socle && c->second == length) return id;
  return std::nullopt;
}

std::optional<std::pair<int, int>> Algebra::cyclic_coordinates(int id) const {
  const auto& m = modules_[id];
  if (m.letters.empty()) return std::pair{m.vertices[0], 1};
  const bool direct = m.letters[0].direct;
  for (const Letter& l : m.letters)
    if (l.direct != direct) return std::nullopt;
  const int socle = direct ? m.vertices.back() : m.vertices.front();
  return std::pair{socle, static_cast<int>(m.vertices.size())};
}

Mask fac(const Algebra& a, Mask x) {
  Mask r = 0;
  for (int i = 0; i < a.size(); ++i)
    if ((x >> i) & 1u) r |= a.quotients(i);
  return r;
}

Mask sub(const Algebra& a, Mask x) {
  Mask r = 0;
  for (int i = 0; i < a.size(); ++i)
    if ((x >> i) & 1u) r |= a.submodules(i);
  return r;
}

namespace {

Mask middles_of(const Algebra& a, Mask x) {
  Mask r = 0;
  for (int t = 0; t < a.size(); ++t) {
    if (!((x >> t) & 1u)) continue;
    for (int s = 0; s < a.size(); ++s)
      if ((x >> s) & 1u) r |= a.extension_middles(t, s);
  }
  return r;
}

}  // namespace

Mask extension_closure(const Algebra& a, Mask x) {
  for (;;) {
    const Mask next = x | middles_of(a, x);
    if (next == x) return x;
    x = next;
  }
}

bool is_torsion_class(const Algebra& a, Mask t) {
  return fac(a, t) == t && (middles_of(a, t) & ~t) == 0;
}

bool is_torsion_free_class(const Algebra& a, Mask f) {
  return sub(a, f) == f && (middles_of(a, f) & ~f) == 0;
}

std::vector<Mask> torsion_classes(const Algebra& a) {
  const int N = a.size();
  if (N > 26) throw DomainError("torsion_classes: too many indecomposables for the power-set scan");
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << N); ++s) {
    bool closed = true;
    for (int i = 0; i < N && closed; ++i)
      if ((s >> i) & 1u) closed = (a.quotients(i) & ~s) == 0;
    if (closed && (middles_of(a, s) & ~s) == 0) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Mask x, Mask y) { return std::popcount(x) < std::popcount(y); });
  return out;
}

FiniteLattice inclusion_lattice(const std::vector<Mask>& sets) {
  return FiniteLattice::from_order(static_cast<int>(sets.size()),
                                   [&](int i, int j) { return (sets[i] & ~sets[j]) == 0; });
}

Mask perp(const Algebra& a, Mask x, Side side) {
  Mask r = 0;
  for (int m = 0; m < a.size(); ++m) {
    bool zero = true;
    for (int t = 0; t < a.size() && zero; ++t)
      if ((x >> t) & 1u) zero = (side == Side::right ? a.hom_dim(t, m) : a.hom_dim(m, t)) == 0;
    if (zero) r |= bit(m);
  }
  return r;
}

Mask filt_join(const Algebra& a, Mask t, Mask u) {
  if (!is_torsion_class(a, t) || !is_torsion_class(a, u))
    throw DomainError("filt_join: arguments must be torsion classes");
  Mask x = t | u;
  for (;;) {
    const Mask next = fac(a, extension_closure(a, x));
    if (next == x) return x;
    x = next;
  }
}

Mask perp_join(const Algebra& a, Mask t, Mask u) {
  return perp(a, perp(a, t, Side::right) & perp(a, u, Side::right), Side::left);
}

std::vector<int> canonical_joinand_modules(const Algebra& a, Mask t) {
  std::vector<int> out;
  auto has_proper_sub_in_t = [&](int w) { return (a.submodules(w) & ~bit(w) & t) != 0; };
  for (int wi = 0; wi < a.size(); ++wi) {
    if (!((t >> wi) & 1u) || has_proper_sub_in_t(wi)) continue;
    bool ok = true;
    for (int w = 0; w < a.size() && ok; ++w) {
      if (w == wi || !((t >> w) & 1u) || !a.is_quotient(w, wi)) continue;
      ok = has_proper_sub_in_t(w);
    }
    if (ok) out.push_back(wi);
  }
  return out;
}

std::vector<Mask> canonical_joinands(const Algebra& a, Mask t) {
  std::vector<Mask> out;
  for (int w : canonical_joinand_modules(a, t)) out.push_back(a.quotients(w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_meetand_modules(const Algebra& a, Mask t) {
  const Algebra op = a.opposite();
  const Mask dual_class = transfer(a, op, perp(a, t, Side::right));
  std::vector<int> out;
  for (int w : canonical_joinand_modules(op, dual_class))
    out.push_back(*a.find_by_support(op.indecomposables()[w].support));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> canonical_meetands(const Algebra& a, Mask t) {
  std::vector<Mask> out;
  for (int w : canonical_meetand_modules(a, t)) out.push_back(perp(a, a.submodules(w), Side::left));
  std::sort(out.begin(), out.end());
  return out;
}

Mask transfer(const Algebra& from, const Algebra& to, Mask x) {
  Mask r = 0;
  for (int i = 0; i < from.size(); ++i) {
    if (!((x >> i) & 1u)) continue;
    const auto j = to.find_by_support(from.indecomposables()[i].support);
    if (!j) throw DomainError("transfer: no module with support of " + from.name(i));
    r |= bit(*j);
  }
  return r;
}

std::optional<std::vector<Mask>> torsion_class_labels(const Algebra& a, const OrientedExchangeGraph& g) {
  const int n = static_cast<int>(g.nodes().size());
  if (g.rank() != a.vertex_count()) return std::nullopt;
  std::map<std::vector<int>, int> by_dim;
  for (const auto& m : a.indecomposables()) by_dim.emplace(m.dim, m.id);
  std::vector<std::optional<Mask>> label(n);
  label[g.source_node()] = a.all();
  std::vector<int> queue{g.source_node()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int e : g.out_edges(u)) {
      const ExchangeEdge& edge = g.edges()[e];
      const auto row = g.nodes()[u].row(edge.vertex).subspan(g.rank());
      const auto it = by_dim.find(std::vector<int>(row.begin(), row.end()));
      if (it == by_dim.end()) return std::nullopt;
      const Mask brick = bit(it->second);
      if (!(*label[u] & brick)) return std::nullopt;
      const Mask lower = *label[u] & perp(a, brick, Side::left);
      if (label[edge.target] && *label[edge.target] != lower) return std::nullopt;
      if (!label[edge.target]) {
        label[edge.target] = lower;
        queue.push_back(edge.target);
      }
    }
  }
  std::vector<Mask> out;
  for (const auto& l : label) {
    if (!l || !is_torsion_class(a, *l)) return std::nullopt;
    out.push_back(*l);
  }
  // Bijective onto tors, and edges are exactly the covers of tors.
  std::vector<Mask> tors = torsion_classes(a);
  std::vector<Mask> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  std::sort(tors.begin(), tors.end());
  if (sorted != tors) return std::nullopt;
  const FiniteLattice l = inclusion_lattice(out);
  if (l.cover_count() != static_cast<int>(g.edges().size())) return std::nullopt;
  for (const ExchangeEdge& e : g.edges()) {
    const auto& lc = l.lower_covers(e.source);
    if (std::find(lc.begin(), lc.end(), e.target) == lc.end()) return std::nullopt;
  }
  return out;
}

std::string format_set(const Algebra& a, Mask x) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < a.size(); ++i)
    if ((x >> i) & 1u) {
      if (!first) s += ", ";
      first = false;
      s += a.name(i);
    }
  return s + "}";
}

}  // namespace oeg
