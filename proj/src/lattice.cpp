#include "oeg/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>

#include "oeg/error.hpp"

namespace oeg {

namespace {

using Bits = std::vector<std::uint64_t>;

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

FiniteLattice FiniteLattice::build(int size, std::vector<std::uint64_t> up) {
  FiniteLattice l;
  l.n_ = size;
  l.words_ = words_for(size);
  l.up_ = std::move(up);
  const int n = size;
  const int w = l.words_;
  if (n == 0) throw InputError("a lattice needs at least one element");

  std::vector<std::uint64_t> down(static_cast<std::size_t>(n) * w, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.leq(x, y)) {
        if (x != y && l.leq(y, x)) throw InputError("order relation is cyclic");
        down[static_cast<std::size_t>(y) * w + x / 64] |= std::uint64_t{1} << (x % 64);
      }

  std::vector<int> up_count(n), down_count(n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < w; ++k) {
      up_count[x] += std::popcount(l.up_[l.idx(x, k)]);
      down_count[x] += std::popcount(down[static_cast<std::size_t>(x) * w + k]);
    }
  }

  // Covers: y covers x iff x < y and nothing lies strictly between.
  l.upper_.assign(n, {});
  l.lower_.assign(n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !l.leq(x, y)) continue;
      bool between = false;
      for (int k = 0; k < w && !between; ++k) {
        std::uint64_t mid = l.up_[l.idx(x, k)] & down[static_cast<std::size_t>(y) * w + k];
        if (k == x / 64) mid &= ~(std::uint64_t{1} << (x % 64));
        if (k == y / 64) mid &= ~(std::uint64_t{1} << (y % 64));
        between = mid != 0;
      }
      if (!between) {
        l.upper_[x].push_back(y);
        l.lower_[y].push_back(x);
      }
    }

  for (int x = 0; x < n; ++x) {
    if (down_count[x] == 1 && l.bottom_ < 0) l.bottom_ = x;
    if (up_count[x] == 1 && l.top_ < 0) l.top_ = x;
  }

  // Elements sorted by down-set size form a linear extension.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_count[a] < down_count[b]; });
  l.rank_.assign(n, 0);
  for (int x : order)
    for (int y : l.upper_[x]) l.rank_[y] = std::max(l.rank_[y], l.rank_[x] + 1);

  // The least element of an up-set U is the unique u in U with up(u) = U.
  l.join_.assign(static_cast<std::size_t>(n) * n, -1);
  l.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  Bits u(w);
  auto least_of = [&](const std::vector<std::uint64_t>& rows, const std::vector<int>& counts,
                      std::size_t ra, std::size_t rb) -> int {
    int total = 0;
    for (int k = 0; k < w; ++k) {
      u[k] = rows[ra + k] & rows[rb + k];
      total += std::popcount(u[k]);
    }
    for (int k = 0; k < w; ++k) {
      std::uint64_t bits = u[k];
      while (bits) {
        const int c = k * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (counts[c] != total) continue;
        bool same = true;
        for (int t = 0; t < w && same; ++t) same = rows[static_cast<std::size_t>(c) * w + t] == u[t];
        if (same) return c;
      }
    }
    return -1;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int j = least_of(l.up_, up_count, l.idx(x, 0), l.idx(y, 0));
      if (j < 0)
        throw NotALattice("elements " + std::to_string(x) + " and " + std::to_string(y) +
                              " have no join",
                          x, y);
      const int m = least_of(down, down_count, static_cast<std::size_t>(x) * w,
                             static_cast<std::size_t>(y) * w);
      if (m < 0)
        throw NotALattice("elements " + std::to_string(x) + " and " + std::to_string(y) +
                              " have no meet",
                          x, y);
      l.join_[static_cast<std::size_t>(x) * n + y] = l.join_[static_cast<std::size_t>(y) * n + x] = j;
      l.meet_[static_cast<std::size_t>(x) * n + y] = l.meet_[static_cast<std::size_t>(y) * n + x] = m;
    }
  return l;
}

FiniteLattice FiniteLattice::from_covers(int size, std::span<const std::pair<int, int>> covers) {
  if (size <= 0) throw InputError("a lattice needs at least one element");
  std::vector<std::vector<int>> succ(size);
  std::vector<int> indeg(size, 0);
  for (const auto& [a, b] : covers) {
    if (a < 0 || b < 0 || a >= size || b >= size) throw InputError("cover index out of range");
    if (a == b) throw InputError("cover relation has a loop");
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> topo;
  std::vector<int> queue;
  for (int x = 0; x < size; ++x)
    if (indeg[x] == 0) queue.push_back(x);
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    topo.push_back(x);
    for (int y : succ[x])
      if (--indeg[y] == 0) queue.push_back(y);
  }
  if (static_cast<int>(topo.size()) != size) throw InputError("cover relation has a cycle");
  const int w = words_for(size);
  std::vector<std::uint64_t> up(static_cast<std::size_t>(size) * w, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int x = *it;
    up[static_cast<std::size_t>(x) * w + x / 64] |= std::uint64_t{1} << (x % 64);
    for (int y : succ[x])
      for (int k = 0; k < w; ++k)
        up[static_cast<std::size_t>(x) * w + k] |= up[static_cast<std::size_t>(y) * w + k];
  }
  return build(size, std::move(up));
}

FiniteLattice FiniteLattice::from_order(int size, const std::function<bool(int, int)>& leq) {
  if (size <= 0) throw InputError("a lattice needs at least one element");
  const int w = words_for(size);
  std::vector<std::uint64_t> up(static_cast<std::size_t>(size) * w, 0);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (x == y || leq(x, y)) up[static_cast<std::size_t>(x) * w + y / 64] |= std::uint64_t{1} << (y % 64);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (!((up[static_cast<std::size_t>(x) * w + y / 64] >> (y % 64)) & 1u)) continue;
      for (int k = 0; k < w; ++k)
        if (up[static_cast<std::size_t>(y) * w + k] & ~up[static_cast<std::size_t>(x) * w + k])
          throw InputError("order relation is not transitive");
    }
  return build(size, std::move(up));
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y : upper_[x]) out.emplace_back(x, y);
  return out;
}

int FiniteLattice::cover_count() const {
  int c = 0;
  for (const auto& u : upper_) c += static_cast<int>(u.size());
  return c;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (lower_[x].size() == 1) out.push_back(x);
  return out;
}

std::vector<int> FiniteLattice::meet_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (upper_[x].size() == 1) out.push_back(x);
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n_) * words_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(y, x)) up[idx(x, y / 64)] |= std::uint64_t{1} << (y % 64);
  return build(n_, std::move(up));
}

SemidistributivityResult check_semidistributive(const FiniteLattice& l) {
  SemidistributivityResult r;
  const int n = l.size();
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x) {
      const int xz = l.join(x, z);
      const int xmz = l.meet(x, z);
      for (int y = x + 1; y < n; ++y) {
        if (r.join_semidistributive && l.join(y, z) == xz && l.join(l.meet(x, y), z) != xz) {
          r.join_semidistributive = false;
          r.join_witness = Witness{x, y, z};
        }
        if (r.meet_semidistributive && l.meet(y, z) == xmz && l.meet(l.join(x, y), z) != xmz) {
          r.meet_semidistributive = false;
          r.meet_witness = Witness{x, y, z};
        }
      }
      if (!r.join_semidistributive && !r.meet_semidistributive) return r;
    }
  return r;
}

bool is_semidistributive(const FiniteLattice& l) { return check_semidistributive(l).ok(); }

std::optional<std::pair<std::vector<int>, std::vector<int>>> polygon_chains(const FiniteLattice& l,
                                                                            int x, int y) {
  if (!l.less(x, y)) return std::nullopt;
  std::vector<std::vector<int>> chains;
  std::vector<int> cur{x};
  bool too_many = false;
  auto dfs = [&](auto&& self, int v) -> void {
    if (too_many) return;
    if (v == y) {
      if (chains.size() == 2) {
        too_many = true;
        return;
      }
      chains.push_back(cur);
      return;
    }
    for (int u : l.upper_covers(v)) {
      if (!l.leq(u, y)) continue;
      cur.push_back(u);
      self(self, u);
      cur.pop_back();
    }
  };
  dfs(dfs, x);
  if (too_many || chains.size() != 2) return std::nullopt;
  int interval = 0;
  for (int v = 0; v < l.size(); ++v)
    if (l.leq(x, v) && l.leq(v, y)) ++interval;
  const auto& a = chains[0];
  const auto& b = chains[1];
  std::set<int> inner(a.begin() + 1, a.end() - 1);
  for (std::size_t i = 1; i + 1 < b.size(); ++i)
    if (inner.count(b[i])) return std::nullopt;
  if (static_cast<int>(a.size() + b.size()) - 2 != interval) return std::nullopt;
  return std::pair{a, b};
}

PolygonResult check_polygonal(const FiniteLattice& l) {
  PolygonResult r;
  std::set<std::pair<int, int>> seen;
  auto visit = [&](int lo, int hi) {
    if (!seen.insert({lo, hi}).second) return;
    const auto chains = polygon_chains(l, lo, hi);
    if (!chains) {
      if (r.polygonal) r.witness = std::pair{lo, hi};
      r.polygonal = false;
      return;
    }
    const int sides = static_cast<int>(chains->first.size() + chains->second.size()) - 2;
    ++r.census[sides];
  };
  for (int x = 0; x < l.size(); ++x) {
    const auto& up = l.upper_covers(x);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) visit(x, l.join(up[i], up[j]));
    const auto& down = l.lower_covers(x);
    for (std::size_t i = 0; i < down.size(); ++i)
      for (std::size_t j = i + 1; j < down.size(); ++j) visit(l.meet(down[i], down[j]), x);
  }
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

Congruence from_union_find(UnionFind& uf, int n) {
  Congruence c;
  c.class_of.assign(n, -1);
  std::vector<int> label(n, -1);
  for (int x = 0; x < n; ++x) {
    const int r = uf.find(x);
    if (label[r] < 0) label[r] = c.class_count++;
    c.class_of[x] = label[r];
  }
  return c;
}

}  // namespace

Congruence congruence_generated(const FiniteLattice& l, std::span<const std::pair<int, int>> pairs) {
  const int n = l.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (int z = 0; z < n; ++z) {
      work.emplace_back(l.join(a, z), l.join(b, z));
      work.emplace_back(l.meet(a, z), l.meet(b, z));
    }
  }
  return from_union_find(uf, n);
}

void validate_congruence(const FiniteLattice& l, const Congruence& c) {
  const int n = l.size();
  if (static_cast<int>(c.class_of.size()) != n) throw NotACongruence("partition has wrong size");
  std::vector<int> rep(c.class_count, -1);
  for (int x = 0; x < n; ++x) {
    const int k = c.class_of[x];
    if (k < 0 || k >= c.class_count) throw NotACongruence("class index out of range");
    if (rep[k] < 0) rep[k] = x;
  }
  for (int x = 0; x < n; ++x) {
    const int r = rep[c.class_of[x]];
    for (int z = 0; z < n; ++z) {
      if (c.class_of[l.join(x, z)] != c.class_of[l.join(r, z)])
        throw NotACongruence("pair (" + std::to_string(x) + "," + std::to_string(r) +
                             ") is not compatible with join by " + std::to_string(z));
      if (c.class_of[l.meet(x, z)] != c.class_of[l.meet(r, z)])
        throw NotACongruence("pair (" + std::to_string(x) + "," + std::to_string(r) +
                             ") is not compatible with meet by " + std::to_string(z));
    }
  }
}

QuotientLattice quotient(const FiniteLattice& l, const Congruence& c) {
  validate_congruence(l, c);
  std::vector<int> rep(c.class_count, -1);
  for (int x = 0; x < l.size(); ++x)
    if (rep[c.class_of[x]] < 0) rep[c.class_of[x]] = x;
  auto leq = [&](int a, int b) { return c.class_of[l.join(rep[a], rep[b])] == b; };
  return {FiniteLattice::from_order(c.class_count, leq), c.class_of};
}

CongruenceUniformity check_congruence_uniform(const FiniteLattice& l) {
  CongruenceUniformity r;
  const auto js = l.join_irreducibles();
  const auto ms = l.meet_irreducibles();
  r.join_irreducibles = static_cast<int>(js.size());
  r.meet_irreducibles = static_cast<int>(ms.size());

  std::set<Congruence> all;
  for (const auto& cov : l.covers()) {
    const std::pair<int, int> p[1] = {cov};
    all.insert(congruence_generated(l, p));
  }
  r.join_irreducible_congruences = static_cast<int>(all.size());

  std::set<Congruence> from_j, from_m;
  for (int j : js) {
    const std::pair<int, int> p[1] = {{l.lower_covers(j)[0], j}};
    from_j.insert(congruence_generated(l, p));
  }
  for (int m : ms) {
    const std::pair<int, int> p[1] = {{m, l.upper_covers(m)[0]}};
    from_m.insert(congruence_generated(l, p));
  }
  r.join_map_injective = from_j.size() == js.size();
  r.meet_map_injective = from_m.size() == ms.size();
  r.jointly_surjective = from_j == all && from_m == all;
  r.uniform = r.join_map_injective && r.meet_map_injective && r.jointly_surjective;
  return r;
}

bool is_congruence_uniform(const FiniteLattice& l) { return check_congruence_uniform(l).uniform; }

DoubledLattice double_interval(const FiniteLattice& l, int x, int y) {
  if (!l.leq(x, y)) throw DomainError("double_interval: x must be below y");
  DoubledLattice d;
  for (int e = 0; e < l.size(); ++e) {
    if (l.leq(e, y)) d.elements.emplace_back(e, 0);
    if (!l.leq(e, y) || l.leq(x, e)) d.elements.emplace_back(e, 1);
  }
  const auto& el = d.elements;
  d.lattice = FiniteLattice::from_order(static_cast<int>(el.size()), [&](int a, int b) {
    return l.leq(el[a].first, el[b].first) && el[a].second <= el[b].second;
  });
  return d;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  const int n = a.size();
  if (n != b.size() || a.cover_count() != b.cover_count()) return std::nullopt;
  using Inv = std::tuple<int, std::size_t, std::size_t>;
  auto inv = [](const FiniteLattice& l, int x) {
    return Inv{l.rank(x), l.upper_covers(x).size(), l.lower_covers(x).size()};
  };
  {
    std::vector<Inv> ia, ib;
    for (int x = 0; x < n; ++x) {
      ia.push_back(inv(a, x));
      ib.push_back(inv(b, x));
    }
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return std::nullopt;
  }
  // Breadth-first from the bottom so each new element has a mapped lower cover.
  std::vector<int> order;
  std::vector<bool> queued(n, false);
  order.push_back(a.bottom());
  queued[a.bottom()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int u : a.upper_covers(order[i]))
      if (!queued[u]) {
        queued[u] = true;
        order.push_back(u);
      }
  auto covers = [](const FiniteLattice& l, int lo, int hi) {
    const auto& up = l.upper_covers(lo);
    return std::find(up.begin(), up.end(), hi) != up.end();
  };
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int x = order[i];
    for (int c = 0; c < n; ++c) {
      if (used[c] || inv(a, x) != inv(b, c)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const int f = order[k];
        ok = covers(a, f, x) == covers(b, map[f], c) && covers(a, x, f) == covers(b, c, map[f]);
      }
      if (!ok) continue;
      map[x] = c;
      used[c] = true;
      if (self(self, i + 1)) return true;
      used[c] = false;
      map[x] = -1;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

namespace {

bool doubling_search(const FiniteLattice& l) {
  if (l.size() == 1) return true;
  std::set<Congruence> tried;
  for (const auto& cov : l.covers()) {
    const std::pair<int, int> p[1] = {cov};
    Congruence c = congruence_generated(l, p);
    if (!tried.insert(c).second) continue;
    std::vector<int> class_size(c.class_count, 0);
    for (int k : c.class_of) ++class_size[k];
    if (*std::max_element(class_size.begin(), class_size.end()) > 2) continue;
    const QuotientLattice q = quotient(l, c);
    const int doubled = l.size() - q.lattice.size();
    for (int x = 0; x < q.lattice.size(); ++x)
      for (int y = 0; y < q.lattice.size(); ++y) {
        if (!q.lattice.leq(x, y)) continue;
        int interval = 0;
        for (int e = 0; e < q.lattice.size(); ++e)
          if (q.lattice.leq(x, e) && q.lattice.leq(e, y)) ++interval;
        if (interval != doubled) continue;
        if (find_isomorphism(double_interval(q.lattice, x, y).lattice, l) && doubling_search(q.lattice))
          return true;
      }
  }
  return false;
}

}  // namespace

bool has_doubling_sequence(const FiniteLattice& l) { return doubling_search(l); }

ProjectionCheck verify_projection_pair(const FiniteLattice& l, std::span<const int> down,
                                       std::span<const int> up) {
  const int n = l.size();
  auto fail = [](std::string s) { return ProjectionCheck{false, std::move(s)}; };
  if (static_cast<int>(down.size()) != n || static_cast<int>(up.size()) != n)
    return fail("map has wrong length");
  for (int x = 0; x < n; ++x) {
    const std::string at = " at " + std::to_string(x);
    if (down[down[x]] != down[x]) return fail("down is not idempotent" + at);
    if (up[up[x]] != up[x]) return fail("up is not idempotent" + at);
    if (down[up[x]] != down[x]) return fail("down o up != down" + at);
    if (up[down[x]] != up[x]) return fail("up o down != up" + at);
    for (int y = 0; y < n; ++y) {
      if (!l.leq(x, y)) continue;
      if (!l.leq(down[x], down[y])) return fail("down is not order-preserving" + at);
      if (!l.leq(up[x], up[y])) return fail("up is not order-preserving" + at);
    }
  }
  return {};
}

std::vector<int> canonical_join_representation(const FiniteLattice& l, int x) {
  std::vector<int> js;
  for (int j : l.join_irreducibles())
    if (l.leq(j, x)) js.push_back(j);
  if (js.size() > 24) throw DomainError("canonical_join_representation: too many join-irreducibles");
  const int k = static_cast<int>(js.size());
  auto join_of = [&](std::uint32_t s) {
    int acc = l.bottom();
    for (int i = 0; i < k; ++i)
      if (s >> i & 1u) acc = l.join(acc, js[i]);
    return acc;
  };
  std::vector<std::uint32_t> reps;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    if (join_of(s) != x) continue;
    bool irredundant = true;
    for (int i = 0; i < k && irredundant; ++i)
      if (s >> i & 1u) irredundant = join_of(s & ~(std::uint32_t{1} << i)) != x;
    if (irredundant) reps.push_back(s);
  }
  auto refines = [&](std::uint32_t a, std::uint32_t b) {
    for (int i = 0; i < k; ++i) {
      if (!(a >> i & 1u)) continue;
      bool below = false;
      for (int t = 0; t < k && !below; ++t) below = (b >> t & 1u) && l.leq(js[i], js[t]);
      if (!below) return false;
    }
    return true;
  };
  for (std::uint32_t a : reps) {
    if (std::all_of(reps.begin(), reps.end(), [&](std::uint32_t b) { return refines(a, b); })) {
      std::vector<int> out;
      for (int i = 0; i < k; ++i)
        if (a >> i & 1u) out.push_back(js[i]);
      return out;
    }
  }
  throw DomainError("element " + std::to_string(x) + " has no canonical join representation");
}

std::vector<int> canonical_meet_representation(const FiniteLattice& l, int x) {
  return canonical_join_representation(l.dual(), x);
}

std::vector<std::vector<int>> maximal_chains(const FiniteLattice& l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{l.bottom()};
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == l.top()) {
      out.push_back(cur);
      return;
    }
    for (int u : l.upper_covers(v)) {
      cur.push_back(u);
      self(self, u);
      cur.pop_back();
    }
  };
  dfs(dfs, l.bottom());
  return out;
}

FlipGraph polygonal_flip_graph(const FiniteLattice& l) {
  FlipGraph g;
  g.chains = maximal_chains(l);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(g.chains.size()); ++i) index.emplace(g.chains[i], i);
  std::set<std::pair<int, int>> edges;
  for (int ci = 0; ci < static_cast<int>(g.chains.size()); ++ci) {
    const auto& c = g.chains[ci];
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      const int x = c[i];
      for (int z : l.upper_covers(x)) {
        if (z == c[i + 1]) continue;
        const int t = l.join(c[i + 1], z);
        const auto pos = std::find(c.begin() + static_cast<std::ptrdiff_t>(i), c.end(), t);
        if (pos == c.end()) continue;
        const auto chains = polygon_chains(l, x, t);
        if (!chains) continue;
        const std::vector<int> segment(c.begin() + static_cast<std::ptrdiff_t>(i), pos + 1);
        const std::vector<int>* other = nullptr;
        if (segment == chains->first) other = &chains->second;
        else if (segment == chains->second) other = &chains->first;
        if (!other) continue;
        std::vector<int> flipped(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
        flipped.insert(flipped.end(), other->begin(), other->end());
        flipped.insert(flipped.end(), pos + 1, c.end());
        const auto it = index.find(flipped);
        if (it == index.end()) continue;
        edges.insert({std::min(ci, it->second), std::max(ci, it->second)});
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  UnionFind uf(static_cast<int>(g.chains.size()));
  int components = static_cast<int>(g.chains.size());
  for (const auto& [a, b] : g.edges)
    if (uf.unite(a, b)) --components;
  g.connected = components <= 1;
  return g;
}

}  // namespace oeg
