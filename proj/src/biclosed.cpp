#include "oeg/biclosed.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "oeg/error.hpp"

namespace oeg {

TripleClosureSpace::TripleClosureSpace(std::vector<std::string> labels, std::vector<Production> productions,
                                       std::vector<std::vector<bool>> precedes)
    : labels_(std::move(labels)), productions_(std::move(productions)), precedes_(std::move(precedes)) {
  const int n = size();
  if (n > 64) throw DomainError("closure space ground set exceeds 64 elements");
  if (static_cast<int>(precedes_.size()) != n) throw InputError("order relation has wrong size");
  for (auto& p : productions_) {
    if (p.a > p.b) std::swap(p.a, p.b);
    if (p.a < 0 || p.b >= n || p.c < 0 || p.c >= n || p.a == p.b)
      throw InputError("production out of range");
  }
  std::sort(productions_.begin(), productions_.end());
  productions_.erase(std::unique(productions_.begin(), productions_.end()), productions_.end());
  by_element_.assign(n, {});
  for (int i = 0; i < static_cast<int>(productions_.size()); ++i) {
    by_element_[productions_[i].a].push_back(i);
    by_element_[productions_[i].b].push_back(i);
  }
}

Mask TripleClosureSpace::closure(Mask x) const {
  std::vector<int> work;
  for (int i = 0; i < size(); ++i)
    if ((x >> i) & 1u) work.push_back(i);
  while (!work.empty()) {
    const int e = work.back();
    work.pop_back();
    for (int pi : by_element_[e]) {
      const Production& p = productions_[pi];
      const int other = p.a == e ? p.b : p.a;
      if (((x >> other) & 1u) && !((x >> p.c) & 1u)) {
        x |= bit(p.c);
        work.push_back(p.c);
      }
    }
  }
  return x;
}

bool TripleClosureSpace::is_closed(Mask x) const {
  for (const Production& p : productions_)
    if (((x >> p.a) & 1u) && ((x >> p.b) & 1u) && !((x >> p.c) & 1u)) return false;
  return true;
}

namespace {

std::string path_label(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i] + 1);
  return s;
}

std::vector<int> canonical_path(std::vector<int> p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

bool is_acyclic_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  return true;
}

bool is_subpath(const std::vector<int>& small, const std::vector<int>& big) {
  if (std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end()) return true;
  return std::search(big.begin(), big.end(), small.rbegin(), small.rend()) != big.end();
}

}  // namespace

AcyclicPaths path_space(const Graph& g) {
  std::set<std::vector<int>> found;
  std::vector<int> p;
  auto dfs = [&](auto&& self) -> void {
    found.insert(canonical_path(p));
    for (int u : g.neighbors(p.back())) {
      p.push_back(u);
      if (is_acyclic_path(g, p)) self(self);
      p.pop_back();
    }
  };
  for (int v = 0; v < g.size(); ++v) {
    p = {v};
    dfs(dfs);
  }
  AcyclicPaths out;
  out.paths.assign(found.begin(), found.end());
  std::stable_sort(out.paths.begin(), out.paths.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const int n = static_cast<int>(out.paths.size());
  if (n > 64) throw DomainError("path_space: more than 64 acyclic paths");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(out.paths[i], i);
  std::vector<Production> prods;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = out.paths[i];
      const auto& b = out.paths[j];
      const std::vector<int> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
      for (const auto* x : {&a, &ra})
        for (const auto* y : {&b, &rb}) {
          if (!g.adjacent(x->back(), y->front())) continue;
          std::vector<int> cat = *x;
          cat.insert(cat.end(), y->begin(), y->end());
          if (!is_acyclic_path(g, cat)) continue;
          prods.push_back({i, j, index.at(canonical_path(cat))});
        }
    }
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    labels.push_back(path_label(out.paths[i]));
    for (int j = 0; j < n; ++j)
      prec[i][j] = i != j && is_subpath(out.paths[i], out.paths[j]);
  }
  out.space = TripleClosureSpace(std::move(labels), std::move(prods), std::move(prec));
  return out;
}

namespace {

Graph algebra_graph(const Algebra& a) {
  Graph g(a.vertex_count());
  for (const Arrow& ar : a.arrows()) g.add_edge(ar.source, ar.target);
  return g;
}

}  // namespace

CVectorSpace cvector_space(const Algebra& a) {
  const auto& mods = a.indecomposables();
  const int n = a.size();
  std::map<std::vector<int>, int> by_dim;
  for (const auto& m : mods) by_dim.emplace(m.dim, m.id);
  std::vector<Production> prods;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> s(a.vertex_count());
      for (int v = 0; v < a.vertex_count(); ++v) s[v] = mods[i].dim[v] + mods[j].dim[v];
      if (auto it = by_dim.find(s); it != by_dim.end()) prods.push_back({i, j, it->second});
    }
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    std::string s = "(";
    for (int v = 0; v < a.vertex_count(); ++v) s += (v ? "," : "") + std::to_string(mods[i].dim[v]);
    labels.push_back(s + ")");
    for (int j = 0; j < n; ++j)
      prec[i][j] = i != j && (mods[i].support & ~mods[j].support) == 0;
  }
  CVectorSpace out;
  out.space = TripleClosureSpace(std::move(labels), std::move(prods), std::move(prec));

  // Support must be a production-preserving bijection onto the acyclic paths.
  const AcyclicPaths ap = path_space(algebra_graph(a));
  if (ap.space.size() != n)
    throw DomainError("c-vector space has " + std::to_string(n) + " elements but the graph has " +
                      std::to_string(ap.space.size()) + " acyclic paths");
  std::map<std::uint64_t, int> path_by_support;
  for (int p = 0; p < n; ++p) {
    std::uint64_t s = 0;
    for (int v : ap.paths[p]) s |= std::uint64_t{1} << v;
    path_by_support.emplace(s, p);
  }
  out.to_path.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto it = path_by_support.find(mods[i].support);
    if (it == path_by_support.end() || ap.paths[it->second].size() != mods[i].vertices.size())
      throw DomainError("support of " + a.name(i) + " is not an acyclic path");
    out.to_path[i] = it->second;
  }
  std::vector<Production> mapped;
  for (const Production& p : out.space.productions()) {
    int x = out.to_path[p.a], y = out.to_path[p.b];
    if (x > y) std::swap(x, y);
    mapped.push_back({x, y, out.to_path[p.c]});
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != ap.space.productions())
    throw DomainError("support map does not preserve productions");
  return out;
}

TripleClosureSpace inversion_space(int n) {
  if (n < 2) throw DomainError("inversion_space needs n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < static_cast<int>(pairs.size()); ++k) index.emplace(pairs[k], k);
  std::vector<Production> prods;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) prods.push_back({index[{i, j}], index[{j, k}], index[{i, k}]});
  const int e = static_cast<int>(pairs.size());
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> prec(e, std::vector<bool>(e, false));
  for (int x = 0; x < e; ++x) {
    labels.push_back("{" + std::to_string(pairs[x].first + 1) + "," + std::to_string(pairs[x].second + 1) + "}");
    for (int y = 0; y < e; ++y) {
      const auto [j, k] = pairs[x];
      const auto [i, l] = pairs[y];
      prec[x][y] = x != y && i <= j && k <= l;
    }
  }
  return TripleClosureSpace(std::move(labels), std::move(prods), std::move(prec));
}

BiclosedLattice enumerate_biclosed(const TripleClosureSpace& s) {
  std::set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask x : frontier)
      for (int e = 0; e < s.size(); ++e) {
        const Mask y = x | bit(e);
        if (y == x || seen.count(y) || !s.is_biclosed(y)) continue;
        seen.insert(y);
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  BiclosedLattice out;
  if (s.size() <= 24) {
    for (Mask x = 0; x <= s.all(); ++x)
      if (s.is_biclosed(x) && !seen.count(x))
        throw SingleStepViolation("biclosed set " + std::to_string(x) + " is not reachable by single steps");
    out.exhaustive_checked = true;
  }
  out.sets.assign(seen.begin(), seen.end());
  std::stable_sort(out.sets.begin(), out.sets.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  out.lattice = inclusion_lattice(out.sets);
  return out;
}

ClosureCriteria verify_closure_criteria(const TripleClosureSpace& s, const BiclosedLattice& bic) {
  ClosureCriteria r;
  const auto& sets = bic.sets;
  for (Mask x : sets)
    for (Mask y : sets) {
      if (x == y || (x & ~y) != 0) continue;
      bool step = false;
      for (int c = 0; c < s.size() && !step; ++c)
        if (((y & ~x) >> c) & 1u) step = s.is_biclosed(x | bit(c));
      r.single_step = r.single_step && step;
    }
  for (std::size_t i = 0; i < sets.size() && r.join_formula; ++i)
    for (std::size_t j = i; j < sets.size() && r.join_formula; ++j) {
      const Mask x = sets[i], y = sets[j];
      const Mask common = x & y;
      if (!s.is_biclosed(s.closure(x | y))) r.join_formula = false;
      for (Mask w : sets) {
        if ((w & ~common) != 0) continue;
        if (!s.is_biclosed(w | s.closure((x | y) & ~w))) {
          r.join_formula = false;
          break;
        }
      }
    }
  for (const Production& p : s.productions())
    if (!s.precedes(p.a, p.c) || !s.precedes(p.b, p.c)) r.order_condition = false;
  for (int x = 0; x < s.size() && r.polygon_condition; ++x)
    for (int y = x + 1; y < s.size() && r.polygon_condition; ++y) {
      const Mask c = s.closure(bit(x) | bit(y));
      // Biclosed sets of the restricted space on c, as subsets of c.
      std::vector<Mask> local;
      for (Mask sub = c;; sub = (sub - 1) & c) {
        bool closed = true, coclosed = true;
        for (const Production& p : s.productions()) {
          if (!((c >> p.a) & 1u) || !((c >> p.b) & 1u) || !((c >> p.c) & 1u)) continue;
          const Mask comp = c & ~sub;
          if (((sub >> p.a) & 1u) && ((sub >> p.b) & 1u) && !((sub >> p.c) & 1u)) closed = false;
          if (((comp >> p.a) & 1u) && ((comp >> p.b) & 1u) && !((comp >> p.c) & 1u)) coclosed = false;
        }
        if (closed && coclosed) local.push_back(sub);
        if (sub == 0) break;
      }
      try {
        const FiniteLattice l = inclusion_lattice(local);
        r.polygon_condition = polygon_chains(l, l.bottom(), l.top()).has_value();
      } catch (const NotALattice&) {
        r.polygon_condition = false;
      }
    }
  return r;
}

namespace {

Mask indecomposable_middles(const Algebra& a, Mask x) {
  Mask r = 0;
  for (int t = 0; t < a.size(); ++t) {
    if (!((x >> t) & 1u)) continue;
    for (int s = 0; s < a.size(); ++s) {
      if (!((x >> s) & 1u)) continue;
      const auto& z = a.nonsplit_extension(t, s);
      if (z && z->size() == 1) r |= bit(z->front());
    }
  }
  return r;
}

}  // namespace

bool is_weakly_extension_closed(const Algebra& a, Mask x) { return (indecomposable_middles(a, x) & ~x) == 0; }

bool is_biclosed_subcategory(const Algebra& a, Mask x) {
  return is_weakly_extension_closed(a, x) && is_weakly_extension_closed(a, a.all() & ~x);
}

Mask pi_down(const Algebra& a, Mask b) {
  Mask r = 0;
  for (int w = 0; w < a.size(); ++w)
    if (((b >> w) & 1u) && (a.quotients(w) & ~b) == 0) r |= bit(w);
  return r;
}

Mask pi_up(const Algebra& a, Mask b) {
  Mask r = 0;
  for (int w = 0; w < a.size(); ++w)
    if ((a.submodules(w) & b) != 0) r |= bit(w);
  return r;
}

bool QuotientReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

QuotientReport verify_quotient_theorem(const Algebra& a, const OrientedExchangeGraph* eg) {
  QuotientReport rep;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const CVectorSpace cs = cvector_space(a);
  const BiclosedLattice bic = enumerate_biclosed(cs.space);
  const std::vector<Mask> tors = torsion_classes(a);
  rep.bic_size = static_cast<int>(bic.sets.size());
  rep.tors_size = static_cast<int>(tors.size());
  const int n = rep.bic_size;
  std::map<Mask, int> bic_index;
  for (int i = 0; i < n; ++i) bic_index.emplace(bic.sets[i], i);

  {
    // Productions are exactly the extensions with indecomposable middle.
    bool same = true;
    std::string detail;
    if (a.size() <= 20) {
      for (Mask x = 0; x <= a.all() && same; ++x)
        if (cs.space.is_biclosed(x) != is_biclosed_subcategory(a, x)) {
          same = false;
          detail = "subcategory " + format_set(a, x);
        }
    } else {
      for (Mask x : bic.sets)
        if (!is_biclosed_subcategory(a, x)) same = false, detail = format_set(a, x);
    }
    check("biclosed sets = biclosed subcategories", same, detail);
  }

  std::vector<int> down(n), up(n);
  bool lands = true;
  std::string lands_detail;
  for (int i = 0; i < n; ++i) {
    const Mask d = pi_down(a, bic.sets[i]);
    const Mask u = pi_up(a, bic.sets[i]);
    const auto di = bic_index.find(d), ui = bic_index.find(u);
    if (di == bic_index.end() || ui == bic_index.end()) {
      lands = false;
      lands_detail = "image of " + format_set(a, bic.sets[i]) + " is not biclosed";
      down[i] = up[i] = i;
      continue;
    }
    down[i] = di->second;
    up[i] = ui->second;
    if ((d & ~bic.sets[i]) != 0 || (bic.sets[i] & ~u) != 0) {
      lands = false;
      lands_detail = "pi_down(B) <= B <= pi_up(B) fails at " + format_set(a, bic.sets[i]);
    }
  }
  check("projections land in Bic", lands, lands_detail);
  const ProjectionCheck pc = verify_projection_pair(bic.lattice, down, up);
  check("projection pair", pc.ok, pc.failure);

  std::set<Mask> image;
  for (int i = 0; i < n; ++i) image.insert(bic.sets[down[i]]);
  check("image of pi_down = tors", image == std::set<Mask>(tors.begin(), tors.end()),
        std::to_string(image.size()) + " images, " + std::to_string(tors.size()) + " torsion classes");

  Congruence cong;
  {
    std::map<int, int> label;
    cong.class_of.resize(n);
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = label.emplace(down[i], cong.class_count);
      if (fresh) ++cong.class_count;
      cong.class_of[i] = it->second;
    }
  }
  bool congruence_ok = true;
  std::string cong_detail;
  try {
    validate_congruence(bic.lattice, cong);
  } catch (const NotACongruence& e) {
    congruence_ok = false;
    cong_detail = e.what();
  }
  check("fibers of pi_down form a congruence", congruence_ok, cong_detail);

  const FiniteLattice tors_lattice = inclusion_lattice(tors);
  if (congruence_ok) {
    const QuotientLattice q = quotient(bic.lattice, cong);
    check("Bic / fibers ~= tors", find_isomorphism(q.lattice, tors_lattice).has_value());
  }
  if (eg) check("tors ~= oriented exchange graph, source to top", torsion_class_labels(a, *eg).has_value());

  {
    const Algebra op = a.opposite();
    bool dual = true;
    std::string detail;
    for (Mask b : bic.sets) {
      const Mask lhs = op.all() & ~transfer(a, op, pi_up(a, b));
      const Mask rhs = pi_down(op, transfer(a, op, a.all() & ~b));
      if (lhs != rhs) {
        dual = false;
        detail = "fails at " + format_set(a, b);
        break;
      }
    }
    check("duality D pi_up(B)^c = pi_down(D B^c)", dual, detail);
  }

  {
    // A cover B1 < B1 u {w} is contracted iff pi_down agrees on both ends; the
    // hexagon criterion: w glues a submodule u1 in B1 to a quotient u2 outside B1.
    bool agree = true;
    std::string detail;
    for (const auto& [lo, hi] : bic.lattice.covers()) {
      const Mask added = bic.sets[hi] & ~bic.sets[lo];
      const int w = std::countr_zero(added);
      const bool contracted = down[lo] == down[hi];
      if (contracted) ++rep.contracted_covers;
      bool hexagon = false;
      for (int u1 = 0; u1 < a.size() && !hexagon; ++u1)
        for (int u2 = 0; u2 < a.size() && !hexagon; ++u2) {
          const auto& z = a.nonsplit_extension(u2, u1);
          hexagon = z && z->size() == 1 && z->front() == w && ((bic.sets[lo] >> u1) & 1u) &&
                    !((bic.sets[lo] >> u2) & 1u);
        }
      if (contracted != hexagon && agree) {
        agree = false;
        detail = "cover adding " + a.name(w) + " to " + format_set(a, bic.sets[lo]);
      }
    }
    check("contracted covers = hexagon extension covers", agree, detail);
  }
  return rep;
}

}  // namespace oeg
