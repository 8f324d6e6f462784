#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "oeg/error.hpp"
#include "oeg/exchange.hpp"
#include "oeg/stringmod.hpp"
#include "oracles/rep_oracle.hpp"

using namespace oeg;

namespace {

int X(const Algebra& a, int i, int j) {
  const auto id = a.cyclic_module(i - 1, j);
  REQUIRE(id.has_value());
  return *id;
}

Mask set_of(std::initializer_list<int> ids) {
  Mask m = 0;
  for (int i : ids) m |= bit(i);
  return m;
}

std::vector<Algebra> test_algebras() {
  const Arrow mixed[] = {{1, 0}, {1, 2}};
  return {Algebra::from_quiver(path_quiver(2)),
          Algebra::from_quiver(path_quiver(3)),
          Algebra::from_quiver(from_arrows(3, 0, mixed)),
          Algebra::from_quiver(cyclic_quiver(3)),
          Algebra::cyclic(4),
          Algebra::from_quiver(mutate(path_quiver(4), 1)),
          Algebra::cyclic(5)};
}

int mod(int x, int n) { return ((x % n) + n) % n; }

// Vertices of X(s, l) from the socle upward (1-based).
std::vector<int> cyclic_word(int s, int l, int n) {
  std::vector<int> w;
  for (int t = 0; t < l; ++t) w.push_back(mod(s - 1 - t, n) + 1);
  return w;
}

}  // namespace

TEST_CASE("relations of the bound quiver algebras") {
  const Algebra q3 = Algebra::from_quiver(cyclic_quiver(3));
  CHECK(q3.relations().size() == 3);
  for (const auto& r : q3.relations()) CHECK(r.size() == 2);
  CHECK(Algebra::from_quiver(path_quiver(3)).relations().empty());
  const Algebra q4 = Algebra::from_quiver(cyclic_quiver(4));
  CHECK(q4.kind() == AlgebraKind::cyclic);
  CHECK(q4.relations().size() == 4);
  for (const auto& r : q4.relations()) CHECK(r.size() == 3);
  const Arrow star[] = {{0, 1}, {0, 2}, {0, 3}};
  CHECK_THROWS_AS(Algebra::from_quiver(from_arrows(4, 0, star)), UnsupportedQuiver);
}

TEST_CASE("indecomposables") {
  const Algebra q3 = Algebra::from_quiver(cyclic_quiver(3));
  std::set<std::string> names;
  for (int i = 0; i < q3.size(); ++i) names.insert(q3.name(i));
  CHECK(names == std::set<std::string>{"1", "2", "3", "1->2", "2->3", "1<-3"});
  CHECK(Algebra::from_quiver(path_quiver(2)).size() == 3);
  const Algebra q4 = Algebra::cyclic(4);
  CHECK(q4.size() == 12);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j) {
      const auto& m = q4.indecomposables()[X(q4, i, j)];
      std::uint64_t expected = 0;
      for (int v : cyclic_word(i, j, 4)) expected |= std::uint64_t{1} << (v - 1);
      CHECK(m.support == expected);
      CHECK(std::count(m.dim.begin(), m.dim.end(), 1) == j);
    }
  CHECK_FALSE(q4.cyclic_module(0, 4).has_value());
}

TEST_CASE("string representations are bricks satisfying the relations") {
  for (const auto& a : test_algebras())
    for (const auto& m : a.indecomposables()) {
      const auto r = oracle::string_rep(a, m.vertices);
      CHECK(oracle::satisfies_relations(a, r));
      CHECK(oracle::hom_dim(a, r, r) == 1);
      CHECK(a.is_string(m.vertices));
    }
}

TEST_CASE("quotient and submodule substrings") {
  const Algebra q3 = Algebra::cyclic(3);
  CHECK(q3.is_quotient(X(q3, 3, 2), X(q3, 2, 1)));
  CHECK_FALSE(q3.is_submodule(X(q3, 3, 2), X(q3, 2, 1)));
  CHECK(q3.is_submodule(X(q3, 2, 2), X(q3, 2, 1)));
  CHECK_FALSE(q3.is_quotient(X(q3, 2, 2), X(q3, 2, 1)));
  for (int w = 0; w < q3.size(); ++w) {
    CHECK(q3.is_quotient(w, w));
    CHECK(q3.is_submodule(w, w));
  }
}

TEST_CASE("hom dimensions") {
  const Algebra q3 = Algebra::cyclic(3);
  CHECK(q3.hom_dim(X(q3, 3, 2), X(q3, 2, 2)) == 1);
  CHECK(q3.hom_dim(X(q3, 3, 2), X(q3, 1, 1)) == 0);
  for (const auto& a : test_algebras())
    for (int u = 0; u < a.size(); ++u) {
      CHECK(a.hom_dim(u, u) == 1);
      for (int v = 0; v < a.size(); ++v)
        if (a.is_quotient(u, v) || a.is_submodule(v, u)) CHECK(a.hom_dim(u, v) == 1);
    }
}

TEST_CASE("hom criterion for oriented cycles") {
  for (int n = 3; n <= 6; ++n) {
    const Algebra a = Algebra::cyclic(n);
    for (int s2 = 1; s2 <= n; ++s2)
      for (int l2 = 1; l2 < n; ++l2)
        for (int s1 = 1; s1 <= n; ++s1)
          for (int l1 = 1; l1 < n; ++l1) {
            const auto w2 = cyclic_word(s2, l2, n), w1 = cyclic_word(s1, l1, n);
            // Top of w2 is x_i of w1, and the socle of w2 avoids x_2, ..., x_i.
            bool nonzero = false, literal = false;
            for (int i = 0; i < l1; ++i)
              if (w1[i] == w2.back()) {
                nonzero = std::find(w1.begin() + 1, w1.begin() + i + 1, w2.front()) == w1.begin() + i + 1;
                literal = std::find(w1.begin() + 1, w1.begin() + std::max(i, 1), w2.front()) ==
                          w1.begin() + std::max(i, 1);
                break;
              }
            CHECK(a.hom_dim(X(a, s2, l2), X(a, s1, l1)) == (nonzero ? 1 : 0));
            // Excluding x_i as well only matters when w2 is a single vertex.
            if (l2 > 1) CHECK(literal == nonzero);
          }
  }
}

TEST_CASE("hom and stable hom ranges for oriented cycles") {
  for (int n = 3; n <= 6; ++n) {
    const Algebra a = Algebra::cyclic(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j < n - 1; ++j)
        for (int s = 1; s <= n; ++s)
          for (int t = 1; t < n; ++t) {
            const int d = mod(i - s, n);
            const bool in_interval = d <= j - 1;
            CHECK((a.hom_dim(X(a, i, j), X(a, s, t)) == 1) == (in_interval && j - d <= t));
            // Ext^1(X(s, t), X(i + 1, j)) is stable Hom(X(i, j), X(s, t)).
            const bool stable = in_interval && j - d <= t && t <= n - 2 - d;
            CHECK(a.nonsplit_extension(X(a, s, t), X(a, mod(i, n) + 1, j)).has_value() == stable);
          }
  }
}

TEST_CASE("nonsplit extensions") {
  const Algebra q4 = Algebra::cyclic(4);
  CHECK(q4.nonsplit_extension(X(q4, 3, 1), X(q4, 4, 1)) == std::vector<int>{X(q4, 4, 2)});
  std::vector<int> expected{X(q4, 1, 3), X(q4, 4, 1)};
  std::sort(expected.begin(), expected.end());
  CHECK(q4.nonsplit_extension(X(q4, 4, 2), X(q4, 1, 2)) == expected);
  const Algebra q3 = Algebra::cyclic(3);
  CHECK_FALSE(q3.nonsplit_extension(X(q3, 1, 1), X(q3, 2, 2)).has_value());
}

TEST_CASE("extension classification for oriented cycles") {
  for (int n = 3; n <= 6; ++n) {
    const Algebra a = Algebra::cyclic(n);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l < n; ++l)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j < n; ++j) {
            const auto& e = a.nonsplit_extension(X(a, k, l), X(a, i, j));
            if (!e) continue;
            const std::uint64_t overlap = a.indecomposables()[X(a, k, l)].support &
                                          a.indecomposables()[X(a, i, j)].support;
            const int d = mod(i - k, n);
            std::vector<int> expected;
            if (overlap == 0) {
              CHECK(k == mod(i - j - 1, n) + 1);
              expected = {X(a, i, j + l)};
            } else {
              expected = {X(a, i, d + l), X(a, k, j - d)};
            }
            std::sort(expected.begin(), expected.end());
            CHECK(*e == expected);
          }
  }
}

TEST_CASE("hom and ext agree with the linear-algebra oracle") {
  for (const auto& a : test_algebras()) {
    std::vector<oracle::Rep> reps;
    std::vector<std::vector<int>> profiles;
    for (const auto& m : a.indecomposables()) reps.push_back(oracle::string_rep(a, m.vertices));
    for (const auto& r : reps) profiles.push_back(oracle::hom_profile(a, r));
    for (int u = 0; u < a.size(); ++u)
      for (int v = 0; v < a.size(); ++v) {
        const int hom = oracle::hom_dim(a, reps[u], reps[v]);
        CHECK(hom <= 1);
        CHECK(a.hom_dim(u, v) == hom);
        const int ext = oracle::ext1_dim(a, reps[u], reps[v]);
        CHECK(ext <= 1);
        const auto& mid = a.nonsplit_extension(u, v);
        REQUIRE(mid.has_value() == (ext == 1));
        if (!mid) continue;
        const auto e = oracle::nonsplit_middle(a, reps[u], reps[v]);
        REQUIRE(e.has_value());
        std::vector<int> sum(a.size(), 0);
        for (int z : *mid)
          for (int x = 0; x < a.size(); ++x) sum[x] += profiles[z][x];
        CHECK(oracle::hom_profile(a, *e) == sum);
      }
  }
}

TEST_CASE("extension middles have the summed dimension vector and never split") {
  for (const auto& a : test_algebras())
    for (int u = 0; u < a.size(); ++u)
      for (int v = 0; v < a.size(); ++v) {
        const auto& mid = a.nonsplit_extension(u, v);
        if (!mid) continue;
        std::vector<int> sum(a.vertex_count(), 0), ends(a.vertex_count(), 0);
        for (int z : *mid)
          for (int x = 0; x < a.vertex_count(); ++x) sum[x] += a.indecomposables()[z].dim[x];
        for (int x = 0; x < a.vertex_count(); ++x)
          ends[x] = a.indecomposables()[u].dim[x] + a.indecomposables()[v].dim[x];
        CHECK(sum == ends);
        std::vector<int> split{u, v};
        std::sort(split.begin(), split.end());
        CHECK(*mid != split);
        CHECK(mid->size() <= 2);
      }
}

TEST_CASE("intersecting supports of type A modules form one string") {
  for (const auto& a : test_algebras()) {
    if (a.kind() != AlgebraKind::type_a) continue;
    for (const auto& u : a.indecomposables())
      for (const auto& v : a.indecomposables())
        if (u.support & v.support) CHECK(a.find_by_support(u.support & v.support).has_value());
  }
}

TEST_CASE("fac, sub and torsion classes") {
  const Algebra q3 = Algebra::cyclic(3);
  const Mask t = set_of({X(q3, 3, 2), X(q3, 2, 1)});
  CHECK(fac(q3, bit(X(q3, 3, 2))) == t);
  CHECK(fac(q3, 0) == 0);
  CHECK(sub(q3, bit(X(q3, 2, 2))) == set_of({X(q3, 2, 2), X(q3, 2, 1)}));
  CHECK(is_torsion_class(q3, t));
  CHECK(is_torsion_class(q3, 0));
  CHECK(is_torsion_class(q3, q3.all()));
  CHECK_FALSE(is_torsion_class(q3, t | bit(X(q3, 2, 2))));
  CHECK(torsion_classes(q3).size() == 14);
  CHECK(torsion_classes(Algebra::from_quiver(path_quiver(2))).size() == 5);
  for (const auto& a : test_algebras())
    for (int w = 0; w < a.size(); ++w) {
      const Mask f = fac(a, bit(w));
      CHECK(is_torsion_class(a, f));
      CHECK(is_torsion_free_class(a, sub(a, bit(w))));
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
          if (((f >> x) & 1u) && ((f >> y) & 1u) && a.nonsplit_extension(x, y))
            CHECK(a.nonsplit_extension(x, y)->size() == 2);
    }
}

TEST_CASE("torsion classes match exchange graph nodes") {
  const std::vector<std::pair<IceQuiver, std::size_t>> cases{
      {path_quiver(2), 5},  {path_quiver(3), 14},         {cyclic_quiver(3), 14},
      {cyclic_quiver(4), 50}, {path_quiver(4), 42}, {mutate(path_quiver(4), 1), 42}};
  for (const auto& [q, count] : cases) {
    const auto tors = torsion_classes(Algebra::from_quiver(q));
    CHECK(tors.size() == count);
    const auto eg = build_exchange_graph(frame(q, FrameMode::framed));
    CHECK(eg.nodes().size() == count);
    CHECK(find_isomorphism(inclusion_lattice(tors), eg.as_lattice().dual()).has_value());
    const auto labels = torsion_class_labels(Algebra::from_quiver(q), eg);
    REQUIRE(labels.has_value());
    CHECK((*labels)[eg.source_node()] == Algebra::from_quiver(q).all());
    CHECK((*labels)[*eg.sink_node()] == 0);
  }
}

TEST_CASE("the exchange graph is anti-isomorphic to tors in general") {
  // With a 3-cycle the lattice is not self-dual, which pins the orientation.
  const IceQuiver q = mutate(path_quiver(4), 1);
  const auto eg = build_exchange_graph(frame(q, FrameMode::framed));
  const FiniteLattice tl = inclusion_lattice(torsion_classes(Algebra::from_quiver(q)));
  CHECK_FALSE(find_isomorphism(tl, eg.as_lattice()).has_value());
  CHECK(find_isomorphism(tl, eg.as_lattice().dual()).has_value());
  CHECK(find_isomorphism(inclusion_lattice(torsion_classes(Algebra::from_quiver(q).opposite())), eg.as_lattice())
            .has_value());
}

TEST_CASE("torsion lattices: meets, semidistributivity, joins") {
  for (const auto& a : test_algebras()) {
    if (a.size() > 26) continue;
    const auto tors = torsion_classes(a);
    const FiniteLattice l = inclusion_lattice(tors);
    const auto sd = check_semidistributive(l);
    CHECK(sd.join_semidistributive);
    CHECK(sd.meet_semidistributive);
    for (std::size_t x = 0; x < tors.size(); ++x)
      for (std::size_t y = 0; y < tors.size(); ++y) {
        const Mask join = tors[l.join(static_cast<int>(x), static_cast<int>(y))];
        CHECK(tors[l.meet(static_cast<int>(x), static_cast<int>(y))] == (tors[x] & tors[y]));
        CHECK(filt_join(a, tors[x], tors[y]) == join);
        CHECK(perp_join(a, tors[x], tors[y]) == join);
      }
  }
}

TEST_CASE("filt join examples") {
  const Algebra q3 = Algebra::cyclic(3);
  CHECK(filt_join(q3, bit(X(q3, 2, 1)), bit(X(q3, 1, 1))) ==
        set_of({X(q3, 1, 1), X(q3, 2, 1), X(q3, 2, 2)}));
  for (Mask t : torsion_classes(q3)) {
    CHECK(filt_join(q3, t, 0) == t);
    for (Mask u : torsion_classes(q3)) CHECK(filt_join(q3, t, u) == filt_join(q3, u, t));
  }
  CHECK_THROWS_AS(filt_join(q3, bit(X(q3, 3, 2)), 0), DomainError);
}

TEST_CASE("perpendicular categories") {
  const Algebra q3 = Algebra::cyclic(3);
  CHECK(perp(q3, set_of({X(q3, 3, 2), X(q3, 2, 1)}), Side::right) ==
        set_of({X(q3, 1, 1), X(q3, 1, 2), X(q3, 3, 1)}));
  CHECK(perp(q3, 0, Side::right) == q3.all());
  for (const auto& a : test_algebras()) {
    if (a.size() > 26) continue;
    for (Mask t : torsion_classes(a)) {
      const Mask f = perp(a, t, Side::right);
      CHECK(is_torsion_free_class(a, f));
      CHECK(perp(a, f, Side::left) == t);
    }
  }
}

TEST_CASE("canonical joinands") {
  const Algebra q3 = Algebra::cyclic(3);
  const Mask t = set_of({X(q3, 1, 1), X(q3, 2, 1), X(q3, 2, 2)});
  std::vector<int> mods{X(q3, 1, 1), X(q3, 2, 1)};
  std::sort(mods.begin(), mods.end());
  CHECK(canonical_joinand_modules(q3, t) == mods);
  CHECK(canonical_joinands(q3, 0).empty());
  for (int w = 0; w < q3.size(); ++w)
    CHECK(canonical_joinands(q3, fac(q3, bit(w))) == std::vector<Mask>{fac(q3, bit(w))});
  CHECK(canonical_meetands(q3, q3.all()).empty());
}

TEST_CASE("canonical representations agree with the lattice") {
  for (const auto& a : test_algebras()) {
    if (a.size() > 26) continue;
    const auto tors = torsion_classes(a);
    const FiniteLattice l = inclusion_lattice(tors);
    auto masks = [&](const std::vector<int>& idx) {
      std::vector<Mask> out;
      for (int i : idx) out.push_back(tors[i]);
      std::sort(out.begin(), out.end());
      return out;
    };
    for (int x = 0; x < l.size(); ++x) {
      auto joinands = canonical_joinands(a, tors[x]);
      std::sort(joinands.begin(), joinands.end());
      CHECK(joinands == masks(canonical_join_representation(l, x)));
      auto meetands = canonical_meetands(a, tors[x]);
      std::sort(meetands.begin(), meetands.end());
      CHECK(meetands == masks(canonical_meet_representation(l, x)));
      Mask meet = a.all();
      for (Mask m : meetands) meet &= m;
      CHECK(meet == tors[x]);
    }
  }
}

TEST_CASE("duality carries canonical joinands to canonical meetands") {
  for (const auto& a : test_algebras()) {
    if (a.size() > 26) continue;
    const Algebra op = a.opposite();
    const auto tors = torsion_classes(a);
    auto op_tors = torsion_classes(op);
    std::sort(op_tors.begin(), op_tors.end());
    auto phi = [&](Mask t) { return transfer(a, op, perp(a, t, Side::right)); };
    std::set<Mask> image;
    for (Mask t : tors) {
      const Mask p = phi(t);
      CHECK(std::binary_search(op_tors.begin(), op_tors.end(), p));
      image.insert(p);
      std::vector<Mask> mapped;
      for (Mask j : canonical_joinands(a, t)) mapped.push_back(phi(j));
      std::sort(mapped.begin(), mapped.end());
      auto meetands = canonical_meetands(op, p);
      std::sort(meetands.begin(), meetands.end());
      CHECK(mapped == meetands);
      for (Mask u : tors)
        if ((t & ~u) == 0) CHECK((phi(u) & ~p) == 0);
    }
    CHECK(image.size() == tors.size());
  }
}

TEST_CASE("opposite algebra") {
  const Algebra q3 = Algebra::cyclic(3);
  const Algebra op = q3.opposite();
  CHECK(op.size() == q3.size());
  CHECK(transfer(q3, op, q3.all()) == op.all());
  for (int w = 0; w < q3.size(); ++w) {
    const Mask d = transfer(q3, op, fac(q3, bit(w)));
    CHECK(d == sub(op, transfer(q3, op, bit(w))));
  }
  CHECK(format_set(q3, set_of({X(q3, 1, 1), X(q3, 2, 1)})) == "{1, 2}");
}
