#include <doctest.h>

#include <bit>
#include <random>

#include "oeg/biclosed.hpp"
#include "oeg/error.hpp"
#include "oracles/quiver_oracle.hpp"

using namespace oeg;

namespace {

Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int X(const Algebra& a, int i, int j) { return *a.cyclic_module(i - 1, j); }

std::vector<TripleClosureSpace> spaces() {
  return {path_space(graph(2, {{0, 1}})).space,
          path_space(graph(3, {{0, 1}, {1, 2}, {0, 2}})).space,
          path_space(graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).space,
          path_space(graph(4, {{0, 1}, {1, 2}, {2, 3}})).space,
          cvector_space(Algebra::from_quiver(cyclic_quiver(3))).space,
          cvector_space(Algebra::cyclic(4)).space,
          inversion_space(3),
          inversion_space(4)};
}

std::vector<Algebra> algebras() {
  return {Algebra::from_quiver(path_quiver(2)), Algebra::from_quiver(path_quiver(3)),
          Algebra::from_quiver(cyclic_quiver(3)), Algebra::cyclic(4),
          Algebra::from_quiver(mutate(path_quiver(4), 1))};
}

}  // namespace

TEST_CASE("acyclic path spaces") {
  const AcyclicPaths k2 = path_space(graph(2, {{0, 1}}));
  CHECK(k2.space.labels() == std::vector<std::string>{"1", "2", "1-2"});
  CHECK(k2.space.productions() == std::vector<Production>{{0, 1, 2}});
  CHECK(path_space(graph(3, {{0, 1}, {1, 2}, {0, 2}})).space.size() == 6);
  const AcyclicPaths c4 = path_space(graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(c4.space.size() == 12);
  for (const auto& p : c4.paths) CHECK(p.size() <= 3);
}

TEST_CASE("closure operator") {
  const TripleClosureSpace k2 = path_space(graph(2, {{0, 1}})).space;
  CHECK(k2.closure(0b011) == 0b111);
  CHECK(k2.closure(0) == 0);
  CHECK_FALSE(k2.is_biclosed(0b100));
  CHECK(k2.is_biclosed(0b001));
  std::mt19937_64 rng(9);
  for (const auto& s : spaces()) {
    for (int t = 0; t < 200; ++t) {
      const Mask x = rng() & s.all();
      const Mask y = x | (rng() & s.all());
      const Mask cx = s.closure(x);
      CHECK((x & ~cx) == 0);
      CHECK(s.closure(cx) == cx);
      CHECK((cx & ~s.closure(y)) == 0);
      CHECK(s.is_closed(cx));
    }
    for (const auto& p : s.productions()) {
      CHECK(s.precedes(p.a, p.c));
      CHECK(s.precedes(p.b, p.c));
    }
  }
}

TEST_CASE("biclosed enumeration agrees with the exhaustive scan") {
  CHECK(enumerate_biclosed(path_space(graph(2, {{0, 1}})).space).sets.size() == 6);
  CHECK(enumerate_biclosed(cvector_space(Algebra::from_quiver(cyclic_quiver(3))).space).sets.size() == 26);
  CHECK(enumerate_biclosed(inversion_space(3)).sets.size() == 6);
  CHECK(enumerate_biclosed(inversion_space(4)).sets.size() == 24);
  for (const auto& s : spaces()) {
    const BiclosedLattice bic = enumerate_biclosed(s);
    CHECK(bic.exhaustive_checked);
    CHECK(bic.sets == oracle::brute_biclosed(s));
    CHECK(bic.sets.front() == 0);
    CHECK(bic.sets.back() == s.all());
  }
}

TEST_CASE("biclosed lattices have the structural properties") {
  for (const auto& s : spaces()) {
    const BiclosedLattice bic = enumerate_biclosed(s);
    CHECK(verify_closure_criteria(s, bic).ok());
    CHECK(is_semidistributive(bic.lattice));
    CHECK(is_congruence_uniform(bic.lattice));
    const auto poly = check_polygonal(bic.lattice);
    CHECK(poly.polygonal);
    for (const auto& [sides, count] : poly.census) CHECK((sides == 4 || sides == 6));
    for (int x = 0; x < bic.lattice.size(); ++x)
      for (int y = 0; y < bic.lattice.size(); ++y)
        CHECK(bic.sets[bic.lattice.join(x, y)] == s.closure(bic.sets[x] | bic.sets[y]));
  }
}

TEST_CASE("inversion spaces are weak orders") {
  const BiclosedLattice s3 = enumerate_biclosed(inversion_space(3));
  CHECK(check_polygonal(s3.lattice).census == std::map<int, int>{{6, 1}});
  CHECK(is_congruence_uniform(enumerate_biclosed(inversion_space(4)).lattice));
  CHECK_THROWS_AS(inversion_space(1), DomainError);
}

TEST_CASE("single-step violations are detected") {
  const TripleClosureSpace s({"x", "y", "z"}, {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}},
                             std::vector<std::vector<bool>>(3, std::vector<bool>(3, false)));
  CHECK(oracle::brute_biclosed(s) == std::vector<Mask>{0, 0b111});
  CHECK_THROWS_AS(enumerate_biclosed(s), SingleStepViolation);
}

TEST_CASE("c-vector spaces") {
  const CVectorSpace q3 = cvector_space(Algebra::from_quiver(cyclic_quiver(3)));
  CHECK(q3.space.size() == 6);
  CHECK(q3.space.productions().size() == 3);
  const Algebra a2 = Algebra::from_quiver(path_quiver(2));
  const CVectorSpace c2 = cvector_space(a2);
  REQUIRE(c2.space.productions().size() == 1);
  const Production p = c2.space.productions().front();
  CHECK(a2.indecomposables()[p.a].dim == std::vector<int>{1, 0});
  CHECK(a2.indecomposables()[p.b].dim == std::vector<int>{0, 1});
  CHECK(a2.indecomposables()[p.c].dim == std::vector<int>{1, 1});
  const CVectorSpace q4 = cvector_space(Algebra::cyclic(4));
  CHECK(q4.space.size() == 12);
  CHECK(path_space(underlying_graph(cyclic_quiver(4))).space.size() == 12);
}

TEST_CASE("weak extension closure matches closedness of c-vectors") {
  for (const auto& a : algebras()) {
    if (a.size() > 12) continue;
    const TripleClosureSpace s = cvector_space(a).space;
    for (Mask x = 0; x <= a.all(); ++x) {
      CHECK(is_weakly_extension_closed(a, x) == s.is_closed(x));
      CHECK(is_biclosed_subcategory(a, x) == s.is_biclosed(x));
    }
  }
}

TEST_CASE("projections") {
  const Algebra q3 = Algebra::cyclic(3);
  const Mask b = bit(X(q3, 3, 2)) | bit(X(q3, 2, 1)) | bit(X(q3, 2, 2));
  CHECK(is_biclosed_subcategory(q3, b));
  CHECK(pi_down(q3, b) == (bit(X(q3, 3, 2)) | bit(X(q3, 2, 1))));
  CHECK(pi_down(q3, 0) == 0);
  CHECK(pi_up(q3, q3.all()) == q3.all());
  CHECK(pi_up(q3, bit(X(q3, 2, 1))) == (bit(X(q3, 2, 1)) | bit(X(q3, 2, 2))));
  for (const auto& a : algebras()) {
    const BiclosedLattice bic = enumerate_biclosed(cvector_space(a).space);
    for (Mask x : bic.sets) {
      const Mask d = pi_down(a, x), u = pi_up(a, x);
      CHECK((d & ~x) == 0);
      CHECK((x & ~u) == 0);
      CHECK(is_torsion_class(a, d));
      CHECK(is_biclosed_subcategory(a, u));
    }
  }
}

TEST_CASE("quotient theorem") {
  const Algebra a2 = Algebra::from_quiver(path_quiver(2));
  const auto eg2 = build_exchange_graph(frame(path_quiver(2), FrameMode::framed));
  const QuotientReport r2 = verify_quotient_theorem(a2, &eg2);
  CHECK(r2.ok());
  CHECK(r2.bic_size == 6);
  CHECK(r2.tors_size == 5);
  CHECK(r2.contracted_covers == 1);
  const std::vector<IceQuiver> qs{path_quiver(3), cyclic_quiver(3), cyclic_quiver(4), mutate(path_quiver(4), 1)};
  for (const auto& q : qs) {
    const Algebra a = Algebra::from_quiver(q);
    const auto eg = build_exchange_graph(frame(q, FrameMode::framed));
    const QuotientReport r = verify_quotient_theorem(a, &eg);
    for (const auto& c : r.checks) {
      INFO(c.name, ": ", c.detail);
      CHECK(c.pass);
    }
  }
  const QuotientReport q3 = verify_quotient_theorem(Algebra::from_quiver(cyclic_quiver(3)));
  CHECK(q3.bic_size == 26);
  CHECK(q3.tors_size == 14);
}
