#pragma once

#include <string>
#include <vector>

#include "oeg/exchange.hpp"
#include "oeg/lattice.hpp"
#include "oeg/quiver.hpp"
#include "oeg/stringmod.hpp"

namespace oeg {

/// {a, b} |- c with a < b.
struct Production {
  int a, b, c;
  friend bool operator==(const Production&, const Production&) = default;
  friend auto operator<=>(const Production&, const Production&) = default;
};

/// Closure space on a ground set of at most 64 elements whose closure is
/// generated by binary productions, together with a strict order used by
/// the polygonality hypotheses.
class TripleClosureSpace {
 public:
  TripleClosureSpace() = default;
  TripleClosureSpace(std::vector<std::string> labels, std::vector<Production> productions,
                     std::vector<std::vector<bool>> precedes);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Production>& productions() const { return productions_; }
  bool precedes(int x, int y) const { return precedes_[x][y]; }

  Mask closure(Mask x) const;
  bool is_closed(Mask x) const;
  bool is_biclosed(Mask x) const { return is_closed(x) && is_closed(all() & ~x); }

 private:
  std::vector<std::string> labels_;
  std::vector<Production> productions_;
  std::vector<std::vector<bool>> precedes_;
  std::vector<std::vector<int>> by_element_;  // production indices with a or b = element
};

/// Acyclic paths of a graph: distinct vertices, no chords. Element labels are
/// 1-based vertex lists such as "1-2-3"; elements are sorted by (length, word).
struct AcyclicPaths {
  TripleClosureSpace space;
  std::vector<std::vector<int>> paths;
};
AcyclicPaths path_space(const Graph& g);

/// Positive c-vectors (dimension vectors of indecomposables, indexed by
/// module id) with {x, y} |- x + y. `to_path[i]` is the acyclic path with the
/// support of module i; construction throws DomainError if support is not a
/// production-preserving bijection onto the acyclic paths.
struct CVectorSpace {
  TripleClosureSpace space;
  std::vector<int> to_path;
};
CVectorSpace cvector_space(const Algebra& a);

/// Pairs {i < j} of [n] with {i,j}, {j,k} |- {i,k}.
TripleClosureSpace inversion_space(int n);

struct BiclosedLattice {
  std::vector<Mask> sets;  // sorted by (size, mask)
  FiniteLattice lattice;
  /// Whether the exhaustive sweep confirming single-step reachability ran.
  bool exhaustive_checked = false;
};

/// Breadth-first search from the empty set by single-element additions,
/// followed (for at most 24 elements) by an exhaustive sweep; a biclosed set
/// missed by the search throws SingleStepViolation.
BiclosedLattice enumerate_biclosed(const TripleClosureSpace& s);

struct ClosureCriteria {
  bool single_step = true;
  bool join_formula = true;
  bool order_condition = true;
  bool polygon_condition = true;
  bool ok() const { return single_step && join_formula && order_condition && polygon_condition; }
};
/// The four hypotheses under which Bic is a semidistributive, congruence-uniform,
/// polygonal lattice with joins X v Y = closure(X u Y).
ClosureCriteria verify_closure_criteria(const TripleClosureSpace& s, const BiclosedLattice& bic);

/// Closed under middles of extensions whose middle term is indecomposable.
bool is_weakly_extension_closed(const Algebra& a, Mask x);
bool is_biclosed_subcategory(const Algebra& a, Mask x);

/// Members of b all of whose quotient substrings lie in b.
Mask pi_down(const Algebra& a, Mask b);
/// Indecomposables with some submodule substring in b.
Mask pi_up(const Algebra& a, Mask b);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct QuotientReport {
  std::vector<Check> checks;
  int bic_size = 0;
  int tors_size = 0;
  int contracted_covers = 0;
  bool ok() const;
};

/// Biclosed subcategories modulo the fibers of pi_down recover the lattice of
/// torsion classes (and the oriented exchange graph when given).
QuotientReport verify_quotient_theorem(const Algebra& a, const OrientedExchangeGraph* eg = nullptr);

}  // namespace oeg
