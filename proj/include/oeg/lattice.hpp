#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oeg {

/// Finite lattice on elements [0, size()). Holds the cover digraph (the
/// transitive reduction of the order), the order as bit rows, and full meet
/// and join tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Throws NotALattice with a witness pair when some pair lacks a meet or join,
  /// InputError when the relation is cyclic.
  static FiniteLattice from_covers(int size, std::span<const std::pair<int, int>> covers);
  static FiniteLattice from_order(int size, const std::function<bool(int, int)>& leq);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  bool leq(int x, int y) const { return (up_[idx(x, y / 64)] >> (y % 64)) & 1u; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  int meet(int x, int y) const { return meet_[static_cast<std::size_t>(x) * n_ + y]; }
  int join(int x, int y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<int>& upper_covers(int x) const { return upper_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lower_[x]; }
  /// Sorted (lower, upper) pairs.
  std::vector<std::pair<int, int>> covers() const;
  int cover_count() const;

  std::vector<int> join_irreducibles() const;
  std::vector<int> meet_irreducibles() const;
  /// Length of a longest chain from bottom to x.
  int rank(int x) const { return rank_[x]; }

  FiniteLattice dual() const;

 private:
  std::size_t idx(int x, int w) const { return static_cast<std::size_t>(x) * words_ + w; }
  static FiniteLattice build(int size, std::vector<std::uint64_t> up);

  int n_ = 0;
  int words_ = 0;
  int bottom_ = -1, top_ = -1;
  std::vector<std::uint64_t> up_;  // row x: bit y set iff x <= y
  std::vector<std::vector<int>> upper_, lower_;
  std::vector<int> meet_, join_, rank_;
};

struct Witness {
  int x = -1, y = -1, z = -1;
};

struct SemidistributivityResult {
  bool join_semidistributive = true;
  bool meet_semidistributive = true;
  std::optional<Witness> join_witness;  // x v z = y v z but (x ^ y) v z != x v z
  std::optional<Witness> meet_witness;  // x ^ z = y ^ z but (x v y) ^ z != x ^ z
  bool ok() const { return join_semidistributive && meet_semidistributive; }
};

/// Checks both semidistributive laws over all triples.
SemidistributivityResult check_semidistributive(const FiniteLattice& l);
bool is_semidistributive(const FiniteLattice& l);

struct PolygonResult {
  bool polygonal = true;
  /// Number of distinct polygon intervals by side count (two chains of
  /// lengths a, b give a + b sides).
  std::map<int, int> census;
  std::optional<std::pair<int, int>> witness;  // interval [x, y] that is not a polygon
};

/// Is [x, y] a polygon: exactly two maximal chains, disjoint except at x and y?
/// On success returns the two chains, each from x to y.
std::optional<std::pair<std::vector<int>, std::vector<int>>> polygon_chains(const FiniteLattice& l,
                                                                            int x, int y);
PolygonResult check_polygonal(const FiniteLattice& l);

/// Partition of the elements, as class index per element.
struct Congruence {
  std::vector<int> class_of;
  int class_count = 0;
  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;
};

/// Least congruence identifying every generating pair. Class indices are
/// numbered by first occurrence.
Congruence congruence_generated(const FiniteLattice& l, std::span<const std::pair<int, int>> pairs);

/// Throws NotACongruence (with a witness in the message) if the partition is
/// not compatible with meet and join.
void validate_congruence(const FiniteLattice& l, const Congruence& c);

struct QuotientLattice {
  FiniteLattice lattice;
  std::vector<int> projection;  // element -> class
};
QuotientLattice quotient(const FiniteLattice& l, const Congruence& c);

struct CongruenceUniformity {
  bool uniform = false;
  int join_irreducibles = 0;
  int meet_irreducibles = 0;
  int join_irreducible_congruences = 0;
  bool join_map_injective = false;
  bool meet_map_injective = false;
  bool jointly_surjective = false;
};

/// Day's criterion: j -> cg(j_*, j) and m -> cg(m, m^*) are bijections onto the
/// join-irreducible congruences.
CongruenceUniformity check_congruence_uniform(const FiniteLattice& l);
bool is_congruence_uniform(const FiniteLattice& l);

/// Exhaustive search for a sequence of interval doublings producing l, up to
/// isomorphism. Only intended for small lattices.
bool has_doubling_sequence(const FiniteLattice& l);

/// P[I] = (P_{<=y} x {0}) u ((P - P_{<=y}) u I) x {1} for I = [x, y].
/// Element order: the pairs sorted by (element, side).
struct DoubledLattice {
  FiniteLattice lattice;
  std::vector<std::pair<int, int>> elements;  // (original element, side)
};
DoubledLattice double_interval(const FiniteLattice& l, int x, int y);

/// Cover-preserving bijection a -> b, if one exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

struct ProjectionCheck {
  bool ok = true;
  std::string failure;
};

/// down, up idempotent and order-preserving, down o up = down, up o down = up.
ProjectionCheck verify_projection_pair(const FiniteLattice& l, std::span<const int> down,
                                       std::span<const int> up);

/// Minimum, in the refinement order, of the join representations of x by
/// join-irreducibles. Throws DomainError if it does not exist.
std::vector<int> canonical_join_representation(const FiniteLattice& l, int x);
std::vector<int> canonical_meet_representation(const FiniteLattice& l, int x);

std::vector<std::vector<int>> maximal_chains(const FiniteLattice& l);

struct FlipGraph {
  std::vector<std::vector<int>> chains;
  std::vector<std::pair<int, int>> edges;  // chain index pairs, i < j
  bool connected = false;
};

/// Maximal chains joined by polygonal flips.
FlipGraph polygonal_flip_graph(const FiniteLattice& l);

}  // namespace oeg
