#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oeg/exchange.hpp"
#include "oeg/lattice.hpp"
#include "oeg/quiver.hpp"

namespace oeg {

/// Set of indecomposables of one algebra, bit i = indecomposable i.
using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

/// Between consecutive vertices of a string exactly one arrow exists; the
/// letter is direct when the walk follows it.
struct Letter {
  int arrow;
  bool direct;
  friend bool operator==(Letter, Letter) = default;
};

/// String module M(w). Vertices are pairwise distinct and listed in the
/// lexicographically smaller of the two orientations.
struct Indecomposable {
  int id = -1;
  std::vector<int> vertices;
  std::vector<Letter> letters;
  std::vector<int> dim;
  std::uint64_t support = 0;
};

enum class AlgebraKind { type_a, cyclic };

/// Monomial bound quiver algebra kQ/I whose indecomposables are all string
/// modules with distinct vertices. Relations are forbidden paths, listed as
/// arrow ids in walking order.
class Algebra {
 public:
  /// Type A: I generated by the 2-paths of every oriented 3-cycle.
  /// Oriented n-cycle (n >= 4): I generated by all paths of length n - 1.
  /// Anything else throws UnsupportedQuiver.
  static Algebra from_quiver(const IceQuiver& q);
  /// Q(n) with I generated by all paths of length n - 1, for any n >= 3.
  static Algebra cyclic(int n);
  static Algebra bound_quiver(int vertex_count, std::vector<Arrow> arrows,
                              std::vector<std::vector<int>> relations, AlgebraKind kind);

  /// Arrows reversed, each forbidden path reversed.
  Algebra opposite() const;

  AlgebraKind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }
  const std::vector<Indecomposable>& indecomposables() const { return modules_; }
  int size() const { return static_cast<int>(modules_.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

  /// Is the vertex sequence a string: distinct adjacent vertices, no forbidden path.
  bool is_string(std::span<const int> vertices) const;
  std::optional<int> find_by_support(std::uint64_t support) const;
  std::optional<int> find(std::span<const int> vertices) const;
  /// Word such as "1->2<-3" (1-based vertices).
  std::string name(int id) const;

  /// u is a quotient (resp. submodule) substring of w; includes u = w.
  bool is_quotient(int w, int u) const { return (quot_[w] >> u) & 1u; }
  bool is_submodule(int w, int u) const { return (sub_[w] >> u) & 1u; }
  Mask quotients(int w) const { return quot_[w]; }
  Mask submodules(int w) const { return sub_[w]; }

  /// Number of common substrings that are quotients of u and submodules of v.
  int hom_dim(int u, int v) const { return hom_[idx(u, v)]; }
  /// Middle term of the nonsplit extension 0 -> socle_side -> Z -> top -> 0,
  /// as sorted indecomposable ids, or nullopt when Ext^1(top, socle_side) = 0.
  const std::optional<std::vector<int>>& nonsplit_extension(int top, int socle_side) const {
    return ext_[idx(top, socle_side)];
  }
  Mask extension_middles(int top, int socle_side) const { return ext_mask_[idx(top, socle_side)]; }

  /// X(i, j) for the cyclic kind: socle vertex i (0-based), length j.
  std::optional<int> cyclic_module(int socle, int length) const;
  /// (socle vertex, length) of a uniserial module.
  std::optional<std::pair<int, int>> cyclic_coordinates(int id) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * modules_.size() + b; }
  std::optional<int> arrow_between(int from, int to) const;
  std::optional<std::pair<int, int>> locate(int w, std::uint64_t support) const;
  bool boundary_ok(int w, std::pair<int, int> interval, bool quotient) const;
  std::optional<std::vector<int>> compute_extension(int top, int socle_side) const;
  void enumerate_strings();
  void build_tables();

  AlgebraKind kind_ = AlgebraKind::type_a;
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> relations_;
  std::vector<std::vector<int>> arrow_id_;  // n x n, -1 if none
  std::vector<Indecomposable> modules_;
  std::vector<Mask> quot_, sub_, ext_mask_;
  std::vector<int> hom_;
  std::vector<std::optional<std::vector<int>>> ext_;
};

Mask fac(const Algebra& a, Mask x);
Mask sub(const Algebra& a, Mask x);
/// Least superset closed under extension middles.
Mask extension_closure(const Algebra& a, Mask x);
bool is_torsion_class(const Algebra& a, Mask t);
bool is_torsion_free_class(const Algebra& a, Mask f);

/// All torsion classes, sorted by (size, mask).
std::vector<Mask> torsion_classes(const Algebra& a);
/// Inclusion lattice on the given classes (index = position in the list).
FiniteLattice inclusion_lattice(const std::vector<Mask>& sets);

enum class Side { right, left };
/// right: {X : Hom(t, X) = 0 for t in x}; left: {X : Hom(X, f) = 0 for f in x}.
Mask perp(const Algebra& a, Mask x, Side side);

/// Least fixed point of extension and quotient closure of t u u.
Mask filt_join(const Algebra& a, Mask t, Mask u);
/// left perp of (right perp t  intersect  right perp u).
Mask perp_join(const Algebra& a, Mask t, Mask u);

/// Modules M(w_i) whose quotient closures are the canonical joinands of t.
std::vector<int> canonical_joinand_modules(const Algebra& a, Mask t);
std::vector<Mask> canonical_joinands(const Algebra& a, Mask t);
/// Modules M(w_i) with t = meet of the left perps of Sub(M(w_i)).
std::vector<int> canonical_meetand_modules(const Algebra& a, Mask t);
std::vector<Mask> canonical_meetands(const Algebra& a, Mask t);

/// Carries a set of modules to another algebra on the same vertices via
/// support (the duality D when `to` is the opposite algebra).
Mask transfer(const Algebra& from, const Algebra& to, Mask x);

/// Torsion class of each exchange graph node. The source node carries all
/// modules; a green mutation with c-vector c passes from T to T n left-perp(B),
/// where B is the indecomposable with dimension vector c. Returns nullopt
/// unless this is a cover-preserving bijection onto the torsion classes.
std::optional<std::vector<Mask>> torsion_class_labels(const Algebra& a, const OrientedExchangeGraph& g);

std::string format_set(const Algebra& a, Mask x);

}  // namespace oeg
