#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace oeg {

/// Ice quiver stored as its exchange matrix B (n x m, row-major).
/// Rows are the mutable vertices [0, n); columns are all vertices [0, m),
/// frozen vertices being [n, m). The n x n block is skew-symmetric.
class IceQuiver {
 public:
  using Entry = std::int64_t;

  IceQuiver() = default;
  /// Throws InputError if the shape is inconsistent or the mutable block is
  /// not skew-symmetric.
  IceQuiver(int mutable_count, int vertex_count, std::vector<Entry> entries);
  static IceQuiver from_rows(int vertex_count, const std::vector<std::vector<Entry>>& rows);

  int mutable_count() const { return n_; }
  int vertex_count() const { return m_; }
  int frozen_count() const { return m_ - n_; }

  Entry at(int i, int j) const { return b_[static_cast<std::size_t>(i) * m_ + j]; }
  std::span<const Entry> row(int i) const {
    return {b_.data() + static_cast<std::size_t>(i) * m_, static_cast<std::size_t>(m_)};
  }
  const std::vector<Entry>& entries() const { return b_; }
  std::vector<std::vector<Entry>> rows() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;
  friend std::strong_ordering operator<=>(const IceQuiver&, const IceQuiver&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Entry> b_;
};

struct Arrow {
  int source;
  int target;
};

/// Vertices are 0-based; frozen vertices are the last `frozen_count` ones.
/// Rejects loops, 2-cycles and arrows between frozen vertices.
IceQuiver from_arrows(int vertex_count, int frozen_count, std::span<const Arrow> arrows);

/// One arrow per unit of positive entry, in row-major order.
std::vector<Arrow> to_arrows(const IceQuiver& q);

/// Mutation at mutable vertex k (0-based). Throws OverflowError instead of wrapping.
IceQuiver mutate(const IceQuiver& q, int k);

enum class FrameMode { framed, coframed };

/// Adds one frozen vertex n+i per mutable vertex i, with b_{i,n+i} = +1 (framed)
/// or -1 (coframed). Requires q to have no frozen vertices.
IceQuiver frame(const IceQuiver& q, FrameMode mode);

/// result(i, j) = q(perm[i], perm[j]) for j < n; frozen columns stay in place.
IceQuiver permute(const IceQuiver& q, std::span<const int> perm);

struct CanonicalForm {
  IceQuiver quiver;
  /// permutation[p] is the vertex of the input sitting at position p.
  std::vector<int> permutation;
};

/// Lexicographically least matrix over simultaneous permutations of rows and
/// mutable columns.
CanonicalForm canonical_form(const IceQuiver& q);

struct TypeA {
  friend bool operator==(TypeA, TypeA) = default;
};
struct Cyclic {
  int n;
  friend bool operator==(Cyclic, Cyclic) = default;
};
struct OtherClass {
  friend bool operator==(OtherClass, OtherClass) = default;
};
using QuiverClass = std::variant<TypeA, Cyclic, OtherClass>;

/// Type A (mutation class of a path) or the oriented n-cycle, n >= 4.
/// The oriented 3-cycle is reported as TypeA. Frozen vertices are ignored.
QuiverClass classify(const IceQuiver& q);
std::string to_string(const QuiverClass& c);

/// Simple undirected graph on [0, n).
class Graph {
 public:
  explicit Graph(int n = 0) : adj_(static_cast<std::size_t>(n)) {}
  int size() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int edge_count() const;

 private:
  std::vector<std::vector<int>> adj_;
};

/// Graph on the mutable vertices with an edge wherever b_ij != 0.
Graph underlying_graph(const IceQuiver& q);

/// Linear path 0 -> 1 -> ... -> n-1 with no frozen vertices.
IceQuiver path_quiver(int n);
/// Oriented cycle Q(n): i -> i+1 and n-1 -> 0.
IceQuiver cyclic_quiver(int n);

}  // namespace oeg
