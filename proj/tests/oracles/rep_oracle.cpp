#include "oracles/rep_oracle.hpp"

#include <stdexcept>

namespace oracle {

namespace {

std::int64_t md(std::int64_t x) {
  x %= prime;
  return x < 0 ? x + prime : x;
}

std::int64_t inverse(std::int64_t x) {
  std::int64_t r = 1, b = md(x), e = prime - 2;
  while (e) {
    if (e & 1) r = r * b % prime;
    b = b * b % prime;
    e >>= 1;
  }
  return r;
}

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = row;
    while (p < m.rows && m(p, col) == 0) ++p;
    if (p == m.rows) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    const std::int64_t inv = inverse(m(row, col));
    for (int j = 0; j < m.cols; ++j) m(row, j) = m(row, j) * inv % prime;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::int64_t f = m(i, col);
      for (int j = 0; j < m.cols; ++j) m(i, j) = md(m(i, j) - f * m(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix mul(const Matrix& x, const Matrix& y) {
  Matrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k)
      if (x(i, k))
        for (int j = 0; j < y.cols; ++j) z(i, j) = (z(i, j) + x(i, k) * y(k, j)) % prime;
  return z;
}

Matrix sub(const Matrix& x, const Matrix& y) {
  Matrix z(x.rows, x.cols);
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = md(x.a[i] - y.a[i]);
  return z;
}

Matrix identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// Columns of a linear map given by its values on unit vectors.
Matrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

void append(std::vector<std::int64_t>& out, const Matrix& m) { out.insert(out.end(), m.a.begin(), m.a.end()); }

struct Layout {
  std::vector<int> offset;
  int total = 0;
};

// One block of size rows[i] x cols[i] per index.
Layout layout(const std::vector<int>& rows, const std::vector<int>& cols) {
  Layout l;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    l.offset.push_back(l.total);
    l.total += rows[i] * cols[i];
  }
  return l;
}

std::vector<Matrix> unpack(const std::vector<std::int64_t>& v, const Layout& l, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Matrix m(rows[i], cols[i]);
    for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = v[l.offset[i] + k];
    out.push_back(std::move(m));
  }
  return out;
}

// Block of E_{alpha_k} ... E_{alpha_1} from the M part into the N part, for f.
Matrix relation_block(const oeg::Algebra& a, const std::vector<int>& path, const Rep& m, const Rep& n,
                      const std::vector<Matrix>& f) {
  const auto& arrows = a.arrows();
  Matrix total(n.dim[arrows[path.back()].target], m.dim[arrows[path.front()].source]);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Matrix left = identity(n.dim[arrows[path[i]].target]);
    for (std::size_t j = i + 1; j < path.size(); ++j) left = mul(n.maps[path[j]], left);
    Matrix right = identity(m.dim[arrows[path.front()].source]);
    for (std::size_t j = 0; j < i; ++j) right = mul(m.maps[path[j]], right);
    const Matrix term = mul(mul(left, f[path[i]]), right);
    for (std::size_t k = 0; k < total.a.size(); ++k) total.a[k] = (total.a[k] + term.a[k]) % prime;
  }
  return total;
}

struct ExtData {
  std::vector<std::vector<std::int64_t>> cocycles;
  Matrix coboundaries;
  std::vector<int> rows, cols;
  Layout lay;
};

ExtData ext_data(const oeg::Algebra& a, const Rep& m, const Rep& n) {
  const auto& arrows = a.arrows();
  ExtData d;
  for (const auto& ar : arrows) {
    d.rows.push_back(n.dim[ar.target]);
    d.cols.push_back(m.dim[ar.source]);
  }
  d.lay = layout(d.rows, d.cols);

  std::vector<std::vector<std::int64_t>> z_cols;
  int eq_rows = 0;
  for (int var = 0; var < d.lay.total; ++var) {
    std::vector<std::int64_t> unit(d.lay.total, 0);
    unit[var] = 1;
    const auto f = unpack(unit, d.lay, d.rows, d.cols);
    std::vector<std::int64_t> col;
    for (const auto& rel : a.relations()) append(col, relation_block(a, rel, m, n, f));
    eq_rows = static_cast<int>(col.size());
    z_cols.push_back(std::move(col));
  }
  d.cocycles = d.lay.total == 0 ? std::vector<std::vector<std::int64_t>>{}
               : eq_rows == 0   ? nullspace(Matrix(0, d.lay.total))
                                : nullspace(from_columns(z_cols, eq_rows));

  std::vector<int> g_rows, g_cols;
  for (int v = 0; v < a.vertex_count(); ++v) {
    g_rows.push_back(n.dim[v]);
    g_cols.push_back(m.dim[v]);
  }
  const Layout gl = layout(g_rows, g_cols);
  std::vector<std::vector<std::int64_t>> b_cols;
  for (int var = 0; var < gl.total; ++var) {
    std::vector<std::int64_t> unit(gl.total, 0);
    unit[var] = 1;
    const auto g = unpack(unit, gl, g_rows, g_cols);
    std::vector<std::int64_t> col;
    for (std::size_t k = 0; k < arrows.size(); ++k)
      append(col, sub(mul(n.maps[k], g[arrows[k].source]), mul(g[arrows[k].target], m.maps[k])));
    b_cols.push_back(std::move(col));
  }
  d.coboundaries = from_columns(b_cols, d.lay.total);
  return d;
}

Matrix with_column(const Matrix& m, const std::vector<std::int64_t>& v) {
  Matrix out(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
    out(i, m.cols) = v[i];
  }
  return out;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(echelon(m).size()); }

std::vector<std::vector<std::int64_t>> nullspace(Matrix m) {
  const std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = md(-m(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Rep string_rep(const oeg::Algebra& a, const std::vector<int>& vertices) {
  Rep r;
  r.dim.assign(a.vertex_count(), 0);
  for (int v : vertices) r.dim[v] = 1;
  for (const auto& ar : a.arrows()) r.maps.emplace_back(r.dim[ar.target], r.dim[ar.source]);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const int x = vertices[i], y = vertices[i + 1];
    bool found = false;
    for (std::size_t k = 0; k < a.arrows().size(); ++k) {
      const auto& ar = a.arrows()[k];
      if ((ar.source == x && ar.target == y) || (ar.source == y && ar.target == x)) {
        r.maps[k](0, 0) = 1;
        found = true;
      }
    }
    if (!found) throw std::logic_error("consecutive string vertices are not joined by an arrow");
  }
  return r;
}

bool satisfies_relations(const oeg::Algebra& a, const Rep& r) {
  for (const auto& rel : a.relations()) {
    Matrix p = identity(r.dim[a.arrows()[rel.front()].source]);
    for (int k : rel) p = mul(r.maps[k], p);
    for (auto x : p.a)
      if (x) return false;
  }
  return true;
}

int hom_dim(const oeg::Algebra& a, const Rep& m, const Rep& n) {
  const auto& arrows = a.arrows();
  std::vector<int> rows, cols;
  for (int v = 0; v < a.vertex_count(); ++v) {
    rows.push_back(n.dim[v]);
    cols.push_back(m.dim[v]);
  }
  const Layout lay = layout(rows, cols);
  if (lay.total == 0) return 0;
  std::vector<std::vector<std::int64_t>> eq_cols;
  int eq_rows = 0;
  for (int var = 0; var < lay.total; ++var) {
    std::vector<std::int64_t> unit(lay.total, 0);
    unit[var] = 1;
    const auto theta = unpack(unit, lay, rows, cols);
    std::vector<std::int64_t> col;
    for (std::size_t k = 0; k < arrows.size(); ++k)
      append(col, sub(mul(n.maps[k], theta[arrows[k].source]), mul(theta[arrows[k].target], m.maps[k])));
    eq_rows = static_cast<int>(col.size());
    eq_cols.push_back(std::move(col));
  }
  if (eq_rows == 0) return lay.total;
  return lay.total - rank(from_columns(eq_cols, eq_rows));
}

int ext1_dim(const oeg::Algebra& a, const Rep& m, const Rep& n) {
  const ExtData d = ext_data(a, m, n);
  return static_cast<int>(d.cocycles.size()) - rank(d.coboundaries);
}

std::optional<Rep> nonsplit_middle(const oeg::Algebra& a, const Rep& m, const Rep& n) {
  const ExtData d = ext_data(a, m, n);
  const int base = rank(d.coboundaries);
  for (const auto& z : d.cocycles) {
    if (rank(with_column(d.coboundaries, z)) == base) continue;
    const auto f = unpack(z, d.lay, d.rows, d.cols);
    Rep e;
    for (int v = 0; v < a.vertex_count(); ++v) e.dim.push_back(n.dim[v] + m.dim[v]);
    for (std::size_t k = 0; k < a.arrows().size(); ++k) {
      const int s = a.arrows()[k].source, t = a.arrows()[k].target;
      Matrix x(e.dim[t], e.dim[s]);
      for (int i = 0; i < n.dim[t]; ++i)
        for (int j = 0; j < n.dim[s]; ++j) x(i, j) = n.maps[k](i, j);
      for (int i = 0; i < n.dim[t]; ++i)
        for (int j = 0; j < m.dim[s]; ++j) x(i, n.dim[s] + j) = f[k](i, j);
      for (int i = 0; i < m.dim[t]; ++i)
        for (int j = 0; j < m.dim[s]; ++j) x(n.dim[t] + i, n.dim[s] + j) = m.maps[k](i, j);
      e.maps.push_back(std::move(x));
    }
    if (!satisfies_relations(a, e)) throw std::logic_error("extension violates relations");
    return e;
  }
  return std::nullopt;
}

std::vector<int> hom_profile(const oeg::Algebra& a, const Rep& r) {
  std::vector<int> out;
  for (const auto& x : a.indecomposables()) out.push_back(hom_dim(a, string_rep(a, x.vertices), r));
  return out;
}

}  // namespace oracle
