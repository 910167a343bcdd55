#pragma once

// Exact dense linear algebra over a field K. Elimination is fraction-free
// (Bareiss): cross-multiplication with exact division by the previous pivot,
// which keeps intermediate entries as small as the arithmetic allows.

#include <optional>
#include <stdexcept>
#include <vector>

namespace pairalg {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> mat_identity(size_t n, const K& one_elem) {
  Matrix<K> m(n, std::vector<K>(n, one_elem.zero()));
  for (size_t i = 0; i < n; ++i) m[i][i] = one_elem.one();
  return m;
}

template <class K>
Matrix<K> mat_mul(const Matrix<K>& a, const Matrix<K>& b) {
  const size_t r = a.size(), mid = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != mid) throw std::domain_error("mat_mul: shape mismatch");
  Matrix<K> out(r, std::vector<K>(cols));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols; ++j) {
      K s = a[i][0] * b[0][j];
      for (size_t k = 1; k < mid; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

template <class K>
std::vector<K> mat_apply(const Matrix<K>& a, const std::vector<K>& v) {
  std::vector<K> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    K s = a[i][0] * v[0];
    for (size_t k = 1; k < v.size(); ++k) s += a[i][k] * v[k];
    out[i] = s;
  }
  return out;
}

template <class K>
Matrix<K> mat_transpose(const Matrix<K>& a) {
  if (a.empty()) return a;
  Matrix<K> out(a[0].size(), std::vector<K>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

namespace detail {

template <class K>
struct Echelon {
  Matrix<K> m;                 // row echelon (Bareiss-scaled rows)
  std::vector<size_t> pivots;  // pivot column per pivot row
  int swaps = 0;
};

template <class K>
Echelon<K> bareiss_echelon(Matrix<K> m) {
  Echelon<K> e;
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t row = 0;
  K prev;  // previous pivot; unset until first step
  bool have_prev = false;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      std::swap(m[piv], m[row]);
      ++e.swaps;
    }
    for (size_t i = row + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        K t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        m[i][j] = have_prev ? t / prev : t;
      }
      m[i][col] = m[i][col].zero();
    }
    prev = m[row][col];
    have_prev = true;
    e.pivots.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace detail

template <class K>
size_t mat_rank(const Matrix<K>& m) {
  return detail::bareiss_echelon(m).pivots.size();
}

template <class K>
K mat_det(const Matrix<K>& m) {
  const size_t n = m.size();
  if (n == 0 || m[0].size() != n) throw std::domain_error("mat_det: square matrix required");
  auto e = detail::bareiss_echelon(m);
  K zero = m[0][0].zero();
  if (e.pivots.size() < n) return zero;
  K d = e.m[n - 1][n - 1];  // Bareiss: the last pivot is det (up to swap sign)
  return (e.swaps % 2) ? -d : d;
}

// Exact basis of the right null space of m (possibly empty).
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  if (m.empty() || m[0].empty()) {
    // kernel of the empty map is the whole (possibly 0-dim) domain; no basis
    // can be produced without a field context, so only handle cols==0 here.
    return {};
  }
  const size_t cols = m[0].size();
  const K zero = m[0][0].zero(), one = m[0][0].one();
  auto e = detail::bareiss_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<K>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> v(cols, zero);
    v[f] = one;
    for (size_t r = e.pivots.size(); r-- > 0;) {
      size_t pc = e.pivots[r];
      if (pc > f) continue;
      K s = zero;
      for (size_t j = pc + 1; j < cols; ++j)
        if (!v[j].is_zero()) s += e.m[r][j] * v[j];
      v[pc] = -s / e.m[r][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, or nullopt when inconsistent.
template <class K>
std::optional<std::vector<K>> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
  if (a.empty()) return std::vector<K>{};
  const size_t rows = a.size(), cols = a[0].size();
  Matrix<K> aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto e = detail::bareiss_echelon(std::move(aug));
  const K zero = b.empty() ? a[0][0].zero() : b[0].zero();
  for (size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] == cols) return std::nullopt;  // pivot in the constant column
  std::vector<K> x(cols, zero);
  for (size_t r = e.pivots.size(); r-- > 0;) {
    size_t pc = e.pivots[r];
    K s = e.m[r][cols];
    for (size_t j = pc + 1; j < cols; ++j)
      if (!x[j].is_zero()) s -= e.m[r][j] * x[j];
    x[pc] = s / e.m[r][pc];
  }
  return x;
}

template <class K>
Matrix<K> mat_inverse(const Matrix<K>& m) {
  const size_t n = m.size();
  if (n == 0 || m[0].size() != n) throw std::domain_error("mat_inverse: square matrix required");
  const K zero = m[0][0].zero(), one = m[0][0].one();
  Matrix<K> inv(n, std::vector<K>(n, zero));
  for (size_t j = 0; j < n; ++j) {
    std::vector<K> e(n, zero);
    e[j] = one;
    auto col = solve_linear(m, e);
    if (!col) throw std::domain_error("mat_inverse: singular matrix");
    for (size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

// Leibniz determinant for n <= 3 over any commutative ring (no division).
template <class R>
R det_small(const Matrix<R>& m) {
  switch (m.size()) {
    case 1:
      return m[0][0];
    case 2:
      return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default:
      throw std::domain_error("det_small: size must be 1..3");
  }
}

}  // namespace pairalg
