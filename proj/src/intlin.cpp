#include "gkz/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gkz {

namespace {

IntegerMatrix identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

template <class T>
void swap_cols(Matrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += factor * row[source]
void add_row(IntegerMatrix& m, std::size_t target, std::size_t source,
             const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col(IntegerMatrix& m, std::size_t target, std::size_t source,
             const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

}  // namespace

RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

IntegerVector multiply(const IntegerMatrix& a, std::span<const Integer> v) {
  if (v.size() != a.cols())
    throw std::invalid_argument("multiply: vector length does not match columns");
  IntegerVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

RationalVector multiply(const RationalMatrix& a, std::span<const Rational> v) {
  if (v.size() != a.cols())
    throw std::invalid_argument("multiply: vector length does not match columns");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

RationalMatrix row_echelon(const RationalMatrix& a,
                           std::vector<std::size_t>* pivot_columns) {
  RationalMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivot_columns) *pivot_columns = std::move(pivots);
  return m;
}

std::size_t rank(const RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  row_echelon(a, &pivots);
  return pivots.size();
}

std::size_t rank(const IntegerMatrix& a) { return rank(to_rational(a)); }

std::vector<RationalVector> rational_kernel(const RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = row_echelon(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             std::span<const Rational> b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_rational: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix r = row_echelon(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, a.cols());
  return x;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  IntegerMatrix m = a;
  IntegerMatrix p = identity(d);
  IntegerMatrix q = identity(n);
  IntegerVector diagonal;

  for (std::size_t t = 0; t < std::min(d, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto select_pivot = [&](bool cross_only) {
      bool found = false;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < d; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (cross_only && i != t && j != t) continue;
          if (m(i, j) == 0) continue;
          if (!found || abs(m(i, j)) < abs(m(bi, bj))) {
            found = true;
            bi = i;
            bj = j;
          }
        }
      if (!found) return false;
      swap_rows(m, t, bi);
      swap_rows(p, t, bi);
      swap_cols(m, t, bj);
      swap_cols(q, t, bj);
      return true;
    };

    if (!select_pivot(false)) break;

    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < d; ++i) {
        if (m(i, t) == 0) continue;
        Integer f = m(i, t) / m(t, t);  // truncating division
        add_row(m, i, t, -f);
        add_row(p, i, t, -f);
        residue = residue || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        Integer f = m(t, j) / m(t, t);
        add_col(m, j, t, -f);
        add_col(q, j, t, -f);
        residue = residue || m(t, j) != 0;
      }
      if (residue) {
        select_pivot(true);
        continue;
      }
      // Enforce d_t | every trailing entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (m(i, j) % m(t, t) != 0) {
            add_row(m, t, i, 1);
            add_row(p, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
      select_pivot(true);
    }

    if (m(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) m(t, j) = -m(t, j);
      for (std::size_t j = 0; j < d; ++j) p(t, j) = -p(t, j);
    }
    diagonal.push_back(m(t, t));
  }
  return {std::move(diagonal), std::move(p), std::move(q)};
}

IntegerVector primitive(IntegerVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

IntegerVector clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x * l));
  return primitive(std::move(out));
}

std::vector<IntegerVector> kernel_lattice_basis(const IntegerMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  const std::size_t r = snf.diagonal.size();
  std::vector<IntegerVector> basis;
  for (std::size_t j = r; j < a.cols(); ++j) {
    IntegerVector v = snf.right.column(j);
    // Sign convention: first nonzero entry positive.
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (first != v.end() && *first < 0)
      for (auto& x : v) x = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool rowspan_contains_ones(const IntegerMatrix& a) {
  IntegerMatrix extended(a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) extended(i, j) = a(i, j);
  for (std::size_t j = 0; j < a.cols(); ++j) extended(a.rows(), j) = 1;
  return rank(extended) == rank(a);
}

IntegerMatrix column_submatrix(const IntegerMatrix& a,
                               std::span<const std::size_t> indices) {
  IntegerMatrix sub(a.rows(), indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= a.cols())
      throw std::out_of_range("column_submatrix: column index " +
                              std::to_string(indices[k]) + " out of range");
    for (std::size_t i = 0; i < a.rows(); ++i) sub(i, k) = a(i, indices[k]);
  }
  return sub;
}

std::string to_string(const IntegerMatrix& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << a(i, j).get_str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace gkz
