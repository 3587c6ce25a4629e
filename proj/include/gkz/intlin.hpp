#pragma once

// Exact integer and rational linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Dense row-major matrix with exact entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Builds from a list of rows; throws std::invalid_argument on ragged input.
  explicit Matrix(const std::vector<std::vector<T>>& rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("Matrix: ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("Matrix: ragged rows");
      for (long v : r) data_.emplace_back(v);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& a);

// Matrix-vector products; sizes must agree.
IntegerVector multiply(const IntegerMatrix& a, std::span<const Integer> v);
RationalVector multiply(const RationalMatrix& a, std::span<const Rational> v);

std::size_t rank(const IntegerMatrix& a);
std::size_t rank(const RationalMatrix& a);

// Reduced row echelon form over Q; pivot_columns receives the pivot indices.
RationalMatrix row_echelon(const RationalMatrix& a,
                           std::vector<std::size_t>* pivot_columns = nullptr);

// Basis of the rational null space {v : a v = 0}.
std::vector<RationalVector> rational_kernel(const RationalMatrix& a);

// Some solution of a x = b over Q, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             std::span<const Rational> b);

// Smith normal form D = P·A·Q with P, Q unimodular. diagonal holds the
// nonzero invariant factors d_1 | d_2 | ... (length = rank).
struct SmithForm {
  IntegerVector diagonal;
  IntegerMatrix left;   // P, d×d
  IntegerMatrix right;  // Q, n×n
};

SmithForm smith_normal_form(const IntegerMatrix& a);

// Basis of the saturated lattice {u ∈ Z^n : A u = 0}; n − rank(A) vectors.
std::vector<IntegerVector> kernel_lattice_basis(const IntegerMatrix& a);

// Whether (1, ..., 1) lies in the rational row span of a.
bool rowspan_contains_ones(const IntegerMatrix& a);

// Columns of a at the given (0-based) indices, in the given order.
// Throws std::out_of_range for an invalid index.
IntegerMatrix column_submatrix(const IntegerMatrix& a,
                               std::span<const std::size_t> indices);

// Divides v by the gcd of its entries (no-op on the zero vector).
IntegerVector primitive(IntegerVector v);

// Clears denominators and makes the result primitive.
IntegerVector clear_denominators(const RationalVector& v);

std::string to_string(const IntegerMatrix& a);

}  // namespace gkz
