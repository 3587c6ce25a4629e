#include "gkz/cone.hpp"

#include "gkz/toric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gkz {

namespace {

Rational dot(const RationalVector& c, const IntegerMatrix& a, std::size_t column) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += c[i] * a(i, column);
  return s;
}

std::vector<std::size_t> zero_set(const IntegerMatrix& a, const RationalVector& c) {
  std::vector<std::size_t> z;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (dot(c, a, j) == 0) z.push_back(j);
  return z;
}

RationalVector primitive_normal(const RationalVector& c) {
  RationalVector out;
  for (const auto& x : clear_denominators(c)) out.emplace_back(x);
  return out;
}

// Facets keyed by column set. A facet is spanned by columns of rank r − 1;
// its normal is the unique (up to scale) functional on colspan(A) vanishing
// on those columns.
std::map<std::vector<std::size_t>, RationalVector> facet_map(const IntegerMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (n > 24) throw std::invalid_argument("enumerate_faces: too many columns");

  // Basis B of the column span.
  std::vector<std::size_t> pivots;
  row_echelon(to_rational(a), &pivots);
  const std::size_t r = pivots.size();
  const IntegerMatrix basis = column_submatrix(a, pivots);

  // Column i in the coordinates of B^T: g_i = B^T a_i.
  RationalMatrix gram(n, r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += basis(i, k) * a(i, j);
      gram(j, k) = s;
    }

  std::map<std::vector<std::size_t>, RationalVector> found;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) subset.push_back(j);
    if (rank(column_submatrix(a, subset)) + 1 != r) continue;

    RationalMatrix constraints(subset.size(), r);
    for (std::size_t k = 0; k < subset.size(); ++k)
      for (std::size_t c = 0; c < r; ++c) constraints(k, c) = gram(subset[k], c);
    const auto kernel = rational_kernel(constraints);
    if (kernel.size() != 1) continue;

    RationalVector normal(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < r; ++k) normal[i] += basis(i, k) * kernel[0][k];

    bool nonneg = true, nonpos = true;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = dot(normal, a, j);
      nonneg = nonneg && v >= 0;
      nonpos = nonpos && v <= 0;
    }
    if (!nonneg && !nonpos) continue;
    if (!nonneg)
      for (auto& x : normal) x = -x;
    normal = primitive_normal(normal);
    found.emplace(zero_set(a, normal), std::move(normal));
  }
  return found;
}

bool face_less(const Face& x, const Face& y) {
  if (x.columns.size() != y.columns.size()) return x.columns.size() < y.columns.size();
  return x.columns < y.columns;
}

}  // namespace

std::vector<Face> enumerate_faces(const IntegerMatrix& a) {
  require_nonzero_columns(a);
  std::map<std::vector<std::size_t>, RationalVector> faces = facet_map(a);

  std::vector<std::size_t> all(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) all[j] = j;
  faces.emplace(all, RationalVector(a.rows()));

  // Close under intersection; the sum of supporting normals supports the
  // intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<std::vector<std::size_t>, RationalVector>> snapshot(faces.begin(),
                                                                              faces.end());
    for (std::size_t x = 0; x < snapshot.size(); ++x)
      for (std::size_t y = x + 1; y < snapshot.size(); ++y) {
        std::vector<std::size_t> meet;
        std::set_intersection(snapshot[x].first.begin(), snapshot[x].first.end(),
                              snapshot[y].first.begin(), snapshot[y].first.end(),
                              std::back_inserter(meet));
        if (faces.contains(meet)) continue;
        RationalVector normal(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
          normal[i] = snapshot[x].second[i] + snapshot[y].second[i];
        faces.emplace(std::move(meet), primitive_normal(normal));
        grew = true;
      }
  }

  std::vector<Face> out;
  for (auto& [columns, normal] : faces) {
    Face f{columns, normal, rank(column_submatrix(a, columns))};
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

std::vector<Face> facets(const IntegerMatrix& a) {
  require_nonzero_columns(a);
  std::vector<Face> out;
  for (auto& [columns, normal] : facet_map(a))
    out.push_back({columns, normal, rank(column_submatrix(a, columns))});
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

bool verify_certificate(const IntegerMatrix& a, const Face& face) {
  if (face.normal.size() != a.rows()) return false;
  std::vector<bool> on(a.cols(), false);
  for (auto j : face.columns) {
    if (j >= a.cols()) return false;
    on[j] = true;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Rational v = dot(face.normal, a, j);
    if (on[j] ? v != 0 : v <= 0) return false;
  }
  return true;
}

std::vector<int> one_tau(const Face& face, std::size_t n) {
  std::vector<int> v(n, 0);
  for (auto j : face.columns) {
    if (j >= n) throw std::out_of_range("one_tau: face column outside ambient size");
    v[j] = 1;
  }
  return v;
}

std::size_t orbit_dimension(const IntegerMatrix& a, const Face& face) {
  return rank(column_submatrix(a, face.columns));
}

}  // namespace gkz
