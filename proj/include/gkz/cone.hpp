#pragma once

// Faces of the real cone R≥0·A, their indicator points 1^τ and orbit
// dimensions rank(A_τ).

#include "gkz/intlin.hpp"

#include <cstddef>
#include <vector>

namespace gkz {

struct Face {
  // Sorted 0-based column indices lying on the face.
  std::vector<std::size_t> columns;
  // Supporting functional c: c·a_i = 0 on the face, > 0 off it; zero for
  // the whole cone.
  RationalVector normal;
  // rank(A_τ)
  std::size_t dim = 0;

  bool operator==(const Face& other) const = default;
};

// All faces of R≥0·A, ordered by size then lexicographically by columns.
// Works for non-pointed cones and rank-deficient A. Requires nonzero columns.
std::vector<Face> enumerate_faces(const IntegerMatrix& a);

// The facets among enumerate_faces(a) (faces of rank rank(A) − 1).
std::vector<Face> facets(const IntegerMatrix& a);

// Checks c·a_i = 0 exactly on the face and c·a_i > 0 elsewhere.
bool verify_certificate(const IntegerMatrix& a, const Face& face);

// Indicator vector 1^τ of length n.
std::vector<int> one_tau(const Face& face, std::size_t n);

std::size_t orbit_dimension(const IntegerMatrix& a, const Face& face);

}  // namespace gkz
