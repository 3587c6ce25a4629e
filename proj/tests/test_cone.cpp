#include "gkz/cone.hpp"
#include "gkz/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace gkz;

namespace {

using Columns = std::vector<std::size_t>;

std::set<Columns> column_sets(const std::vector<Face>& faces) {
  std::set<Columns> out;
  for (const auto& f : faces) out.insert(f.columns);
  return out;
}

// Random matrices with nonzero columns, not necessarily of full rank, with
// signed entries so that many cones are not pointed.
std::vector<IntegerMatrix> signed_battery(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<IntegerMatrix> out;
  while (out.size() < count) {
    const std::size_t d = 1 + rng() % 3, n = 1 + rng() % 5;
    IntegerMatrix a = oracle::random_matrix(rng, d, n, -2, 2);
    if (!oracle::has_zero_column(a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<IntegerMatrix> all_matrices() {
  auto out = oracle::fixed_corpus();
  for (auto& a : oracle::random_battery(3, 20)) out.push_back(std::move(a));
  for (auto& a : signed_battery(9, 60)) out.push_back(std::move(a));
  return out;
}

}  // namespace

TEST(Faces, Examples) {
  EXPECT_EQ(column_sets(enumerate_faces(IntegerMatrix{{1, 0}, {0, 1}})),
            (std::set<Columns>{{}, {0}, {1}, {0, 1}}));
  EXPECT_EQ(column_sets(enumerate_faces(IntegerMatrix{{1, 1, 1}, {0, 1, 2}})),
            (std::set<Columns>{{}, {0}, {2}, {0, 1, 2}}));
  EXPECT_EQ(column_sets(enumerate_faces(IntegerMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}})),
            (std::set<Columns>{{}, {0}, {3}, {0, 1, 2, 3}}));
  EXPECT_EQ(column_sets(enumerate_faces(IntegerMatrix{{1, 2}})), (std::set<Columns>{{}, {0, 1}}));
  // A line: the only face is the whole cone.
  EXPECT_EQ(column_sets(enumerate_faces(IntegerMatrix{{1, -1}})), (std::set<Columns>{{0, 1}}));
}

TEST(Faces, OrderedBySizeThenColumns) {
  const auto faces = enumerate_faces(IntegerMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}});
  for (std::size_t k = 0; k + 1 < faces.size(); ++k) {
    const auto& x = faces[k].columns;
    const auto& y = faces[k + 1].columns;
    EXPECT_TRUE(x.size() < y.size() || (x.size() == y.size() && x < y));
  }
}

TEST(Faces, MatchSeparationOracle) {
  for (const auto& a : all_matrices())
    EXPECT_EQ(column_sets(enumerate_faces(a)), oracle::faces_by_separation(a)) << to_string(a);
}

TEST(Faces, MatchNormalEnumerationOracleOnFullRank) {
  for (const auto& a : all_matrices()) {
    if (oracle::rank(a) != a.rows()) continue;
    EXPECT_EQ(column_sets(enumerate_faces(a)), oracle::faces_by_normal_enumeration(a))
        << to_string(a);
  }
}

TEST(Faces, CertificatesVerify) {
  for (const auto& a : all_matrices())
    for (const auto& f : enumerate_faces(a)) {
      EXPECT_TRUE(verify_certificate(a, f)) << to_string(a);
      EXPECT_EQ(f.dim, oracle::rank(column_submatrix(a, f.columns)));
    }
}

TEST(Faces, BrokenCertificateIsRejected) {
  const IntegerMatrix a{{1, 1, 1}, {0, 1, 2}};
  auto faces = enumerate_faces(a);
  auto it = std::find_if(faces.begin(), faces.end(),
                         [](const Face& f) { return f.columns == Columns{0}; });
  ASSERT_NE(it, faces.end());
  Face wrong = *it;
  wrong.columns = {1};
  EXPECT_FALSE(verify_certificate(a, wrong));
}

TEST(Faces, ClosedUnderIntersection) {
  for (const auto& a : all_matrices()) {
    const auto sets = column_sets(enumerate_faces(a));
    for (const auto& x : sets)
      for (const auto& y : sets) {
        Columns z;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(z));
        EXPECT_TRUE(sets.count(z)) << to_string(a);
      }
  }
}

TEST(Faces, DimensionMonotoneUnderInclusion) {
  for (const auto& a : all_matrices()) {
    const auto faces = enumerate_faces(a);
    for (const auto& f : faces)
      for (const auto& g : faces)
        if (std::includes(g.columns.begin(), g.columns.end(), f.columns.begin(),
                          f.columns.end())) {
          EXPECT_LE(f.dim, g.dim);
        }
    // The whole cone has the rank of A.
    EXPECT_EQ(faces.back().columns.size(), a.cols());
    EXPECT_EQ(faces.back().dim, oracle::rank(a));
  }
}

TEST(Facets, HaveCorankOne) {
  const auto f = facets(IntegerMatrix{{1, 1, 1}, {0, 1, 2}});
  EXPECT_EQ(column_sets(f), (std::set<Columns>{{0}, {2}}));
  for (const auto& a : all_matrices())
    for (const auto& face : facets(a)) EXPECT_EQ(face.dim + 1, oracle::rank(a));
}

TEST(OneTau, Indicator) {
  Face f;
  f.columns = {0, 2};
  EXPECT_EQ(one_tau(f, 4), (std::vector<int>{1, 0, 1, 0}));
  EXPECT_EQ(one_tau(Face{}, 2), (std::vector<int>{0, 0}));
}

TEST(OrbitDimension, Examples) {
  const IntegerMatrix a{{1, 1, 1}, {0, 1, 2}};
  for (const auto& f : enumerate_faces(a)) {
    const std::size_t expected = f.columns.empty() ? 0 : f.columns.size() == 1 ? 1 : 2;
    EXPECT_EQ(orbit_dimension(a, f), expected);
  }
}

TEST(Faces, RejectsZeroColumn) {
  EXPECT_THROW(enumerate_faces(IntegerMatrix{{1, 0}}), InvalidMatrix);
}
