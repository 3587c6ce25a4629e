#pragma once

// Toric ideals I_A = ⟨ξ^u − ξ^v | Au = Av⟩ and the homogenized matrix Â.

#include "gkz/groebner.hpp"
#include "gkz/intlin.hpp"
#include "gkz/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkz {

// Rejects A with a zero column (InvalidMatrix, hypothesis "nonzero columns").
void require_nonzero_columns(const IntegerMatrix& a);
// Rejects A with rank < number of rows (hypothesis "full row rank").
void require_full_row_rank(const IntegerMatrix& a);

struct ToricData {
  IntegerMatrix matrix;
  std::vector<IntegerVector> kernel_basis;
  // Reduced grevlex Gröbner basis of I_A in k[ξ_1..ξ_n].
  std::vector<Polynomial> toric_gb;

  Ideal ideal() const { return Ideal(matrix.cols(), toric_gb); }
};

// The lattice basis binomials ξ^{v+} − ξ^{v−} saturated at ξ_1⋯ξ_n.
ToricData toric_ideal(const IntegerMatrix& a);

// ξ^{v+} − ξ^{v−} for an integer vector v.
Polynomial lattice_binomial(const IntegerVector& v);

// True when (1, ..., 1) is in the rational row span, i.e. in(I_A) = I_A.
bool is_standard_graded(const IntegerMatrix& a);

struct HomogenizedMatrix {
  IntegerMatrix matrix;  // (d+1)×(n+1)
  IntegerMatrix source;  // A
};

// Row of ones on top, then leftmost column (1, 0, ..., 0).
HomogenizedMatrix homogenize(const IntegerMatrix& a);

struct HomogeneityAudit {
  bool pass = true;
  std::optional<Polynomial> counterexample;
  std::string detail;
};

// Every Gröbner basis element must be a binomial ξ^u − ξ^v with Au = Av.
HomogeneityAudit a_homogeneity_audit(const ToricData& toric);

}  // namespace gkz
