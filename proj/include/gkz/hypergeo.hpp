#pragma once

// Verification pipeline for A-hypergeometric systems, carried out in the
// commutative model R = k[x,ξ]/⟨in(I_A), Axξ⟩.
//
// Phase-space polynomials use the layout from poly.hpp: x_j at index j and
// ξ_j at index n + j. Parameters β never enter any ideal; they are report
// metadata only.

#include "gkz/cone.hpp"
#include "gkz/groebner.hpp"
#include "gkz/intlin.hpp"
#include "gkz/toric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gkz {

// The d bilinear forms Σ_j a_ij x_j ξ_j, symbols of the Euler operators.
struct EulerSymbols {
  std::size_t n = 0;
  std::vector<Polynomial> forms;
};

EulerSymbols euler_symbol_forms(const IntegerMatrix& a);

// f ∈ k[ξ_1..ξ_n] placed in the ξ block of k[x, ξ].
Polynomial lift_to_phase_space(const Polynomial& f, std::size_t n);
// Inverse of lift_to_phase_space; throws if f involves an x variable.
Polynomial restrict_to_xi(const Polynomial& f, std::size_t n);

// I_A + ⟨Axξ⟩ in 2n variables.
Ideal parameter_theorem_ideal(const IntegerMatrix& a);

struct ParameterVerdict {
  std::size_t n = 0;
  std::size_t rank = 0;
  std::size_t forms = 0;
  std::size_t dim_before = 0;  // dim k[x,ξ]/I_A
  std::size_t dim_after = 0;   // dim k[x,ξ]/(I_A + ⟨Axξ⟩)
  std::size_t drop = 0;
  // Set only when rank(A) = d: the forms cut the dimension by their number.
  std::optional<bool> system_of_parameters;
  bool pass = false;
};

// Requires nonzero columns; rank-deficient A skips the system-of-parameters clause.
ParameterVerdict verify_parameter_theorem(const IntegerMatrix& a);

enum class CharacteristicPath { direct, homogenized };

// ⟨in(I_A), Axξ⟩ with in taken for the weight (x: 0, ξ: 1).
struct CharacteristicModel {
  IntegerMatrix matrix;
  Ideal initial_ideal{0};  // in(I_A) ⊂ k[ξ]
  Ideal ideal{0};          // in 2n variables
  std::size_t dimension = 0;
  bool graded = false;
  CharacteristicPath path = CharacteristicPath::direct;
  // in(I_A) from Gröbner deformation and from the Â contraction agree, and
  // (graded A) the direct and Â characteristic ideals have equal reduced bases.
  bool routes_agree = false;
};

// in_w(I_A) for w = (1, ..., 1) by Gröbner deformation.
Ideal initial_ideal_by_deformation(const ToricData& toric);
// ⟨I_Â, ξ_0⟩ with ξ_0 set to zero and indices shifted down.
Ideal initial_ideal_by_homogenization(const IntegerMatrix& a);

// Requires full row rank and nonzero columns (throws InvalidMatrix).
CharacteristicModel characteristic_ideal(const IntegerMatrix& a);

struct HolonomicityVerdict {
  std::size_t n = 0;
  std::size_t dimension = 0;
  CharacteristicPath path = CharacteristicPath::direct;
  bool routes_agree = false;
  bool holonomic = false;  // dimension ≤ n
};

HolonomicityVerdict verify_holonomicity(const IntegerMatrix& a);
HolonomicityVerdict verify_holonomicity(const CharacteristicModel& model);

struct HomogenizationVerdict {
  bool trivially_consistent = false;  // A is standard graded
  IntegerMatrix hat;
  std::vector<Polynomial> left;   // reduced basis of in(I_A) in k[ξ]
  std::vector<Polynomial> right;  // reduced basis of ⟨I_Â, ξ_0⟩ contracted to k[ξ]
  bool consistent = false;
  // dim k[x̂,ξ]/⟨in(I_A), Axξ⟩ and dim k[x̂,ξ̂]/⟨I_Â, ξ_0, Âx̂ξ̂⟩
  std::optional<std::size_t> extended_left_dim;
  std::optional<std::size_t> extended_right_dim;
  bool extended_consistent = false;
};

HomogenizationVerdict homogenization_reduction(const IntegerMatrix& a);

// dim_k k[ξ]/⟨in(I_A), A·diag(p)·ξ⟩; nullopt if infinite. Throws
// std::invalid_argument when p has a zero coordinate or the wrong length.
std::optional<std::size_t> fiber_degree(const CharacteristicModel& model, const RationalVector& p);
std::optional<std::size_t> fiber_degree(const IntegerMatrix& a, const RationalVector& p);

// Random point with coordinates ±[1,1000]/[1,1000].
RationalVector random_generic_point(std::size_t n, std::mt19937_64& rng);

struct FiberSample {
  RationalVector point;
  std::optional<std::size_t> degree;
};

struct FamilyVerdict {
  // Every generator lies in k[x, ξ] and is either ξ-only or an Euler form.
  bool parameter_free = false;
  std::vector<FiberSample> attempts;  // every sampled point, resamples included
  std::size_t requested = 0;
  std::size_t resamples = 0;
  std::optional<std::size_t> common_degree;
  bool pass = false;
};

constexpr std::size_t kMaxResamples = 3;

FamilyVerdict family_check(const CharacteristicModel& model, std::size_t samples,
                           std::uint64_t seed);
FamilyVerdict family_check(const IntegerMatrix& a, std::size_t samples, std::uint64_t seed);

struct FaceAudit {
  Face face;
  std::size_t size = 0;                 // |τ|
  std::optional<std::size_t> dimension; // of k[x_τ, ξ_τ]/(I_{A_τ} + ⟨A_τ x_τ ξ_τ⟩)
  bool pass = false;
};

std::vector<FaceAudit> face_dimension_audit(const IntegerMatrix& a);

struct FaceTransversality {
  Face face;
  std::size_t instances = 0;
  std::size_t passed = 0;
  bool boundary_refused = false;
};

struct TransversalitySummary {
  std::vector<FaceTransversality> faces;
  std::size_t instances = 0;
  std::size_t passed = 0;
  bool pass = false;
};

// Certifies `samples` random instances per nonempty face and checks that a
// point with a zero ξ-coordinate is refused for every face.
TransversalitySummary transversality_sampling(const IntegerMatrix& a, std::size_t samples,
                                              std::uint64_t seed);

struct VerificationOptions {
  std::size_t samples = 3;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  IntegerMatrix matrix;
  ToricData toric;
  HomogeneityAudit homogeneity;
  std::optional<std::size_t> toric_dimension;  // dim k[ξ]/I_A, expected rank(A)
  ParameterVerdict parameter;
  CharacteristicModel characteristic;
  HolonomicityVerdict holonomicity;
  HomogenizationVerdict homogenization;
  FamilyVerdict family;
  std::vector<FaceAudit> faces;
  TransversalitySummary transversality;
  std::map<std::string, double> timings_ms;

  bool all_pass() const;
};

// Full pipeline; requires full row rank and nonzero columns.
VerificationReport verify(const IntegerMatrix& a, const VerificationOptions& options = {});

}  // namespace gkz
