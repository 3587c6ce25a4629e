#pragma once

// Pointwise certificates that Var(Lxξ) meets k^n × X transversally at
// points whose ξ-coordinates are all nonzero.

#include "gkz/cone.hpp"
#include "gkz/intlin.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gkz {

// A point (p, q) ∈ k^n_x × k^n_ξ on Var(Lxξ).
class TransversalityInstance {
 public:
  // Throws InvalidInstance unless Σ_j L_kj p_j q_j = 0 for every row k,
  // std::invalid_argument on size mismatches.
  TransversalityInstance(RationalMatrix l, RationalVector p, RationalVector q,
                         std::optional<Face> face = std::nullopt);

  const RationalMatrix& l() const noexcept { return l_; }
  const RationalVector& p() const noexcept { return p_; }
  const RationalVector& q() const noexcept { return q_; }
  const std::optional<Face>& face() const noexcept { return face_; }

 private:
  RationalMatrix l_;
  RationalVector p_;
  RationalVector q_;
  std::optional<Face> face_;
};

// Column j of L multiplied by v_j.
RationalMatrix scale_columns(const RationalMatrix& l, const RationalVector& v);

// y with y_i = −p_i η_i / q_i, checked to satisfy L(q)y + L(p)η = 0.
// Throws OrbitBoundaryPoint when some q_i = 0.
RationalVector kernel_lift(const TransversalityInstance& instance, const RationalVector& eta);

struct KernelLift {
  RationalVector eta;
  RationalVector y;
  bool verified = false;  // L(q)y + L(p)η = 0 checked exactly
};

struct TransversalityCertificate {
  std::vector<KernelLift> lifts;  // one per standard basis vector η = e_i
  // The η-parts form a basis, so ker[L(q) L(p)] projects onto k^n_ξ.
  bool surjective = false;
  bool passed = false;
  std::string assumption =
      "smoothness of k^n x X at (p,q) is assumed: q is sampled on a torus orbit";
};

TransversalityCertificate certify_transversality(const TransversalityInstance& instance);

// q = t · 1^τ: q_i = Π_k t_k^{a_ki} for i ∈ τ, 0 otherwise. Throws
// std::invalid_argument if some t_k = 0.
RationalVector sample_orbit_point(const IntegerMatrix& a, const Face& face,
                                  const RationalVector& t);

// Random rational with numerator and denominator in [1, 10]; negated with
// probability 1/2 when `signed_value` is set.
Rational random_small_rational(std::mt19937_64& rng, bool signed_value);

// An instance on k^τ × k^τ for L = A_τ: q is a random point of Orb(τ)
// restricted to τ and p a random point of ker(A_τ·diag(q)).
// Precondition: the face is nonempty.
TransversalityInstance sample_face_instance(const IntegerMatrix& a, const Face& face,
                                            std::mt19937_64& rng);

}  // namespace gkz
