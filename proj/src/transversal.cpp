#include "gkz/transversal.hpp"

#include "gkz/errors.hpp"

#include <stdexcept>

namespace gkz {

TransversalityInstance::TransversalityInstance(RationalMatrix l, RationalVector p,
                                               RationalVector q, std::optional<Face> face)
    : l_(std::move(l)), p_(std::move(p)), q_(std::move(q)), face_(std::move(face)) {
  if (p_.size() != l_.cols() || q_.size() != l_.cols())
    throw std::invalid_argument("TransversalityInstance: point length must equal columns of L");
  for (std::size_t k = 0; k < l_.rows(); ++k) {
    Rational s = 0;
    for (std::size_t j = 0; j < l_.cols(); ++j) s += l_(k, j) * p_[j] * q_[j];
    if (s != 0)
      throw InvalidInstance("(p,q) is not on Var(Lxξ): row " + std::to_string(k + 1) +
                            " evaluates to " + s.get_str());
  }
}

RationalMatrix scale_columns(const RationalMatrix& l, const RationalVector& v) {
  if (v.size() != l.cols())
    throw std::invalid_argument("scale_columns: vector length must equal column count");
  RationalMatrix out = l;
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) out(i, j) *= v[j];
  return out;
}

namespace {

void require_nonzero_q(const RationalVector& q) {
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] == 0)
      throw OrbitBoundaryPoint("orbit-boundary point: xi-coordinate " + std::to_string(i + 1) +
                               " of q is zero; the transversality certificate needs every xi-coordinate nonzero");
}

bool in_tangent_kernel(const TransversalityInstance& in, const RationalVector& y,
                       const RationalVector& eta) {
  const RationalVector lq = multiply(scale_columns(in.l(), in.q()), y);
  const RationalVector lp = multiply(scale_columns(in.l(), in.p()), eta);
  for (std::size_t k = 0; k < lq.size(); ++k)
    if (lq[k] + lp[k] != 0) return false;
  return true;
}

}  // namespace

RationalVector kernel_lift(const TransversalityInstance& instance, const RationalVector& eta) {
  require_nonzero_q(instance.q());
  if (eta.size() != instance.q().size())
    throw std::invalid_argument("kernel_lift: eta has the wrong length");
  RationalVector y(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i)
    y[i] = -instance.p()[i] * eta[i] / instance.q()[i];
  if (!in_tangent_kernel(instance, y, eta))
    throw std::logic_error("kernel_lift: lift failed exact kernel verification");
  return y;
}

TransversalityCertificate certify_transversality(const TransversalityInstance& instance) {
  require_nonzero_q(instance.q());
  const std::size_t n = instance.q().size();
  TransversalityCertificate cert;
  RationalMatrix etas(n, n);
  bool all_verified = true;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector eta(n);
    eta[i] = 1;
    KernelLift lift{eta, kernel_lift(instance, eta), false};
    lift.verified = in_tangent_kernel(instance, lift.y, lift.eta);
    all_verified = all_verified && lift.verified;
    for (std::size_t j = 0; j < n; ++j) etas(i, j) = eta[j];
    cert.lifts.push_back(std::move(lift));
  }
  cert.surjective = rank(etas) == n;
  cert.passed = all_verified && cert.surjective;
  return cert;
}

RationalVector sample_orbit_point(const IntegerMatrix& a, const Face& face,
                                  const RationalVector& t) {
  if (t.size() != a.rows())
    throw std::invalid_argument("sample_orbit_point: torus point must have length d");
  for (const auto& tk : t)
    if (tk == 0) throw std::invalid_argument("sample_orbit_point: torus coordinate is zero");
  RationalVector q(a.cols());
  for (auto j : face.columns) {
    if (j >= a.cols()) throw std::out_of_range("sample_orbit_point: face column out of range");
    Rational value = 1;
    for (std::size_t k = 0; k < a.rows(); ++k) {
      const Integer& e = a(k, j);
      if (e == 0) continue;
      const unsigned long magnitude = Integer(abs(e)).get_ui();
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), t[k].get_num_mpz_t(), magnitude);
      mpz_pow_ui(power.get_den_mpz_t(), t[k].get_den_mpz_t(), magnitude);
      power.canonicalize();
      value *= e > 0 ? power : 1 / power;
    }
    q[j] = value;
  }
  return q;
}

Rational random_small_rational(std::mt19937_64& rng, bool signed_value) {
  std::uniform_int_distribution<long> part(1, 10);
  const long num = part(rng);
  const long den = part(rng);
  Rational r(num, den);
  r.canonicalize();
  if (signed_value && std::uniform_int_distribution<int>(0, 1)(rng)) r = -r;
  return r;
}

TransversalityInstance sample_face_instance(const IntegerMatrix& a, const Face& face,
                                            std::mt19937_64& rng) {
  if (face.columns.empty())
    throw std::invalid_argument("sample_face_instance: empty face has no instance");
  RationalVector t(a.rows());
  for (auto& tk : t) tk = random_small_rational(rng, false);
  const RationalVector q_full = sample_orbit_point(a, face, t);

  const IntegerMatrix a_tau = column_submatrix(a, face.columns);
  RationalVector q;
  for (auto j : face.columns) q.push_back(q_full[j]);
  const RationalMatrix l = to_rational(a_tau);

  RationalVector p(q.size());
  for (const auto& v : rational_kernel(scale_columns(l, q))) {
    const Rational c = random_small_rational(rng, true);
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += c * v[j];
  }
  return TransversalityInstance(l, std::move(p), std::move(q), face);
}

}  // namespace gkz
