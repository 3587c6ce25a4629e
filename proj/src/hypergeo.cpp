#include "gkz/hypergeo.hpp"

#include "gkz/errors.hpp"
#include "gkz/transversal.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace gkz {

namespace {

std::vector<std::size_t> xi_block(std::size_t n) {
  std::vector<std::size_t> target(n);
  for (std::size_t j = 0; j < n; ++j) target[j] = layout::xi_var(n, j);
  return target;
}

void validate_hypergeometric(const IntegerMatrix& a) {
  require_nonzero_columns(a);
  require_full_row_rank(a);
}

// ⟨gens lifted to the ξ block⟩ + Euler forms, in k[x, ξ].
Ideal phase_space_ideal(const std::vector<Polynomial>& xi_generators, const EulerSymbols& e) {
  std::vector<Polynomial> gens;
  for (const auto& g : xi_generators) gens.push_back(lift_to_phase_space(g, e.n));
  gens.insert(gens.end(), e.forms.begin(), e.forms.end());
  return Ideal(2 * e.n, std::move(gens));
}

std::size_t dimension_of(const Ideal& ideal) {
  const auto dim = krull_dimension(ideal);
  // Every ideal built here vanishes at the origin.
  if (!dim) throw std::logic_error("unexpected unit ideal");
  return *dim;
}

}  // namespace

EulerSymbols euler_symbol_forms(const IntegerMatrix& a) {
  const std::size_t n = a.cols();
  EulerSymbols e{n, {}};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      terms.push_back({Monomial::variable(2 * n, layout::x_var(j)) *
                           Monomial::variable(2 * n, layout::xi_var(n, j)),
                       Rational(a(i, j))});
    }
    e.forms.push_back(Polynomial::from_terms(2 * n, std::move(terms)));
  }
  return e;
}

Polynomial lift_to_phase_space(const Polynomial& f, std::size_t n) {
  if (f.nvars() != n) throw std::invalid_argument("lift_to_phase_space: expected n variables");
  return remap_variables(f, 2 * n, xi_block(n));
}

Polynomial restrict_to_xi(const Polynomial& f, std::size_t n) {
  if (f.nvars() != 2 * n)
    throw std::invalid_argument("restrict_to_xi: expected 2n variables");
  std::vector<std::size_t> target(2 * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (f.involves(layout::x_var(j)))
      throw std::invalid_argument("restrict_to_xi: polynomial involves x variables");
    target[layout::xi_var(n, j)] = j;
  }
  return remap_variables(f, n, target);
}

Ideal parameter_theorem_ideal(const IntegerMatrix& a) {
  return phase_space_ideal(toric_ideal(a).toric_gb, euler_symbol_forms(a));
}

ParameterVerdict verify_parameter_theorem(const IntegerMatrix& a) {
  const ToricData toric = toric_ideal(a);
  const EulerSymbols forms = euler_symbol_forms(a);
  ParameterVerdict v;
  v.n = a.cols();
  v.rank = rank(a);
  v.forms = forms.forms.size();
  v.dim_before = dimension_of(phase_space_ideal(toric.toric_gb, EulerSymbols{v.n, {}}));
  v.dim_after = dimension_of(phase_space_ideal(toric.toric_gb, forms));
  v.drop = v.dim_before >= v.dim_after ? v.dim_before - v.dim_after : 0;
  if (v.rank == a.rows()) v.system_of_parameters = v.drop == v.forms;
  v.pass = v.dim_after == v.n && v.dim_before == v.n + v.rank && v.drop == v.rank &&
           v.system_of_parameters.value_or(true);
  return v;
}

Ideal initial_ideal_by_deformation(const ToricData& toric) {
  const RationalVector ones(toric.matrix.cols(), Rational(1));
  return initial_ideal(toric.ideal(), ones);
}

Ideal initial_ideal_by_homogenization(const IntegerMatrix& a) {
  const std::size_t n = a.cols();
  const ToricData hat = toric_ideal(homogenize(a).matrix);
  std::vector<Polynomial> gens = hat.toric_gb;
  gens.push_back(Polynomial::variable(n + 1, 0));
  std::vector<std::size_t> down(n + 1);
  for (std::size_t j = 0; j <= n; ++j) down[j] = j == 0 ? 0 : j - 1;

  const Ideal with_xi0(n + 1, std::move(gens));
  std::vector<Polynomial> contracted;
  for (const auto& g : with_xi0.groebner_basis()) {
    // ξ_0 is a basis element, so no other reduced element involves it.
    if (g.involves(0)) continue;
    contracted.push_back(remap_variables(g, n, down));
  }
  return Ideal(n, std::move(contracted));
}

CharacteristicModel characteristic_ideal(const IntegerMatrix& a) {
  validate_hypergeometric(a);
  const ToricData toric = toric_ideal(a);
  const EulerSymbols forms = euler_symbol_forms(a);

  CharacteristicModel m;
  m.matrix = a;
  m.graded = is_standard_graded(a);
  m.path = m.graded ? CharacteristicPath::direct : CharacteristicPath::homogenized;

  const Ideal by_hat = initial_ideal_by_homogenization(a);
  if (m.graded) {
    // in(I_A) = I_A; cross-check against the Â route on the full ideal.
    m.initial_ideal = toric.ideal();
    m.ideal = phase_space_ideal(toric.toric_gb, forms);
    const Ideal via_hat = phase_space_ideal(by_hat.groebner_basis(), forms);
    m.routes_agree = m.ideal.groebner_basis() == via_hat.groebner_basis() &&
                     initial_ideal_by_deformation(toric) == m.initial_ideal;
  } else {
    m.initial_ideal = initial_ideal_by_deformation(toric);
    m.routes_agree = m.initial_ideal == by_hat;
    m.ideal = phase_space_ideal(m.initial_ideal.groebner_basis(), forms);
  }
  m.dimension = dimension_of(m.ideal);
  return m;
}

HolonomicityVerdict verify_holonomicity(const CharacteristicModel& model) {
  HolonomicityVerdict v;
  v.n = model.matrix.cols();
  v.dimension = model.dimension;
  v.path = model.path;
  v.routes_agree = model.routes_agree;
  v.holonomic = v.dimension <= v.n;
  return v;
}

HolonomicityVerdict verify_holonomicity(const IntegerMatrix& a) {
  return verify_holonomicity(characteristic_ideal(a));
}

HomogenizationVerdict homogenization_reduction(const IntegerMatrix& a) {
  validate_hypergeometric(a);
  HomogenizationVerdict v;
  const HomogenizedMatrix hat = homogenize(a);
  v.hat = hat.matrix;
  if (is_standard_graded(a)) {
    v.trivially_consistent = true;
    v.consistent = true;
    v.extended_consistent = true;
    return v;
  }
  const std::size_t n = a.cols();
  const Ideal left = initial_ideal_by_deformation(toric_ideal(a));
  const Ideal right = initial_ideal_by_homogenization(a);
  v.left = left.groebner_basis();
  v.right = right.groebner_basis();
  v.consistent = v.left == v.right;

  // Left: k[x_0, x, ξ] with x_0 at index 0, x at 1..n, ξ at n+1..2n.
  {
    std::vector<std::size_t> shift(2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) shift[j] = j + 1;
    const Ideal phase = phase_space_ideal(v.left, euler_symbol_forms(a));
    std::vector<Polynomial> gens;
    for (const auto& g : phase.generators())
      gens.push_back(remap_variables(g, 2 * n + 1, shift));
    v.extended_left_dim = krull_dimension(Ideal(2 * n + 1, std::move(gens)));
  }
  // Right: k[x̂, ξ̂] in the phase-space layout of Â (ξ_0 at index n + 1).
  {
    const std::size_t m = n + 1;
    const ToricData toric_hat = toric_ideal(hat.matrix);
    std::vector<Polynomial> gens;
    for (const auto& g : toric_hat.toric_gb) gens.push_back(lift_to_phase_space(g, m));
    gens.push_back(Polynomial::variable(2 * m, layout::xi_var(m, 0)));
    for (const auto& f : euler_symbol_forms(hat.matrix).forms) gens.push_back(f);
    v.extended_right_dim = krull_dimension(Ideal(2 * m, std::move(gens)));
  }
  v.extended_consistent = v.extended_left_dim && v.extended_right_dim &&
                          *v.extended_left_dim == *v.extended_right_dim;
  return v;
}

std::optional<std::size_t> fiber_degree(const CharacteristicModel& model,
                                        const RationalVector& p) {
  const std::size_t n = model.matrix.cols();
  if (p.size() != n) throw std::invalid_argument("fiber_degree: point must have length n");
  for (const auto& c : p)
    if (c == 0)
      throw std::invalid_argument("fiber_degree: sample point has a zero coordinate");
  std::map<std::size_t, Rational> assignment;
  for (std::size_t j = 0; j < n; ++j) assignment.emplace(layout::x_var(j), p[j]);
  std::vector<Polynomial> gens;
  for (const auto& g : model.ideal.generators())
    gens.push_back(restrict_to_xi(evaluate_partial(g, assignment), n));
  return quotient_dimension(Ideal(n, std::move(gens)));
}

std::optional<std::size_t> fiber_degree(const IntegerMatrix& a, const RationalVector& p) {
  return fiber_degree(characteristic_ideal(a), p);
}

RationalVector random_generic_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> part(1, 1000);
  std::uniform_int_distribution<int> sign(0, 1);
  RationalVector p;
  for (std::size_t j = 0; j < n; ++j) {
    const long num = part(rng);
    const long den = part(rng);
    Rational r(sign(rng) ? -num : num, den);
    r.canonicalize();
    p.push_back(std::move(r));
  }
  return p;
}

FamilyVerdict family_check(const CharacteristicModel& model, std::size_t samples,
                           std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("family_check: need at least one sample");
  const std::size_t n = model.matrix.cols();
  FamilyVerdict v;
  v.requested = samples;

  const EulerSymbols forms = euler_symbol_forms(model.matrix);
  const auto& inits = model.initial_ideal.groebner_basis();
  v.parameter_free = model.ideal.nvars() == 2 * n;
  for (const auto& g : model.ideal.generators()) {
    if (!v.parameter_free) break;
    const bool is_form = std::find(forms.forms.begin(), forms.forms.end(), g) != forms.forms.end();
    bool is_initial = false;
    try {
      const Polynomial r = restrict_to_xi(g, n);
      is_initial = std::find(inits.begin(), inits.end(), r) != inits.end();
    } catch (const std::invalid_argument&) {
    }
    v.parameter_free = is_form || is_initial;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degrees;
  bool exhausted = false;
  for (std::size_t s = 0; s < samples && !exhausted; ++s) {
    for (std::size_t attempt = 0;; ++attempt) {
      FiberSample sample{random_generic_point(n, rng), std::nullopt};
      sample.degree = fiber_degree(model, sample.point);
      v.attempts.push_back(sample);
      if (sample.degree) {
        degrees.push_back(*sample.degree);
        break;
      }
      if (attempt == kMaxResamples) {
        exhausted = true;
        break;
      }
      ++v.resamples;
    }
  }
  const bool agree = !exhausted && !degrees.empty() &&
                     std::all_of(degrees.begin(), degrees.end(),
                                 [&](std::size_t d) { return d == degrees.front(); });
  if (agree) v.common_degree = degrees.front();
  v.pass = v.parameter_free && agree;
  return v;
}

FamilyVerdict family_check(const IntegerMatrix& a, std::size_t samples, std::uint64_t seed) {
  return family_check(characteristic_ideal(a), samples, seed);
}

std::vector<FaceAudit> face_dimension_audit(const IntegerMatrix& a) {
  std::vector<FaceAudit> out;
  for (auto& face : enumerate_faces(a)) {
    FaceAudit audit;
    audit.size = face.columns.size();
    if (face.columns.empty()) {
      audit.dimension = 0;
      audit.pass = true;
    } else {
      const IntegerMatrix a_tau = column_submatrix(a, face.columns);
      audit.dimension = krull_dimension(parameter_theorem_ideal(a_tau));
      audit.pass = audit.dimension == audit.size;
    }
    audit.face = std::move(face);
    out.push_back(std::move(audit));
  }
  return out;
}

TransversalitySummary transversality_sampling(const IntegerMatrix& a, std::size_t samples,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TransversalitySummary summary;
  summary.pass = true;
  const RationalMatrix l = to_rational(a);
  for (const auto& face : enumerate_faces(a)) {
    FaceTransversality ft{face, 0, 0, false};
    if (!face.columns.empty()) {
      for (std::size_t s = 0; s < samples; ++s) {
        const TransversalityInstance instance = sample_face_instance(a, face, rng);
        ++ft.instances;
        if (certify_transversality(instance).passed) ++ft.passed;
      }
    }
    // A point with a vanishing ξ-coordinate must be refused.
    RationalVector q(a.cols(), Rational(1));
    if (face.columns.size() < a.cols()) {
      const auto indicator = one_tau(face, a.cols());
      for (std::size_t j = 0; j < a.cols(); ++j) q[j] = indicator[j];
    } else {
      q[0] = 0;
    }
    try {
      certify_transversality(TransversalityInstance(l, RationalVector(a.cols()), q, face));
    } catch (const OrbitBoundaryPoint&) {
      ft.boundary_refused = true;
    }
    summary.instances += ft.instances;
    summary.passed += ft.passed;
    summary.pass = summary.pass && ft.passed == ft.instances && ft.boundary_refused;
    summary.faces.push_back(std::move(ft));
  }
  return summary;
}

bool VerificationReport::all_pass() const {
  const bool faces_ok = std::all_of(faces.begin(), faces.end(),
                                    [](const FaceAudit& f) { return f.pass; });
  return homogeneity.pass && toric_dimension == rank(matrix) && parameter.pass &&
         holonomicity.holonomic && holonomicity.routes_agree && homogenization.consistent &&
         homogenization.extended_consistent && family.pass && faces_ok && transversality.pass;
}

VerificationReport verify(const IntegerMatrix& a, const VerificationOptions& options) {
  validate_hypergeometric(a);
  using clock = std::chrono::steady_clock;
  VerificationReport r;
  r.matrix = a;
  auto timed = [&](const std::string& stage, auto&& body) {
    const auto start = clock::now();
    body();
    r.timings_ms[stage] =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };
  timed("toric", [&] {
    r.toric = toric_ideal(a);
    r.homogeneity = a_homogeneity_audit(r.toric);
    r.toric_dimension = krull_dimension(r.toric.ideal());
  });
  timed("parameter", [&] { r.parameter = verify_parameter_theorem(a); });
  timed("holonomicity", [&] {
    r.characteristic = characteristic_ideal(a);
    r.holonomicity = verify_holonomicity(r.characteristic);
  });
  timed("homogenization", [&] { r.homogenization = homogenization_reduction(a); });
  timed("family", [&] { r.family = family_check(r.characteristic, options.samples, options.seed); });
  timed("faces", [&] { r.faces = face_dimension_audit(a); });
  timed("transversality",
        [&] { r.transversality = transversality_sampling(a, options.samples, options.seed); });
  return r;
}

}  // namespace gkz
