#include "gkz/toric.hpp"

#include "gkz/errors.hpp"

namespace gkz {

void require_nonzero_columns(const IntegerMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < a.rows() && zero; ++i) zero = a(i, j) == 0;
    if (zero)
      throw InvalidMatrix("nonzero columns",
                          "column " + std::to_string(j + 1) +
                              " of A is zero; every column a_i must be nonzero");
  }
}

void require_full_row_rank(const IntegerMatrix& a) {
  const std::size_t r = rank(a);
  if (r != a.rows())
    throw InvalidMatrix("full row rank", "A has rank " + std::to_string(r) +
                                             " but " + std::to_string(a.rows()) +
                                             " rows; A must have full rank d");
}

Polynomial lattice_binomial(const IntegerVector& v) {
  std::vector<Exponent> plus(v.size(), 0), minus(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0)
      plus[i] = static_cast<Exponent>(v[i].get_ui());
    else if (v[i] < 0)
      minus[i] = static_cast<Exponent>(Integer(-v[i]).get_ui());
  }
  return Polynomial::monomial(Monomial(std::move(plus))) -
         Polynomial::monomial(Monomial(std::move(minus)));
}

ToricData toric_ideal(const IntegerMatrix& a) {
  require_nonzero_columns(a);
  const std::size_t n = a.cols();
  ToricData data{a, kernel_lattice_basis(a), {}};
  if (data.kernel_basis.empty()) return data;

  std::vector<Polynomial> binomials;
  for (const auto& v : data.kernel_basis) binomials.push_back(lattice_binomial(v));
  const Monomial all(std::vector<Exponent>(n, 1));
  data.toric_gb = saturate(Ideal(n, std::move(binomials)), all).groebner_basis();
  return data;
}

bool is_standard_graded(const IntegerMatrix& a) { return rowspan_contains_ones(a); }

HomogenizedMatrix homogenize(const IntegerMatrix& a) {
  IntegerMatrix hat(a.rows() + 1, a.cols() + 1);
  for (std::size_t j = 0; j <= a.cols(); ++j) hat(0, j) = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) hat(i + 1, j + 1) = a(i, j);
  return {std::move(hat), a};
}

HomogeneityAudit a_homogeneity_audit(const ToricData& toric) {
  const IntegerMatrix& a = toric.matrix;
  const auto names = layout::xi_names(a.cols());
  for (const auto& g : toric.toric_gb) {
    const bool binomial = g.size() == 2 && g.terms()[0].coefficient == -g.terms()[1].coefficient;
    if (!binomial)
      return {false, g, "not a pure binomial: " + to_string(g, names)};
    IntegerVector u, v;
    for (auto e : g.terms()[0].monomial.exponents()) u.emplace_back(e);
    for (auto e : g.terms()[1].monomial.exponents()) v.emplace_back(e);
    if (multiply(a, u) != multiply(a, v))
      return {false, g, "A-degrees differ for " + to_string(g, names)};
  }
  return {true, std::nullopt,
          std::to_string(toric.toric_gb.size()) + " binomials are A-homogeneous"};
}

}  // namespace gkz
