#pragma once

// Sparse multivariate polynomials over Q.

#include "gkz/intlin.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Exponent = std::uint32_t;

// Variable layout shared by every module. In a phase-space ring with 2n
// variables, indices [0, n) are x_1..x_n and [n, 2n) are ξ_1..ξ_n.
namespace layout {
inline std::size_t x_var(std::size_t j) { return j; }
inline std::size_t xi_var(std::size_t n, std::size_t j) { return n + j; }

// "u<first>", "u<first+1>", ...; ξ renders as u.
std::vector<std::string> xi_names(std::size_t n, std::size_t first = 1);
// "x1".."xn", "u1".."un"
std::vector<std::string> phase_space_names(std::size_t n);
}  // namespace layout

class Monomial {
 public:
  Monomial() = default;
  // The unit monomial in nvars variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  // Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// A global multiplicative term order.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination, weighted };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  // grevlex on the first front_block variables, ties broken by grevlex on
  // the rest; eliminates the front block.
  static MonomialOrder elimination(std::size_t front_block);
  // Compares w·u first, ties broken by `tiebreak` (lex or grevlex).
  // Weights must be nonnegative so that the order stays global.
  static MonomialOrder weighted(std::span<const Rational> weights,
                                Kind tiebreak = Kind::grevlex);

  Kind kind() const noexcept { return kind_; }
  Kind tiebreak() const noexcept { return tiebreak_; }
  std::size_t front_block() const noexcept { return front_block_; }
  // Integer-scaled weights (positive rescaling of the requested ones).
  const std::vector<std::int64_t>& weights() const;

  // Throws std::invalid_argument when the variable counts differ.
  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }

  std::string name() const;

  bool operator==(const MonomialOrder& other) const;
  bool operator<(const MonomialOrder& other) const;

 private:
  Kind kind_ = Kind::grevlex;
  Kind tiebreak_ = Kind::grevlex;
  std::size_t front_block_ = 0;
  std::shared_ptr<const std::vector<std::int64_t>> weights_;
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  bool operator==(const Term& other) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  // The zero polynomial.
  explicit Polynomial(std::size_t nvars,
                      MonomialOrder order = MonomialOrder::grevlex())
      : nvars_(nvars), order_(std::move(order)) {}

  // Combines like terms, drops zero coefficients and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  // Sorted descending under order().
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  // Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  Polynomial sorted(const MonomialOrder& order) const;
  Polynomial monic() const;
  std::uint64_t total_degree() const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

  Polynomial multiply_term(const Rational& c, const Monomial& m) const;
  // *this -= c·m·g. g must be sorted under the same order.
  void subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& g);
  // Removes and returns the leading term. Precondition: nonzero.
  Term pop_leading_term();

  // Equality of the polynomials, independent of sort order.
  bool operator==(const Polynomial& other) const;

 private:
  void check_compatible(const Polynomial& other) const;
  static std::vector<Term> merge(const std::vector<Term>& a,
                                 const std::vector<Term>& b, const Rational& scale,
                                 const MonomialOrder& order);

  std::size_t nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;
};

// Sum of the terms of f maximizing w·exponent; w must have nvars entries.
Polynomial weight_leading_form(const Polynomial& f, std::span<const Rational> w);

// Substitutes the assigned variables; the result lives in the same ring with
// the assigned variables absent from every support.
Polynomial evaluate_partial(const Polynomial& f,
                            const std::map<std::size_t, Rational>& assignment);

// Moves variable i of f to index target[i] in a ring with new_nvars variables.
Polynomial remap_variables(const Polynomial& f, std::size_t new_nvars,
                           std::span<const std::size_t> target);

std::string to_string(const Polynomial& f, std::span<const std::string> names);
std::string to_string(const Monomial& m, std::span<const std::string> names);

// Parses the rendering grammar: signed sums of products of rational numbers
// and variables with optional ^exponent. Throws ParseError.
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> names,
                            MonomialOrder order = MonomialOrder::grevlex());

}  // namespace gkz
