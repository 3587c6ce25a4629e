#include "gkz/poly.hpp"

#include "gkz/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gkz {

namespace layout {

std::vector<std::string> xi_names(std::size_t n, std::size_t first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(first + i));
  return names;
}

std::vector<std::string> phase_space_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
  return names;
}

}  // namespace layout

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw std::out_of_range("Monomial::variable: index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) s.push_back(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v,
                                 std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(const Monomial& u, const Monomial& v,
                                     std::size_t begin, std::size_t end) {
  std::uint64_t du = 0, dv = 0;
  if (begin == 0 && end == u.size()) {
    du = u.degree();
    dv = v.degree();
  } else {
    for (std::size_t i = begin; i < end; ++i) {
      du += u[i];
      dv += v[i];
    }
  }
  if (du != dv) return du <=> dv;
  // Smaller exponent in the last differing variable is the larger monomial.
  for (std::size_t i = end; i-- > begin;)
    if (u[i] != v[i]) return v[i] <=> u[i];
  return std::strong_ordering::equal;
}

const std::vector<std::int64_t>& empty_weights() {
  static const std::vector<std::int64_t> empty;
  return empty;
}

}  // namespace

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::elimination(std::size_t front_block) {
  MonomialOrder o;
  o.kind_ = Kind::elimination;
  o.front_block_ = front_block;
  return o;
}

MonomialOrder MonomialOrder::weighted(std::span<const Rational> weights, Kind tiebreak) {
  if (tiebreak != Kind::lex && tiebreak != Kind::grevlex)
    throw std::invalid_argument("MonomialOrder::weighted: tiebreak must be lex or grevlex");
  Integer den = 1;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("MonomialOrder::weighted: negative weight");
    den = lcm(den, w.get_den());
  }
  std::vector<std::int64_t> scaled;
  for (const auto& w : weights) {
    Integer s(w * den);
    if (!s.fits_slong_p())
      throw std::invalid_argument("MonomialOrder::weighted: weight too large");
    scaled.push_back(s.get_si());
  }
  // Positive rescaling does not change the order; keep the primitive form.
  std::int64_t g = 0;
  for (auto s : scaled) g = std::gcd(g, s);
  if (g > 1)
    for (auto& s : scaled) s /= g;
  MonomialOrder o;
  o.kind_ = Kind::weighted;
  o.tiebreak_ = tiebreak;
  o.weights_ = std::make_shared<const std::vector<std::int64_t>>(std::move(scaled));
  return o;
}

const std::vector<std::int64_t>& MonomialOrder::weights() const {
  return weights_ ? *weights_ : empty_weights();
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.size() != v.size())
    throw std::invalid_argument("monomial_compare: mismatched variable counts");
  const std::size_t n = u.size();
  switch (kind_) {
    case Kind::lex:
      return lex_compare(u, v, 0, n);
    case Kind::grevlex:
      return grevlex_compare(u, v, 0, n);
    case Kind::elimination: {
      const std::size_t k = std::min(front_block_, n);
      auto c = grevlex_compare(u, v, 0, k);
      if (c != std::strong_ordering::equal) return c;
      return grevlex_compare(u, v, k, n);
    }
    case Kind::weighted: {
      const auto& w = *weights_;
      if (w.size() != n)
        throw std::invalid_argument("monomial_compare: weight length mismatch");
      std::int64_t wu = 0, wv = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wu += w[i] * static_cast<std::int64_t>(u[i]);
        wv += w[i] * static_cast<std::int64_t>(v[i]);
      }
      if (wu != wv) return wu <=> wv;
      return tiebreak_ == Kind::lex ? lex_compare(u, v, 0, n) : grevlex_compare(u, v, 0, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::elimination:
      return "elim(" + std::to_string(front_block_) + ")";
    case Kind::weighted: {
      std::string s = "weight(";
      for (std::size_t i = 0; i < weights().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights()[i]);
      }
      return s + (tiebreak_ == Kind::lex ? ";lex)" : ";grevlex)");
    }
  }
  return "?";
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
  return kind_ == other.kind_ && tiebreak_ == other.tiebreak_ &&
         front_block_ == other.front_block_ && weights() == other.weights();
}

bool MonomialOrder::operator<(const MonomialOrder& other) const {
  return std::tie(kind_, tiebreak_, front_block_, weights()) <
         std::tie(other.kind_, other.tiebreak_, other.front_block_, other.weights());
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms,
                                  MonomialOrder order) {
  for (const auto& t : terms)
    if (t.monomial.size() != nvars)
      throw std::invalid_argument("Polynomial: monomial has wrong variable count");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  Polynomial p(nvars, std::move(order));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coefficient += t.coefficient;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coefficient == 0; });
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Polynomial Polynomial::sorted(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p = *this;
  p.order_ = order;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  const Rational inv = 1 / leading_coefficient();
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= inv;
  return p;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial[var] != 0; });
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("Polynomial: mismatched variable counts");
}

std::vector<Term> Polynomial::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                    const Rational& scale, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back({b[j].monomial, b[j].coefficient * scale});
      ++j;
    } else {
      Rational s = a[i].coefficient + b[j].coefficient * scale;
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].monomial, b[j].coefficient * scale});
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial p(nvars_, order_);
  p.terms_ = merge(terms_, other.sorted(order_).terms_, Rational(1), order_);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_compatible(other);
  Polynomial p(nvars_, order_);
  p.terms_ = merge(terms_, other.sorted(order_).terms_, Rational(-1), order_);
  return p;
}

Polynomial Polynomial::multiply_term(const Rational& c, const Monomial& m) const {
  Polynomial p(nvars_, order_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  Polynomial result(nvars_, order_);
  const Polynomial rhs = other.sorted(order_);
  for (const auto& t : terms_) {
    Polynomial part = rhs.multiply_term(t.coefficient, t.monomial);
    result.terms_ = merge(result.terms_, part.terms_, Rational(1), order_);
  }
  return result;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  return multiply_term(c, Monomial(nvars_));
}

void Polynomial::subtract_multiple(const Rational& c, const Monomial& m,
                                   const Polynomial& g) {
  std::vector<Term> scaled;
  scaled.reserve(g.terms_.size());
  for (const auto& t : g.terms_) scaled.push_back({t.monomial * m, t.coefficient});
  terms_ = merge(terms_, scaled, -c, order_);
}

Term Polynomial::pop_leading_term() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
  if (order_ == other.order_) return terms_ == other.terms_;
  return terms_ == other.sorted(order_).terms_;
}

// ------------------------------------------------------- free operations

Polynomial weight_leading_form(const Polynomial& f, std::span<const Rational> w) {
  if (w.size() != f.nvars())
    throw std::invalid_argument("weight_leading_form: weight length mismatch");
  if (f.is_zero()) return f;
  std::vector<Rational> weights;
  weights.reserve(f.size());
  Rational best;
  for (std::size_t k = 0; k < f.size(); ++k) {
    Rational s = 0;
    const auto& m = f.terms()[k].monomial;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (m[i]) s += w[i] * m[i];
    if (k == 0 || s > best) best = s;
    weights.push_back(std::move(s));
  }
  std::vector<Term> kept;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (weights[k] == best) kept.push_back(f.terms()[k]);
  return Polynomial::from_terms(f.nvars(), std::move(kept), f.order());
}

Polynomial evaluate_partial(const Polynomial& f,
                            const std::map<std::size_t, Rational>& assignment) {
  for (const auto& [var, value] : assignment)
    if (var >= f.nvars()) throw std::out_of_range("evaluate_partial: variable out of range");
  if (assignment.empty()) return f;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e = t.monomial.exponents();
    Rational c = t.coefficient;
    for (const auto& [var, value] : assignment) {
      if (e[var] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
      mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
      power.canonicalize();
      c *= power;
      e[var] = 0;
    }
    terms.push_back({Monomial(std::move(e)), std::move(c)});
  }
  return Polynomial::from_terms(f.nvars(), std::move(terms), f.order());
}

Polynomial remap_variables(const Polynomial& f, std::size_t new_nvars,
                           std::span<const std::size_t> target) {
  if (target.size() != f.nvars())
    throw std::invalid_argument("remap_variables: map length mismatch");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(new_nvars, 0);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (!t.monomial[i]) continue;
      if (target[i] >= new_nvars)
        throw std::out_of_range("remap_variables: target index out of range");
      e[target[i]] += t.monomial[i];
    }
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(new_nvars, std::move(terms), f.order());
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (names.size() != f.nvars())
    throw std::invalid_argument("to_string: wrong number of variable names");
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = abs(t.coefficient);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      s += magnitude.get_str();
    } else {
      if (magnitude != 1) s += magnitude.get_str() + '*';
      s += to_string(t.monomial, names);
    }
  }
  return s;
}

// ------------------------------------------------------------------ parser

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> names,
                   MonomialOrder order)
      : text_(text), names_(names), order_(std::move(order)) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      t.coefficient *= sign;
      terms.push_back(std::move(t));
      skip_space();
    }
    return Polynomial::from_terms(names_.size(), std::move(terms), order_);
  }

 private:
  Term parse_term() {
    Term t{Monomial(names_.size()), Rational(1)};
    for (;;) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coefficient *= parse_rational();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::size_t var = parse_variable();
        Exponent power = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          power = static_cast<Exponent>(parse_unsigned());
        }
        t.monomial = t.monomial * Monomial::variable(names_.size(), var, power);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    Integer num(parse_digits());
    Integer den = 1;
    if (!at_end() && peek() == '/') {
      ++pos_;
      den = Integer(parse_digits());
      if (den == 0) {
        pos_ = start;
        fail("zero denominator");
      }
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  unsigned long parse_unsigned() {
    const std::size_t start = pos_;
    Integer v(parse_digits());
    if (!v.fits_ulong_p() || v > std::numeric_limits<Exponent>::max()) {
      pos_ = start;
      fail("exponent too large");
    }
    return v.get_ui();
  }

  std::string parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    const std::string_view ident = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == ident) return i;
    pos_ = start;
    fail("unknown variable '" + std::string(ident) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("polynomial: " + message, line, column);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::span<const std::string> names_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names,
                            MonomialOrder order) {
  return PolynomialParser(text, names, std::move(order)).parse();
}

}  // namespace gkz
