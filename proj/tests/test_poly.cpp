#include "gkz/errors.hpp"
#include "gkz/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gkz;

namespace {

const std::vector<std::string> kXi3 = layout::xi_names(3);

Polynomial P(const std::string& text, const std::vector<std::string>& names = kXi3,
             MonomialOrder order = MonomialOrder::grevlex()) {
  return parse_polynomial(text, names, order);
}

Monomial M(std::vector<Exponent> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp) {
  std::vector<Exponent> e(nvars);
  for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exp + 1));
  return Monomial(e);
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, std::size_t terms) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    Rational c(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    c.canonicalize();
    ts.push_back({random_monomial(rng, nvars, 3), c});
  }
  return Polynomial::from_terms(nvars, ts);
}

std::vector<MonomialOrder> orders_for(std::size_t nvars) {
  std::vector<Rational> w(nvars);
  for (std::size_t i = 0; i < nvars; ++i) w[i] = Rational(static_cast<long>(i % 3));
  return {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1),
          MonomialOrder::weighted(w, MonomialOrder::Kind::grevlex),
          MonomialOrder::weighted(w, MonomialOrder::Kind::lex)};
}

}  // namespace

TEST(MonomialOrder, Examples) {
  const auto grevlex = MonomialOrder::grevlex();
  EXPECT_TRUE(grevlex.greater(M({0, 2, 0}), M({1, 0, 1})));
  EXPECT_EQ(grevlex.compare(M({1, 2, 3}), M({1, 2, 3})), std::strong_ordering::equal);

  const auto lex = MonomialOrder::lex();
  EXPECT_TRUE(lex.greater(M({1, 0}), M({0, 10})));
  EXPECT_EQ(lex.compare(M({2, 1}), M({2, 1})), std::strong_ordering::equal);

  EXPECT_THROW(grevlex.compare(M({1, 0}), M({1, 0, 0})), std::invalid_argument);
}

TEST(MonomialOrder, EliminationPutsFrontBlockFirst) {
  const auto elim = MonomialOrder::elimination(1);
  // Any monomial involving the front variable beats any monomial without it.
  EXPECT_TRUE(elim.greater(M({1, 0, 0}), M({0, 5, 5})));
  EXPECT_TRUE(elim.greater(M({0, 2, 0}), M({0, 1, 1})));
}

TEST(MonomialOrder, WeightedComparesWeightFirst) {
  const std::vector<Rational> w{Rational(0), Rational(1)};
  const auto order = MonomialOrder::weighted(w);
  EXPECT_TRUE(order.greater(M({0, 1}), M({5, 0})));
  EXPECT_THROW(MonomialOrder::weighted(std::vector<Rational>{Rational(-1)}), std::invalid_argument);
}

TEST(MonomialOrder, TotalMultiplicativeGlobal) {
  std::mt19937_64 rng(1);
  for (const std::size_t nvars : {1u, 3u, 5u}) {
    for (const auto& order : orders_for(nvars)) {
      for (int trial = 0; trial < 300; ++trial) {
        const Monomial u = random_monomial(rng, nvars, 4);
        const Monomial v = random_monomial(rng, nvars, 4);
        const Monomial w = random_monomial(rng, nvars, 4);
        const auto uv = order.compare(u, v);
        // antisymmetry
        EXPECT_EQ(order.compare(v, u), 0 <=> uv) << order.name();
        EXPECT_EQ(uv == 0, u == v) << order.name();
        // multiplicativity
        EXPECT_EQ(order.compare(u * w, v * w), uv) << order.name();
        // global: 1 is minimal
        EXPECT_NE(order.compare(Monomial(nvars), u), std::strong_ordering::greater);
        // transitivity
        if (order.greater(u, v) && order.greater(v, w)) {
          EXPECT_TRUE(order.greater(u, w));
        }
      }
    }
  }
}

TEST(Polynomial, RingAxioms) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(rng, 3, 4);
    const Polynomial g = random_polynomial(rng, 3, 4);
    const Polynomial h = random_polynomial(rng, 3, 3);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * Polynomial::constant(3, 1), f);
    EXPECT_TRUE((f * Polynomial(3)).is_zero());
  }
}

TEST(Polynomial, CanonicalStorage) {
  const Polynomial f = Polynomial::from_terms(
      2, {{M({1, 0}), Rational(1)}, {M({1, 0}), Rational(-1)}, {M({0, 1}), Rational(2)}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.leading_coefficient(), 2);
  // Sorted descending under the order.
  const Polynomial g = P("u1*u3 + u2^2 + u1");
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    EXPECT_TRUE(g.order().greater(g.terms()[k].monomial, g.terms()[k + 1].monomial));
  EXPECT_EQ(g.leading_monomial(), M({0, 2, 0}));
}

TEST(Polynomial, EqualityIgnoresSortOrder) {
  const Polynomial f = P("u1*u3 - u2^2");
  EXPECT_EQ(f, f.sorted(MonomialOrder::lex()));
  EXPECT_EQ(f.sorted(MonomialOrder::lex()).leading_monomial(), M({1, 0, 1}));
}

TEST(Polynomial, RenderAndParseRoundTrip) {
  const auto names = layout::phase_space_names(2);
  const Polynomial f = P("x1*u1 + 2*x2*u2", names);
  EXPECT_EQ(to_string(f, names), "x1*u1 + 2*x2*u2");
  EXPECT_EQ(to_string(P("-u1^2"), kXi3), "-u1^2");
  EXPECT_EQ(to_string(P("3/4"), kXi3), "3/4");
  EXPECT_EQ(to_string(Polynomial(3), kXi3), "0");

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial g = random_polynomial(rng, 3, 5);
    EXPECT_EQ(P(to_string(g, kXi3)), g) << to_string(g, kXi3);
  }
}

TEST(Polynomial, ParseErrorsCarryPosition) {
  try {
    P("u1 + * u2");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(P("u9"), ParseError);
}

TEST(WeightLeadingForm, Examples) {
  const auto xi2 = layout::xi_names(2);
  const std::vector<Rational> ones2{Rational(1), Rational(1)};
  EXPECT_EQ(weight_leading_form(P("u1^2 - u2", xi2), ones2), P("u1^2", xi2));

  const std::vector<Rational> ones3(3, Rational(1));
  EXPECT_EQ(weight_leading_form(P("u1*u3 - u2^2"), ones3), P("u1*u3 - u2^2"));
  EXPECT_EQ(weight_leading_form(P("u1^2 + u2*u3 + u1*u2"), ones3), P("u1^2 + u2*u3 + u1*u2"));
  EXPECT_TRUE(weight_leading_form(Polynomial(3), ones3).is_zero());
  EXPECT_THROW(weight_leading_form(P("u1"), ones2), std::invalid_argument);
}

TEST(WeightLeadingForm, MultiplicativeOnUniqueLeadingForms) {
  std::mt19937_64 rng(8);
  const std::vector<Rational> w{Rational(1), Rational(2), Rational(3)};
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    const Polynomial f = random_polynomial(rng, 3, 3);
    const Polynomial g = random_polynomial(rng, 3, 3);
    if (f.is_zero() || g.is_zero()) continue;
    const Polynomial lf = weight_leading_form(f, w);
    const Polynomial lg = weight_leading_form(g, w);
    if (lf.size() != 1 || lg.size() != 1) continue;
    EXPECT_EQ(weight_leading_form(f * g, w), lf * lg);
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(EvaluatePartial, Examples) {
  const auto names = layout::phase_space_names(2);
  const Polynomial f = P("x1*u1 + 2*x2*u2", names);
  const std::map<std::size_t, Rational> at{{0, Rational(1)}, {1, Rational(3)}};
  const Polynomial r = evaluate_partial(f, at);
  EXPECT_EQ(r, P("u1 + 6*u2", names));
  EXPECT_FALSE(r.involves(0));
  EXPECT_FALSE(r.involves(1));
  EXPECT_EQ(evaluate_partial(f, {}), f);
  const Polynomial g = P("u1*u3 - u2^2");
  EXPECT_EQ(evaluate_partial(g, {}), g);
}

TEST(RemapVariables, MovesIndices) {
  const Polynomial f = P("u1*u2^2 + u3");
  const std::vector<std::size_t> target{4, 0, 2};
  const Polynomial g = remap_variables(f, 5, target);
  EXPECT_EQ(g, Polynomial::from_terms(5, {{M({2, 0, 0, 0, 1}), Rational(1)},
                                          {M({0, 0, 1, 0, 0}), Rational(1)}}));
}

TEST(Layout, Names) {
  EXPECT_EQ(layout::phase_space_names(2), (std::vector<std::string>{"x1", "x2", "u1", "u2"}));
  EXPECT_EQ(layout::xi_names(2, 0), (std::vector<std::string>{"u0", "u1"}));
  EXPECT_EQ(layout::xi_var(3, 1), 4u);
}
