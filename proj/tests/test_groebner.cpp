#include "gkz/groebner.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>

using namespace gkz;

namespace {

Polynomial P(const std::string& text, std::size_t n) {
  return parse_polynomial(text, layout::xi_names(n));
}

Ideal I(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(s, n));
  return Ideal(n, std::move(g));
}

std::vector<Exponent> random_exponents(std::mt19937_64& rng, std::size_t n, unsigned max) {
  std::vector<Exponent> e(n);
  for (auto& x : e) x = static_cast<Exponent>(rng() % (max + 1));
  return e;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, std::size_t terms,
                             unsigned max_exp = 2) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k)
    ts.push_back({Monomial(random_exponents(rng, n, max_exp)),
                  Rational(static_cast<long>(rng() % 7) - 3)});
  return Polynomial::from_terms(n, ts);
}

// Homogeneous polynomial of the given degree with a few random terms.
Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t n, std::size_t degree,
                              std::size_t terms) {
  const auto monos = oracle::monomials_of_degree(n, degree);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k)
    ts.push_back({Monomial(monos[rng() % monos.size()]),
                  Rational(static_cast<long>(rng() % 9) - 4)});
  return Polynomial::from_terms(n, ts);
}

}  // namespace

TEST(Reduce, Examples) {
  const auto grevlex = MonomialOrder::grevlex();
  const std::vector<Polynomial> basis{P("u1*u3 - u2^2", 3)};
  // u2^2 is the grevlex leading monomial, so it rewrites to u1*u3.
  EXPECT_EQ(reduce(P("u2^2", 3), basis, grevlex), P("u1*u3", 3));
  EXPECT_TRUE(reduce(P("u1*u2*u3 - u2^3", 3), basis, grevlex).is_zero());
  EXPECT_EQ(reduce(P("u1", 3), basis, grevlex), P("u1", 3));
}

TEST(Buchberger, TwistedCubic) {
  const Ideal twisted = I(4, {"u1*u3 - u2^2", "u2*u4 - u3^2", "u1*u4 - u2*u3"});
  const auto& gb = twisted.groebner_basis();
  EXPECT_EQ(gb.size(), 3u);
  for (const auto& g : gb) {
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.leading_coefficient(), 1);
  }
  EXPECT_TRUE(twisted.contains(P("u1*u4^2 - u3^3", 4)));
}

TEST(Buchberger, UnitAndZero) {
  const Ideal unit = I(1, {"u1 - 1", "u1"});
  ASSERT_EQ(unit.groebner_basis().size(), 1u);
  EXPECT_EQ(unit.groebner_basis()[0], Polynomial::constant(1, 1));
  EXPECT_TRUE(unit.is_unit());
  EXPECT_TRUE(Ideal(3).groebner_basis().empty());
  EXPECT_TRUE(Ideal(3).is_zero());
}

TEST(Buchberger, RandomCombinationsReduceToZero) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(rng, n, 3));
    const Ideal ideal(n, gens);
    const auto& gb = ideal.groebner_basis();
    for (int k = 0; k < 5; ++k) {
      Polynomial f(n);
      for (const auto& g : gens) f += random_polynomial(rng, n, 2, 1) * g;
      EXPECT_TRUE(reduce(f, gb, MonomialOrder::grevlex()).is_zero());
    }
    // Leading monomials of a reduced basis are pairwise non-dividing.
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = 0; j < gb.size(); ++j)
        if (i != j) {
          EXPECT_FALSE(gb[i].leading_monomial().divides(gb[j].leading_monomial()));
        }
  }
}

TEST(Buchberger, IndependentOfGeneratorOrder) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(rng, n, 3));
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      const auto base = buchberger(gens, order);
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(buchberger(shuffled, order), base);
    }
  }
}

TEST(Eliminate, Examples) {
  // variable 0 plays t
  const Ideal a = I(3, {"u1*u2*u3 - 1", "u2 - u3"});
  EXPECT_EQ(eliminate(a, 1), I(3, {"u2 - u3"}));
  EXPECT_TRUE(eliminate(I(3, {"u1"}), 1).is_zero());
  EXPECT_TRUE(eliminate(I(3, {"1"}), 1).is_unit());
}

TEST(Saturate, Examples) {
  const Monomial xi1 = Monomial::variable(2, 0);
  const Monomial xi1xi2 = Monomial::variable(2, 0) * Monomial::variable(2, 1);
  EXPECT_EQ(saturate(I(2, {"u1*u2"}), xi1), I(2, {"u2"}));
  EXPECT_EQ(saturate(I(2, {"u1^2 - u1*u2"}), xi1xi2), I(2, {"u1 - u2"}));
  const Ideal twisted = I(4, {"u1*u3 - u2^2", "u2*u4 - u3^2", "u1*u4 - u2*u3"});
  EXPECT_EQ(saturate(twisted, Monomial(4)), twisted);
}

TEST(Saturate, Idempotent) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(random_polynomial(rng, n, 2));
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m = m * Monomial::variable(n, i);
    const Ideal once = saturate(Ideal(n, gens), m);
    EXPECT_EQ(saturate(once, m), once);
    EXPECT_TRUE(once.contains(Ideal(n, gens)));
  }
}

TEST(InitialIdeal, Examples) {
  const std::vector<Rational> ones{Rational(1), Rational(1)};
  EXPECT_EQ(initial_ideal(I(2, {"u1^2 - u2"}), ones), I(2, {"u1^2"}));
  const std::vector<Rational> ones3(3, Rational(1));
  const Ideal conic = I(3, {"u1*u3 - u2^2"});
  EXPECT_EQ(initial_ideal(conic, ones3), conic);
}

TEST(KrullDimension, Examples) {
  EXPECT_EQ(krull_dimension(Ideal(3)), 3u);
  EXPECT_EQ(krull_dimension(I(3, {"u1*u3 - u2^2"})), 2u);
  EXPECT_EQ(krull_dimension(I(4, {"u1*u3 - u2^2", "u2*u4 - u3^2", "u1*u4 - u2*u3"})), 2u);
  EXPECT_EQ(krull_dimension(I(2, {"u1", "u2"})), 0u);
  EXPECT_FALSE(krull_dimension(I(2, {"1"})).has_value());
  EXPECT_EQ(krull_dimension(I(2, {"u1*u2"})), 1u);
}

TEST(KrullDimension, LexAgreesWithGrevlex) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < 1 + rng() % 2; ++k) gens.push_back(random_polynomial(rng, n, 3));
    const Ideal ideal(n, gens);
    EXPECT_EQ(krull_dimension(ideal, MonomialOrder::lex()),
              krull_dimension(ideal, MonomialOrder::grevlex()));
  }
}

TEST(KrullDimension, MatchesHilbertFunctionOracle) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Polynomial> gens;
    const std::size_t count = 1 + rng() % n;
    for (std::size_t k = 0; k < count; ++k)
      gens.push_back(random_homogeneous(rng, n, 1 + rng() % 2, 1 + rng() % 3));
    const Ideal ideal(n, gens);
    const auto dim = krull_dimension(ideal);
    if (!dim) continue;  // homogeneous ideals are never the unit ideal unless 1 ∈ gens
    EXPECT_EQ(*dim, oracle::krull_by_hilbert(gens, n)) << trial;
  }
}

TEST(MaxIndependentSet, Examples) {
  const std::vector<Monomial> monos{Monomial({1, 1, 0}), Monomial({0, 0, 2})};
  EXPECT_EQ(max_independent_set(monos, 3), 1u);
  EXPECT_EQ(max_independent_set(std::vector<Monomial>{}, 4), 4u);
}

TEST(QuotientDimension, Examples) {
  EXPECT_EQ(quotient_dimension(I(2, {"u1^2", "u2"})), 2u);
  EXPECT_FALSE(quotient_dimension(I(2, {"u1*u2"})).has_value());
  EXPECT_EQ(quotient_dimension(I(2, {"1"})), 0u);
  EXPECT_EQ(quotient_dimension(I(2, {"u1^2 - 1", "u2^3 - u1"})), 6u);
}

TEST(QuotientDimension, MatchesHilbertOracleOnZeroDimensional) {
  std::mt19937_64 rng(53);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < n + 1; ++k)
      gens.push_back(random_homogeneous(rng, n, 1 + rng() % 3, 1 + rng() % 3));
    const Ideal ideal(n, gens);
    const auto dim = quotient_dimension(ideal);
    // Generated in degree ≤ 3 in ≤ 3 variables: a finite quotient has a
    // vanishing Hilbert function by degree n·2 + 1 ≤ 7.
    const auto expected = oracle::quotient_dimension_by_hilbert(gens, n, 10);
    EXPECT_EQ(dim, expected) << trial;
    checked += dim.has_value();
  }
  EXPECT_GT(checked, 10);
}

TEST(Ideal, MembershipAndSums) {
  const Ideal a = I(2, {"u1"});
  const Ideal b = I(2, {"u2"});
  EXPECT_TRUE((a + b).contains(P("u1 + u2", 2)));
  EXPECT_FALSE(a.contains(P("u2", 2)));
  EXPECT_TRUE((a + b).contains(a));
  EXPECT_FALSE(a == b);
}

TEST(Ideal, ConcurrentBasisRequestsAgree) {
  const Ideal twisted = I(4, {"u1*u3 - u2^2", "u2*u4 - u3^2", "u1*u4 - u2*u3"});
  std::vector<std::vector<Polynomial>> results(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] {
      results[t] = twisted.groebner_basis(t % 2 ? MonomialOrder::lex() : MonomialOrder::grevlex());
    });
  for (auto& t : threads) t.join();
  for (std::size_t t = 2; t < results.size(); ++t) EXPECT_EQ(results[t], results[t % 2]);
}
