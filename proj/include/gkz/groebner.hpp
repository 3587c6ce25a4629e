#pragma once

// Buchberger engine: normal forms, reduced Gröbner bases, elimination,
// saturation, initial ideals and dimensions of quotient rings.

#include "gkz/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace gkz {

// Normal form of f modulo basis: no term of the result is divisible by a
// leading monomial of basis (leading monomials taken under `order`).
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  const MonomialOrder& order);

// Reduced Gröbner basis (monic, sorted by ascending leading monomial).
// The zero ideal yields an empty basis, the unit ideal yields {1}.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order);

class Ideal {
 public:
  explicit Ideal(std::size_t nvars, std::vector<Polynomial> generators = {});

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  // Computed once per order and cached; safe to call from several threads.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;

  std::vector<Monomial> leading_monomials(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  // Ideal equality (reduced grevlex bases coincide).
  bool operator==(const Ideal& other) const;

  Ideal operator+(const Ideal& other) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

// I ∩ k[x_front_block, ..., x_{n-1}], still presented in the ambient ring.
Ideal eliminate(const Ideal& ideal, std::size_t front_block);

// I : m^∞, via a fresh variable t, the relation t·m − 1 and eliminating t.
Ideal saturate(const Ideal& ideal, const Monomial& m);

// in_w(I) for nonnegative weights w: weight-leading forms of a Gröbner
// basis under the w-order refined by grevlex.
Ideal initial_ideal(const Ideal& ideal, std::span<const Rational> weights);

// Largest set of variables containing the support of no given monomial.
std::size_t max_independent_set(std::span<const Monomial> monomials, std::size_t nvars);

// Krull dimension of k[vars]/I; nullopt for the unit ideal (empty variety).
std::optional<std::size_t> krull_dimension(
    const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

// dim_k k[vars]/I as a vector space; nullopt when it is infinite.
std::optional<std::size_t> quotient_dimension(
    const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace gkz
