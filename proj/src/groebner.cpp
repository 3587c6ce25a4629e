#include "gkz/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

namespace gkz {

namespace {

std::vector<Polynomial> sorted_copies(std::span<const Polynomial> polys,
                                      const MonomialOrder& order) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.sorted(order));
  return out;
}

// Full reduction; every element of basis is nonzero and sorted under order.
Polynomial reduce_sorted(Polynomial p, const std::vector<Polynomial>& basis,
                         const MonomialOrder& order, std::size_t skip = SIZE_MAX) {
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Monomial& lm = p.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      if (basis[k].leading_monomial().divides(lm)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor) {
      const Rational c = p.leading_coefficient() / divisor->leading_coefficient();
      p.subtract_multiple(c, lm / divisor->leading_monomial(), *divisor);
    } else {
      remainder.push_back(p.pop_leading_term());
    }
  }
  return Polynomial::from_terms(p.nvars(), std::move(remainder), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = f.multiply_term(1 / f.leading_coefficient(), l / f.leading_monomial());
  s.subtract_multiple(1 / g.leading_coefficient(), l / g.leading_monomial(), g);
  return s;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t sugar;
};

// Minimal, interreduced, monic, sorted by ascending leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = g[a].leading_monomial();
      const Monomial& lb = g[b].leading_monomial();
      // Among equal leading monomials keep the first.
      if (lb.divides(la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a].monic());
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    Polynomial tail = minimal[a];
    Term lead = tail.pop_leading_term();
    Polynomial reduced = reduce_sorted(std::move(tail), minimal, order, a);
    reduced += Polynomial::from_terms(reduced.nvars(), {std::move(lead)}, order);
    minimal[a] = std::move(reduced);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.greater(y.leading_monomial(), x.leading_monomial());
  });
  return minimal;
}

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  const MonomialOrder& order) {
  std::vector<Polynomial> b;
  for (const auto& g : basis) {
    if (g.nvars() != f.nvars())
      throw std::invalid_argument("reduce: basis lives in a different ring");
    if (!g.is_zero()) b.push_back(g.sorted(order));
  }
  return reduce_sorted(f.sorted(order), b, order);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order) {
  if (generators.empty()) return {};
  const std::size_t nvars = generators.front().nvars();

  std::vector<Polynomial> g;
  std::vector<std::uint64_t> sugar;
  std::vector<bool> active;  // leading monomial not divisible by a later one
  std::vector<CriticalPair> pairs;

  auto unit = [&] { return std::vector<Polynomial>{Polynomial::constant(nvars, 1)}; };

  // Gebauer-Moeller update.
  auto add = [&](Polynomial p, std::uint64_t s) {
    const std::size_t k = g.size();
    const Monomial& lp = p.leading_monomial();

    std::vector<CriticalPair> fresh;
    std::vector<bool> coprime_with(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      const Monomial& li = g[i].leading_monomial();
      Monomial l = lcm(li, lp);
      const std::uint64_t si = sugar[i] + l.degree() - li.degree();
      const std::uint64_t sk = s + l.degree() - lp.degree();
      coprime_with[i] = coprime(li, lp);
      fresh.push_back({i, k, std::move(l), std::max(si, sk)});
    }

    // Drop a new pair whose lcm is a proper multiple of another new lcm.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b)
        if (a != b && fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
          keep[a] = false;
    // Among equal lcms keep one; drop the class entirely if any member is coprime.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool any_coprime = coprime_with[fresh[a].i];
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (!keep[b] || fresh[b].lcm != fresh[a].lcm) continue;
        any_coprime = any_coprime || coprime_with[fresh[b].i];
        keep[b] = false;
      }
      if (any_coprime) keep[a] = false;
    }

    // Old pairs made redundant by the new leading monomial.
    std::erase_if(pairs, [&](const CriticalPair& q) {
      if (!lp.divides(q.lcm)) return false;
      return lcm(g[q.i].leading_monomial(), lp) != q.lcm &&
             lcm(g[q.j].leading_monomial(), lp) != q.lcm;
    });

    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs.push_back(std::move(fresh[a]));
    for (std::size_t i = 0; i < k; ++i)
      if (active[i] && lp.divides(g[i].leading_monomial())) active[i] = false;

    g.push_back(std::move(p));
    sugar.push_back(s);
    active.push_back(true);
  };

  for (const auto& f : sorted_copies(generators, order)) {
    if (f.nvars() != nvars)
      throw std::invalid_argument("buchberger: generators live in different rings");
    Polynomial r = reduce_sorted(f, g, order);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit();
    const std::uint64_t s = std::max(r.total_degree(), f.total_degree());
    add(r.monic(), s);
  }

  while (!pairs.empty()) {
    // Sugar strategy, ties broken by the normal strategy.
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const CriticalPair& a, const CriticalPair& b) {
                                   if (a.sugar != b.sugar) return a.sugar < b.sugar;
                                   return order.greater(b.lcm, a.lcm);
                                 });
    CriticalPair pair = std::move(*best);
    *best = std::move(pairs.back());
    pairs.pop_back();

    Polynomial r = reduce_sorted(s_polynomial(g[pair.i], g[pair.j]), g, order);
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit();
    add(r.monic(), pair.sugar);
  }
  return reduce_basis(std::move(g), order);
}

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
  for (auto& f : generators) {
    if (f.nvars() != nvars)
      throw std::invalid_argument("Ideal: generator lives in a different ring");
    if (!f.is_zero()) generators_.push_back(std::move(f));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(buchberger(generators_, order));
  std::lock_guard lock(cache_->mutex);
  // First writer wins; reduced bases are canonical so a racing result is identical.
  auto [it, inserted] = cache_->bases.emplace(order, std::move(basis));
  return *it->second;
}

std::vector<Monomial> Ideal::leading_monomials(const MonomialOrder& order) const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis(order)) out.push_back(g.leading_monomial());
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  return reduce(f, groebner_basis(), MonomialOrder::grevlex()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& f) { return contains(f); });
}

bool Ideal::is_unit() const {
  const auto& g = groebner_basis();
  return g.size() == 1 && g.front().is_constant();
}

bool Ideal::is_zero() const { return generators_.empty(); }

bool Ideal::operator==(const Ideal& other) const {
  if (nvars_ != other.nvars_) return false;
  return groebner_basis() == other.groebner_basis();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("Ideal::operator+: different rings");
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(nvars_, std::move(gens));
}

// ------------------------------------------------------ derived operations

Ideal eliminate(const Ideal& ideal, std::size_t front_block) {
  if (front_block >= ideal.nvars())
    throw std::invalid_argument("eliminate: front block must leave some variables");
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::elimination(front_block))) {
    bool uses_front = false;
    for (std::size_t v = 0; v < front_block && !uses_front; ++v) uses_front = g.involves(v);
    if (!uses_front) kept.push_back(g.sorted(MonomialOrder::grevlex()));
  }
  return Ideal(ideal.nvars(), std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Monomial& m) {
  if (m.size() != ideal.nvars())
    throw std::invalid_argument("saturate: monomial lives in a different ring");
  if (m.is_one()) return ideal;
  const std::size_t n = ideal.nvars();

  std::vector<std::size_t> up(n), down(n + 1);
  for (std::size_t i = 0; i < n; ++i) up[i] = i + 1;
  down[0] = 0;  // t, absent after elimination
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = i;

  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(remap_variables(f, n + 1, up));
  const Monomial tm = Monomial::variable(n + 1, 0) *
                      remap_variables(Polynomial::monomial(m), n + 1, up).leading_monomial();
  gens.push_back(Polynomial::monomial(tm) - Polynomial::constant(n + 1, 1));

  const Ideal eliminated = eliminate(Ideal(n + 1, std::move(gens)), 1);
  std::vector<Polynomial> result;
  for (const auto& g : eliminated.generators()) result.push_back(remap_variables(g, n, down));
  return Ideal(n, std::move(result));
}

Ideal initial_ideal(const Ideal& ideal, std::span<const Rational> weights) {
  if (weights.size() != ideal.nvars())
    throw std::invalid_argument("initial_ideal: weight length mismatch");
  const MonomialOrder order = MonomialOrder::weighted(weights);
  std::vector<Polynomial> forms;
  for (const auto& g : ideal.groebner_basis(order))
    forms.push_back(weight_leading_form(g, weights).sorted(MonomialOrder::grevlex()));
  return Ideal(ideal.nvars(), std::move(forms));
}

std::size_t max_independent_set(std::span<const Monomial> monomials, std::size_t nvars) {
  if (nvars > 64) throw std::invalid_argument("max_independent_set: too many variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : monomials) {
    std::uint64_t mask = 0;
    for (auto v : m.support()) mask |= std::uint64_t{1} << v;
    supports.push_back(mask);
  }
  // A constant monomial kills every subset.
  if (std::find(supports.begin(), supports.end(), 0) != supports.end()) return 0;

  std::size_t best = 0;
  std::function<void(std::size_t, std::uint64_t, std::size_t)> search =
      [&](std::size_t var, std::uint64_t chosen, std::size_t count) {
        best = std::max(best, count);
        if (var == nvars || count + (nvars - var) <= best) return;
        const std::uint64_t with = chosen | (std::uint64_t{1} << var);
        const bool allowed = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint64_t s) { return (s & ~with) == 0; });
        if (allowed) search(var + 1, with, count + 1);
        search(var + 1, chosen, count);
      };
  search(0, 0, 0);
  return best;
}

std::optional<std::size_t> krull_dimension(const Ideal& ideal, const MonomialOrder& order) {
  const auto& g = ideal.groebner_basis(order);
  if (g.size() == 1 && g.front().is_constant()) return std::nullopt;
  const auto lms = ideal.leading_monomials(order);
  return max_independent_set(lms, ideal.nvars());
}

std::optional<std::size_t> quotient_dimension(const Ideal& ideal, const MonomialOrder& order) {
  const auto& g = ideal.groebner_basis(order);
  if (g.size() == 1 && g.front().is_constant()) return 0;
  const auto lms = ideal.leading_monomials(order);
  const std::size_t n = ideal.nvars();
  for (std::size_t v = 0; v < n; ++v) {
    const bool pure_power = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      auto s = m.support();
      return s.size() == 1 && s.front() == v;
    });
    if (!pure_power) return std::nullopt;
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Standard monomials form an order ideal; walk it from 1.
  std::set<std::vector<Exponent>> seen;
  std::vector<Monomial> frontier{Monomial(n)};
  seen.insert(frontier.front().exponents());
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m * Monomial::variable(n, v);
      if (!standard(next) || seen.contains(next.exponents())) continue;
      seen.insert(next.exponents());
      frontier.push_back(std::move(next));
    }
  }
  return seen.size();
}

}  // namespace gkz
