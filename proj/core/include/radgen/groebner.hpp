#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <span>
#include <string>
#include <vector>

#include "radgen/polyring.hpp"

namespace radgen {

// Coefficient field used for Groebner computations. Inputs are always
// rational; in mod-p mode they are reduced before the run and results are
// reported as "verified mod p".
class FieldMode {
 public:
  static FieldMode rational() { return FieldMode(0); }
  static FieldMode mod(std::uint32_t p);
  // "rat" or "mod:<p>".
  static FieldMode parse(const std::string& text);

  bool is_rational() const { return prime_ == 0; }
  std::uint32_t prime() const { return prime_; }
  std::string describe() const;

  friend bool operator==(const FieldMode&, const FieldMode&) = default;

 private:
  explicit FieldMode(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_ = 0;
};

struct GbStats {
  std::uint64_t bases = 0;
  std::uint64_t self_checks = 0;
  std::uint64_t pair_reductions = 0;
  std::uint64_t pairs_pruned = 0;
};

struct GbOptions {
  MonomialOrder order = MonomialOrder::degrevlex;
  std::uint64_t max_steps = 1'000'000;  // S-pair reductions per basis
  FieldMode field = FieldMode::rational();
  // Answer membership in monomial ideals by divisibility instead of a basis run.
  bool monomial_fast_path = true;
  // After every run, re-check that all S-polynomials of the result reduce to zero.
  bool self_check = false;
  GbStats* stats = nullptr;
};

// Thrown when a self-check finds a basis that is not Groebner.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Ordered generator list of an ideal. Zero generators are dropped since they
// do not change the ideal; order is otherwise preserved.
class IdealGens {
 public:
  explicit IdealGens(Ring ring) : ring_(std::move(ring)) {}
  IdealGens(Ring ring, std::vector<Polynomial> gens);
  static IdealGens parse(const Ring& ring, const std::vector<std::string>& texts);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  bool all_monomial() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

template <FieldElement K>
struct GroebnerBasis {
  Ring ring;
  std::vector<BasicPolynomial<K>> basis;  // monic, sorted by leading monomial ascending
  bool reduced = true;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
};

// Multivariate division: returns r with f - r in (G) and no term of r
// divisible by a leading monomial of G. The first divisor in list order wins.
template <FieldElement K>
BasicPolynomial<K> normal_form(const BasicPolynomial<K>& f, std::span<const BasicPolynomial<K>> G);

template <FieldElement K>
BasicPolynomial<K> s_polynomial(const BasicPolynomial<K>& f, const BasicPolynomial<K>& g);

// Reduced Groebner basis of `gens` under the ring's order. Throws
// BudgetExceeded after `opts.max_steps` S-pair reductions.
template <FieldElement K>
GroebnerBasis<K> buchberger(std::vector<BasicPolynomial<K>> gens, const GbOptions& opts);

// True iff every S-polynomial of G reduces to zero modulo G.
template <FieldElement K>
bool is_groebner_basis(std::span<const BasicPolynomial<K>> G);

// Rational entry points. `opts.order` selects the term order; `opts.field`
// selects the coefficient field.
GroebnerBasis<Rational> buchberger(const IdealGens& gens, const GbOptions& opts = {});
GroebnerBasis<ModP> buchberger_mod_p(const IdealGens& gens, const GbOptions& opts = {});

bool ideal_member(const Polynomial& f, const IdealGens& gens, const GbOptions& opts = {});
// f lies in the radical of (gens): 1 is in (gens, 1 - w*f) with a fresh last variable w.
bool radical_member(const Polynomial& f, const IdealGens& gens, const GbOptions& opts = {});

struct InclusionFailure {
  enum class Direction { a_in_radical_b, b_in_radical_a };
  Direction direction;
  std::size_t index;  // 0-based generator index within the side being tested
  Polynomial generator;
};

struct RadicalReport {
  bool verdict = false;
  std::vector<InclusionFailure> failures;
  FieldMode field = FieldMode::rational();
};

RadicalReport radical_equal(const IdealGens& a, const IdealGens& b, const GbOptions& opts = {});

// ---------------------------------------------------------------------------

template <FieldElement K>
BasicPolynomial<K> normal_form(const BasicPolynomial<K>& f, std::span<const BasicPolynomial<K>> G) {
  for (const auto& g : G) require_same_ring(f.ring(), g.ring(), "normal_form");
  std::vector<Term<K>> rem;
  BasicPolynomial<K> p = f;
  while (!p.is_zero()) {
    const Term<K>& lt = p.leading_term();
    const BasicPolynomial<K>* divisor = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      const K c = -(lt.coeff / divisor->leading_coeff());
      p = p.add_scaled(c, quotient(lt.mono, divisor->leading_monomial()), *divisor);
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  return BasicPolynomial<K>::from_terms(f.ring(), std::move(rem));
}

template <FieldElement K>
BasicPolynomial<K> s_polynomial(const BasicPolynomial<K>& f, const BasicPolynomial<K>& g) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const BasicPolynomial<K> a = f.scaled(g.leading_coeff(), quotient(l, f.leading_monomial()));
  return a.add_scaled(-f.leading_coeff(), quotient(l, g.leading_monomial()), g);
}

template <FieldElement K>
bool is_groebner_basis(std::span<const BasicPolynomial<K>> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

namespace detail {

// Buchberger's algorithm with the Gebauer-Moeller pair update (which
// subsumes the coprime and chain criteria) and normal pair selection.
template <FieldElement K>
class BuchbergerRun {
 public:
  BuchbergerRun(Ring ring, const GbOptions& opts) : ring_(std::move(ring)), opts_(opts) {}

  GroebnerBasis<K> run(std::vector<BasicPolynomial<K>> gens) {
    std::erase_if(gens, [](const BasicPolynomial<K>& g) { return g.is_zero(); });
    const MonomialOrder order = ring_.order();
    std::sort(gens.begin(), gens.end(), [order](const auto& a, const auto& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    for (auto& g : gens) {
      BasicPolynomial<K> h = normal_form<K>(g, active_view());
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis(h);
      insert(h.monic());
    }
    std::uint64_t steps = 0;
    while (!pairs_.empty()) {
      const Pair p = pop_pair();
      if (++steps > opts_.max_steps) {
        throw BudgetExceeded("Groebner run exceeded " + std::to_string(opts_.max_steps) + " S-pair reductions");
      }
      if (opts_.stats) ++opts_.stats->pair_reductions;
      BasicPolynomial<K> h = normal_form<K>(s_polynomial(polys_[p.i], polys_[p.j]), active_view());
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis(h);
      insert(h.monic());
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  std::span<const BasicPolynomial<K>> active_view() {
    if (dirty_) {
      active_polys_.clear();
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (active_[k]) active_polys_.push_back(polys_[k]);
      }
      dirty_ = false;
    }
    return active_polys_;
  }

  Pair pop_pair() {
    const MonomialOrder order = ring_.order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const auto cmp = compare(a.lcm, b.lcm, order);
      if (cmp < 0 || (cmp == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }
    Pair out = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return out;
  }

  // Gebauer-Moeller update for a new basis element h.
  void insert(BasicPolynomial<K> h) {
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back({k, hi, lcm(polys_[k].leading_monomial(), lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = polys_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d) {
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t d = 0; d < kept.size() && keep; ++d) {
          if (kept[d].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::size_t pruned = candidates.size();
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (!polys_[p.i].leading_monomial().coprime(lh)) fresh.push_back(std::move(p));
    }
    pruned -= fresh.size();

    std::vector<Pair> old;
    old.reserve(pairs_.size() + fresh.size());
    for (auto& p : pairs_) {
      const bool chain_redundant = lh.divides(p.lcm) &&
                                   lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
                                   lcm(polys_[p.j].leading_monomial(), lh) != p.lcm;
      if (chain_redundant) {
        ++pruned;
      } else {
        old.push_back(std::move(p));
      }
    }
    for (auto& p : fresh) old.push_back(std::move(p));
    pairs_ = std::move(old);
    if (opts_.stats) opts_.stats->pairs_pruned += pruned;

    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
    polys_.push_back(std::move(h));
    active_.push_back(true);
    dirty_ = true;
  }

  GroebnerBasis<K> unit_basis(const BasicPolynomial<K>& c) {
    GroebnerBasis<K> out{ring_, {c.monic()}, true};
    record(out);
    return out;
  }

  GroebnerBasis<K> finish() {
    std::vector<BasicPolynomial<K>> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(polys_[k]);
    }
    // Leading monomials are already pairwise non-divisible; reduce tails.
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<BasicPolynomial<K>> others;
      for (std::size_t m = 0; m < basis.size(); ++m) {
        if (m != k) others.push_back(basis[m]);
      }
      basis[k] = normal_form<K>(basis[k], others).monic();
    }
    const MonomialOrder order = ring_.order();
    std::sort(basis.begin(), basis.end(), [order](const auto& a, const auto& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
    });
    GroebnerBasis<K> out{ring_, std::move(basis), true};
    record(out);
    return out;
  }

  void record(const GroebnerBasis<K>& gb) {
    if (opts_.stats) ++opts_.stats->bases;
    if (opts_.self_check) {
      if (!is_groebner_basis<K>(gb.basis)) throw InternalError("self-check failed: S-polynomial with nonzero remainder");
      if (opts_.stats) ++opts_.stats->self_checks;
    }
  }

  Ring ring_;
  const GbOptions& opts_;
  std::vector<BasicPolynomial<K>> polys_;
  std::vector<bool> active_;
  std::vector<BasicPolynomial<K>> active_polys_;
  std::vector<Pair> pairs_;
  bool dirty_ = true;
};

}  // namespace detail

template <FieldElement K>
GroebnerBasis<K> buchberger(std::vector<BasicPolynomial<K>> gens, const GbOptions& opts) {
  if (gens.empty()) throw InvalidInput("buchberger needs a ring; pass at least one generator");
  Ring ring = gens.front().ring().with_order(opts.order);
  for (auto& g : gens) {
    require_same_ring(gens.front().ring(), g.ring(), "buchberger");
    g = g.with_order(opts.order);
  }
  return detail::BuchbergerRun<K>(ring, opts).run(std::move(gens));
}

}  // namespace radgen
