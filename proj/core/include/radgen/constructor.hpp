#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "radgen/groebner.hpp"
#include "radgen/monomial_ideal.hpp"
#include "radgen/sv_lemma.hpp"

namespace radgen {

// Generators mu_1..mu_u of I and nu_1..nu_v of J, with the prefix length s
// for which mu_i must lie in (nu_1, ..., nu_i) for every i <= s.
struct TheoremInput {
  Ring ring;
  std::vector<Polynomial> mu;
  std::vector<Polynomial> nu;
  std::size_t s = 0;
};

// Which formula produced a gamma: a pure antidiagonal sum of products
// (first and last ranges), or the sum plus one mu from the prefix.
enum class GammaRule { antidiagonal, with_prefix_mu, tail };

const char* to_string(GammaRule rule);

struct GammaProvenance {
  GammaRule rule = GammaRule::antidiagonal;
  std::optional<std::size_t> mu_index;                      // 1-based
  std::vector<std::pair<std::size_t, std::size_t>> products;  // 1-based (h, k) with mu_h * nu_k a summand
};

struct GammaResult {
  std::vector<Polynomial> gammas;
  std::vector<GammaProvenance> provenance;
  // gamma_i in (mu_{s+1}, ..., mu_u, mu_1, ..., mu_s truncated to i) for i <= u.
  bool mu_prefix_certified = false;
  // gamma_i in (nu_1, ..., nu_i) for i <= v.
  bool nu_prefix_certified = false;

  std::size_t r() const { return gammas.size(); }
};

// True iff alpha_i lies in (beta_1, ..., beta_i) for every i <= s.
bool check_prefix_containment(std::span<const Polynomial> alpha, std::span<const Polynomial> beta, std::size_t s,
                              const GbOptions& opts = {});

// u + v - s - 1 when s <= v - 2, otherwise u.
std::size_t ara_upper_bound(std::size_t u, std::size_t v, std::size_t s);

// Builds gamma_1..gamma_r. The containment hypothesis on the first s
// generators is checked, never assumed; a failure throws HypothesisViolation
// naming the first bad index.
GammaResult build_gamma(const TheoremInput& in, const GbOptions& opts = {});

// The summands of each gamma as a partition system (all exponents 1). Equal
// summands inside one gamma collapse to a single element.
PartitionSystem summand_partition(const TheoremInput& in, const GammaResult& result);

enum class Verdict { holds, fails, inconclusive };

const char* to_string(Verdict v);
// fails dominates inconclusive, which dominates holds.
Verdict combine(Verdict a, Verdict b);

struct GammaCheck {
  std::size_t index = 0;  // 1-based
  Verdict in_radical_i = Verdict::inconclusive;
  Verdict in_radical_j = Verdict::inconclusive;
};

struct ProductCheck {
  std::size_t h = 0;  // 1-based
  std::size_t k = 0;
  Verdict in_radical_gammas = Verdict::inconclusive;
};

struct TheoremReport {
  Verdict verdict = Verdict::inconclusive;
  std::vector<GammaCheck> inclusion_a;    // each gamma in sqrt(I) and sqrt(J)
  std::vector<ProductCheck> inclusion_b;  // each mu_h nu_k in sqrt(gammas)
  FieldMode field = FieldMode::rational();
};

// Checks sqrt(I cap J) = sqrt(gammas) through sqrt(I cap J) = sqrt(I) cap
// sqrt(J) = sqrt(IJ). Budget overruns make a sub-check inconclusive.
TheoremReport verify_theorem(const TheoremInput& in, std::span<const Polynomial> gammas, const GbOptions& opts = {});
inline TheoremReport verify_theorem(const TheoremInput& in, const GammaResult& result, const GbOptions& opts = {}) {
  return verify_theorem(in, result.gammas, opts);
}

// Nested family I_0 = (x_1..x_t), I_i = (y_1..y_{a_i}, x_{a_i+1}..x_t).
struct ChainInput {
  Ring ring;
  std::vector<std::size_t> x;  // t variable indices
  std::vector<std::size_t> y;  // a_h variable indices
  std::vector<std::size_t> a;  // a_1 < ... < a_h, a_0 = 0 implicit
};

// Ring x1..xt, y1..y_{a_h} in that order.
ChainInput make_chain_input(std::size_t t, std::vector<std::size_t> a);
void validate(const ChainInput& in);
std::vector<MonomialIdeal> chain_ideals(const ChainInput& in);

// t + a_h - h polynomials generating I_0 cap ... cap I_h up to radical.
std::vector<Polynomial> build_chain(const ChainInput& in, const GbOptions& opts = {});

struct StciResult {
  ChainInput input;
  std::vector<Polynomial> gens;
};

// The chain with h = t and a_i = i: t generators for a height-t ideal.
StciResult build_stci(std::size_t t, const GbOptions& opts = {});

// Facets F_0..F_t, F_i = {x_1..x_i, y_{i+1}..y_t}, on the ring of make_chain_input(t, 1..t).
SimplicialComplex stci_complex(std::size_t t);

}  // namespace radgen
