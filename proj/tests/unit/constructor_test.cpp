#include <doctest.h>

#include "radgen/constructor.hpp"
#include "support/instances.hpp"

using namespace radgen;
using radgen::testing::polys;
using radgen::testing::Rng;

namespace {

TheoremInput first_stage() {
  const Ring r7 = radgen::testing::numbered_ring(7);
  return {r7, polys(r7, {"x1*x2", "x3*x4", "x5"}), polys(r7, {"x1", "x3", "x6"}), 2};
}

TheoremInput four_gamma_input() {
  const Ring r6 = radgen::testing::numbered_ring(6);
  return {r6, polys(r6, {"x1*x4", "x5", "x6"}), polys(r6, {"x1", "x2", "x3"}), 1};
}

IdealGens intersection_of(const std::vector<MonomialIdeal>& parts) { return intersect_all(parts).to_ideal_gens(); }

}  // namespace

TEST_CASE("ara bound") {
  CHECK(ara_upper_bound(3, 3, 2) == 3);
  CHECK(ara_upper_bound(3, 3, 1) == 4);
  CHECK(ara_upper_bound(3, 3, 3 - 1) == 3);
  for (std::size_t u = 1; u <= 5; ++u) {
    for (std::size_t v = 1; v <= 5; ++v) CHECK(ara_upper_bound(u, v, 0) == (v >= 2 ? u + v - 1 : u));
  }
  CHECK_THROWS_AS(ara_upper_bound(2, 3, 2), InvalidInput);
  CHECK_THROWS_AS(ara_upper_bound(3, 1, 2), InvalidInput);
}

TEST_CASE("prefix containment") {
  const Ring r = radgen::testing::numbered_ring(4);
  CHECK(check_prefix_containment(polys(r, {"x1*x2", "x3*x4"}), polys(r, {"x1", "x3"}), 2));
  CHECK(check_prefix_containment(polys(r, {"x2"}), polys(r, {"x1"}), 0));
  CHECK_FALSE(check_prefix_containment(polys(r, {"x2"}), polys(r, {"x1"}), 1));
}

TEST_CASE("construction examples") {
  const TheoremInput a = first_stage();
  const GammaResult ra = build_gamma(a);
  CHECK(ra.gammas == polys(a.ring, {"x1*x5", "x1*x2+x3*x5", "x3*x4+x5*x6"}));
  CHECK(ra.r() == 3);
  CHECK(ra.mu_prefix_certified);
  CHECK(ra.nu_prefix_certified);

  const TheoremInput b = four_gamma_input();
  const GammaResult rb = build_gamma(b);
  CHECK(rb.gammas == polys(b.ring, {"x1*x5", "x2*x5+x1*x6", "x1*x4+x3*x5+x2*x6", "x3*x6"}));
  REQUIRE(rb.provenance.size() == 4);
  CHECK(rb.provenance[0].rule == GammaRule::antidiagonal);
  CHECK(rb.provenance[2].rule == GammaRule::with_prefix_mu);
  CHECK(rb.provenance[2].mu_index == 1u);
  CHECK(rb.provenance[3].rule == GammaRule::tail);
  CHECK(rb.provenance[3].products == std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}});

  const Ring ab({"a", "b"});
  const TheoremInput c{ab, polys(ab, {"a", "b"}), polys(ab, {"a"}), 1};
  const GammaResult rc = build_gamma(c);
  CHECK(rc.gammas == polys(ab, {"a*b", "a"}));
  CHECK(radical_equal(IdealGens(ab, rc.gammas),
                      intersection_of({MonomialIdeal::parse(ab, {"a", "b"}), MonomialIdeal::parse(ab, {"a"})}))
            .verdict);
}

TEST_CASE("hypothesis violations name the index") {
  const Ring r = radgen::testing::numbered_ring(4);
  const TheoremInput bad{r, polys(r, {"x1", "x2*x4", "x3"}), polys(r, {"x1", "x3", "x4"}), 2};
  try {
    build_gamma(bad);
    FAIL("expected a hypothesis violation");
  } catch (const HypothesisViolation& e) {
    CHECK(e.index() == 2);
  }
  CHECK_THROWS_AS(build_gamma({r, polys(r, {"x1", "0"}), polys(r, {"x1"}), 0}), InvalidInput);
  CHECK_THROWS_AS(build_gamma({r, polys(r, {"x1"}), polys(r, {"x1"}), 1}), InvalidInput);
}

TEST_CASE("verification examples") {
  const TheoremInput a = first_stage();
  const GammaResult ra = build_gamma(a);
  CHECK(verify_theorem(a, ra).verdict == Verdict::holds);
  const TheoremInput second{a.ring, ra.gammas, polys(a.ring, {"x5", "x2", "x7"}), 2};
  const GammaResult rs = build_gamma(second);
  CHECK(verify_theorem(second, rs).verdict == Verdict::holds);

  const TheoremInput b = four_gamma_input();
  const GammaResult rb = build_gamma(b);
  CHECK(verify_theorem(b, rb).verdict == Verdict::holds);
  for (std::size_t drop = 0; drop < rb.gammas.size(); ++drop) {
    std::vector<Polynomial> fewer = rb.gammas;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    const TheoremReport rep = verify_theorem(b, fewer);
    CHECK(rep.verdict == Verdict::fails);
    bool product_failed = false;
    for (const auto& pc : rep.inclusion_b) product_failed = product_failed || pc.in_radical_gammas == Verdict::fails;
    CHECK(product_failed);
  }
}

TEST_CASE("tight budget gives an inconclusive verdict") {
  const TheoremInput b = four_gamma_input();
  const GammaResult rb = build_gamma(b);
  GbOptions opts;
  opts.max_steps = 1;
  opts.monomial_fast_path = false;
  CHECK(verify_theorem(b, rb, opts).verdict == Verdict::inconclusive);
  CHECK(combine(Verdict::inconclusive, Verdict::fails) == Verdict::fails);
  CHECK(combine(Verdict::holds, Verdict::inconclusive) == Verdict::inconclusive);
}

TEST_CASE("property: randomized instances satisfy every postcondition") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const TheoremInput in = radgen::testing::random_theorem_input(rng);
    CAPTURE(trial);
    const GammaResult res = build_gamma(in);
    CHECK(res.r() == ara_upper_bound(in.mu.size(), in.nu.size(), in.s));
    CHECK(res.mu_prefix_certified);
    CHECK(res.nu_prefix_certified);
    const PartitionSystem sys = summand_partition(in, res);
    CHECK(validate_partition(sys).ok);
    CHECK(verify_theorem(in, res).verdict == Verdict::holds);
  }
}

TEST_CASE("property: with s = 0 every gamma is a pure antidiagonal sum") {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    TheoremInput in = radgen::testing::random_theorem_input(rng);
    in.s = 0;
    const GammaResult res = build_gamma(in);
    const std::size_t u = in.mu.size(), v = in.nu.size();
    CHECK(res.r() == (v >= 2 ? u + v - 1 : u));
    for (std::size_t i = 0; i < res.r(); ++i) {
      CHECK_FALSE(res.provenance[i].mu_index.has_value());
      Polynomial sum(in.ring);
      for (std::size_t h = 1; h <= u; ++h) {
        for (std::size_t k = 1; k <= v; ++k) {
          if (h + k == i + 2) sum += in.mu[h - 1] * in.nu[k - 1];
        }
      }
      CHECK(res.gammas[i] == sum);
    }
  }
}

TEST_CASE("summand partitions reproduce the gammas") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const TheoremInput in = radgen::testing::random_theorem_input(rng);
    const GammaResult res = build_gamma(in);
    const PartitionSystem sys = summand_partition(in, res);
    bool collapsed = false;
    for (std::size_t i = 0; i < res.r(); ++i) {
      const std::size_t summands = res.provenance[i].products.size() + (res.provenance[i].mu_index ? 1 : 0);
      collapsed = collapsed || sys.parts()[i].size() != summands;
    }
    const auto q = combine_unchecked(sys);
    if (!collapsed) CHECK(q == res.gammas);
    CHECK(radical_equal(IdealGens(in.ring, q), IdealGens(in.ring, res.gammas)).verdict);
  }
}

TEST_CASE("chain examples") {
  const ChainInput trivial = make_chain_input(3, {});
  CHECK(build_chain(trivial) == polys(trivial.ring, {"x1", "x2", "x3"}));

  const ChainInput one = make_chain_input(3, {2});
  const auto g = build_chain(one);
  CHECK(g == polys(one.ring, {"x1*y1", "x1*y2+x2*y1", "x2*y2", "x3"}));
  CHECK(radical_equal(IdealGens(one.ring, g), intersection_of(chain_ideals(one))).verdict);

  const ChainInput two = make_chain_input(2, {1, 2});
  const auto g2 = build_chain(two);
  CHECK(g2.size() == 2);
  CHECK(radical_equal(IdealGens(two.ring, g2), intersection_of(chain_ideals(two))).verdict);

  CHECK_THROWS_AS(make_chain_input(3, {2, 2}), InvalidInput);
  CHECK_THROWS_AS(make_chain_input(3, {4}), InvalidInput);
  CHECK_THROWS_AS(make_chain_input(0, {}), InvalidInput);
}

TEST_CASE("chain outputs have the stated length and tail") {
  const std::vector<std::vector<std::size_t>> cases = {{1}, {2}, {3}, {1, 3}, {2, 3}, {1, 2, 4}, {2, 4}, {1, 2, 3, 4}};
  for (const auto& a : cases) {
    const ChainInput in = make_chain_input(4, a);
    const auto g = build_chain(in);
    const std::size_t t = 4, h = a.size(), ah = a.back();
    CHECK(g.size() == t + ah - h);
    // Positions 2a_h - h + 1 .. t + a_h - h are x_{a_h+1} .. x_t.
    for (std::size_t i = 2 * ah - h + 1; i <= t + ah - h; ++i) {
      CHECK(g[i - 1] == make_variable(in.ring, in.x[i - ah + h - 1]));
    }
    CHECK(radical_equal(IdealGens(in.ring, g), intersection_of(chain_ideals(in))).verdict);
  }
}

TEST_CASE("set-theoretic complete intersections") {
  const StciResult one = build_stci(1);
  CHECK(one.gens == polys(one.input.ring, {"x1*y1"}));
  for (std::size_t t = 1; t <= 3; ++t) {
    const StciResult res = build_stci(t);
    CHECK(res.gens.size() == t);
    const MonomialIdeal ideal = intersect_all(chain_ideals(res.input));
    CHECK(radical_equal(IdealGens(res.input.ring, res.gens), ideal.to_ideal_gens()).verdict);
    const auto h = height(ideal);
    CHECK(h.height == t);
    CHECK(h.pure);
    CHECK(face_ideal(stci_complex(t)) == ideal);
  }
  for (std::size_t t = 2; t <= 5; ++t) {
    const SimplicialComplex c = stci_complex(t);
    std::vector<std::size_t> order(c.facets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    CHECK(check_shelling(c, order));
  }
}
