// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli.hpp"
#include "radgen/constructor.hpp"
#include "support/instances.hpp"

using namespace radgen;
using radgen::testing::polys;

namespace {

// Pinned limits, in seconds.
constexpr double kExampleLimit = 10.0;
constexpr double kRationalLargeLimit = 600.0;
constexpr double kTheoremSuiteLimit = 300.0;
constexpr std::size_t kTheoremInstances = 100;
constexpr std::size_t kPartitionInstances = 50;
constexpr std::uint64_t kTheoremSeed = 5005;
constexpr std::uint64_t kPartitionSeed = 6006;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_polys(const Ring& ring, const std::vector<Polynomial>& got, const std::vector<std::string>& display) {
  return got == polys(ring, display);
}

bool json_polys_match(const cli::Json& list, const Ring& ring, const std::vector<std::string>& display) {
  std::vector<Polynomial> got;
  for (const auto& s : list) got.push_back(parse_poly(s.get<std::string>(), ring));
  return same_polys(ring, got, display);
}

cli::Outcome reproduce(const std::string& name, FieldMode field = FieldMode::rational(), std::size_t t = 0) {
  cli::JobSpec job;
  job.command = "reproduce";
  job.field = field;
  if (t > 0) job.t = t;
  job.max_t = 5;
  return cli::reproduce(name, job);
}

const std::vector<std::string> kFirstStage = {"x1*x5", "x1*x2+x3*x5", "x3*x4+x5*x6"};
const std::vector<std::string> kSecondStage = {"(x3*x4+x5*x6)*x5", "x1*x5+(x3*x4+x5*x6)*x2",
                                               "x1*x2+x3*x5+(x3*x4+x5*x6)*x7"};
const std::vector<std::string> kFourGammas = {"x1*x5", "x2*x5+x1*x6", "x1*x4+x3*x5+x2*x6", "x3*x6"};
const std::vector<std::string> kFiveGenerators = {
    "(x2*x5*x7+x1*x3*x6)*x2",
    "(x2*x5*x7+x1*x3*x6)*x9+(x1*x4+x2*x5*x8+x3*x6*x7)*x2",
    "(x2*x5*x7+x1*x3*x6)*x10+(x1*x4+x2*x5*x8+x3*x6*x7)*x9+x2*x3*x6*x8",
    "x1*x2*x5+(x1*x4+x2*x5*x8+x3*x6*x7)*x10+x3*x6*x8*x9",
    "x3*x6*x8*x10"};

Check criterion1() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const cli::Outcome o = reproduce("example1");
  const double elapsed = seconds_since(start);
  const Ring ring = radgen::testing::numbered_ring(7);
  c.require(o.exit_code == cli::kOk, "exit code");
  c.require(json_polys_match(o.report["stages"][0]["gammas"], ring, kFirstStage), "first-stage gammas");
  c.require(json_polys_match(o.report["generators"], ring, kSecondStage), "second-stage gammas");
  c.require(o.report["stages"][1]["theorem"]["verdict"] == "true", "theorem verdict");
  c.require(o.report["radical_equal"] == "true", "radical equality with the triple intersection");
  c.require(o.report["height"] == 3 && o.report["pure"] == true, "pure height 3");
  const auto primes = cli::Json::parse(
      R"([["x1","x3","x5"],["x1","x3","x6"],["x1","x4","x5"],["x2","x3","x5"],["x2","x4","x5"],["x2","x5","x7"]])");
  c.require(o.report["minimal_primes"] == primes, "six minimal primes");
  c.require(o.report["ara"] == 3, "ara certified");
  c.require(elapsed < kExampleLimit, "runtime " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion2() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const cli::Outcome o = reproduce("example2");
  const double elapsed = seconds_since(start);
  const Ring ring = radgen::testing::numbered_ring(6);
  c.require(o.exit_code == cli::kOk, "exit code");
  c.require(json_polys_match(o.report["generators"], ring, kFourGammas), "four gammas");
  c.require(o.report["radical_equal"] == "true", "radical equality");
  c.require(o.report["ara_upper_bound"] == 4, "ara bound 4");
  c.require(o.report["height"] == 3, "height 3");
  c.require(o.report["ara_lower_bound"].is_string(), "lower bound marked as not reproduced");
  c.require(elapsed < kExampleLimit, "runtime " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion3() {
  Check c;
  const Ring ring = radgen::testing::numbered_ring(10);
  const auto start_mod = std::chrono::steady_clock::now();
  const cli::Outcome m = reproduce("example3", FieldMode::mod(kDefaultPrime));
  c.require(seconds_since(start_mod) < kRationalLargeLimit, "mod-p runtime");
  c.require(m.exit_code == cli::kOk && m.report["radical_equal"] == "true", "mod-p radical equality");
  const auto start = std::chrono::steady_clock::now();
  const cli::Outcome o = reproduce("example3");
  const double elapsed = seconds_since(start);
  c.require(o.exit_code == cli::kOk, "exit code");
  c.require(json_polys_match(o.report["generators"], ring, kFiveGenerators), "five generators");
  c.require(o.report["radical_equal"] == "true", "rational radical equality");
  c.require(o.report["minimal_generator_count"] == 15, "15 minimal generators");
  c.require(elapsed < kRationalLargeLimit, "rational runtime " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion4() {
  Check c;
  for (std::size_t t = 1; t <= 4; ++t) {
    const StciResult res = build_stci(t);
    const MonomialIdeal ideal = intersect_all(chain_ideals(res.input));
    const std::string tag = "t=" + std::to_string(t) + ": ";
    c.require(res.gens.size() == t, tag + "generator count");
    c.require(chain_ideals(res.input).size() == t + 1, tag + "intersection of t+1 ideals");
    c.require(radical_equal(ideal.to_ideal_gens(), IdealGens(res.input.ring, res.gens)).verdict, tag + "radical");
    const HeightInfo h = height(ideal);
    c.require(h.height == t && h.pure, tag + "pure height t");
  }
  for (std::size_t t = 2; t <= 5; ++t) {
    const SimplicialComplex complex = stci_complex(t);
    std::vector<std::size_t> order(complex.facets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    c.require(check_shelling(complex, order), "shelling t=" + std::to_string(t));
  }
  return c;
}

Check criterion5() {
  Check c;
  radgen::testing::Rng rng(kTheoremSeed);
  const auto start = std::chrono::steady_clock::now();
  std::vector<bool> seen_s(5, false);
  for (std::size_t n = 0; n < kTheoremInstances; ++n) {
    const TheoremInput in = radgen::testing::random_theorem_input(rng);
    seen_s[in.s] = true;
    const GammaResult res = build_gamma(in);
    const std::string tag = "instance " + std::to_string(n) + ": ";
    c.require(res.r() == ara_upper_bound(in.mu.size(), in.nu.size(), in.s), tag + "count law");
    c.require(res.mu_prefix_certified && res.nu_prefix_certified, tag + "prefix containment");
    c.require(validate_partition(summand_partition(in, res)).ok, tag + "summand partition");
    c.require(verify_theorem(in, res).verdict == Verdict::holds, tag + "theorem verdict");
  }
  c.require(seen_s[0] && seen_s[1] && seen_s[2], "s range coverage");
  const double elapsed = seconds_since(start);
  c.require(elapsed < kTheoremSuiteLimit, "runtime " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion6() {
  Check c;
  radgen::testing::Rng rng(kPartitionSeed);
  bool nontrivial_exponent = false;
  for (std::size_t n = 0; n < kPartitionInstances; ++n) {
    const PartitionSystem sys = radgen::testing::random_valid_partition(rng);
    for (const auto& part : sys.exponents()) {
      for (unsigned e : part) nontrivial_exponent = nontrivial_exponent || e == 2;
    }
    const std::string tag = "instance " + std::to_string(n) + ": ";
    c.require(validate_partition(sys).ok, tag + "validation");
    c.require(radical_equal(sys.all_elements(), IdealGens(sys.ring(), combine(sys))).verdict, tag + "radical");
  }
  c.require(nontrivial_exponent, "exponent 2 exercised");
  return c;
}

// Verdicts of criteria 1-4 recomputed through the library under `opts`.
std::vector<bool> shipped_verdicts(const GbOptions& opts) {
  std::vector<bool> out;
  const Ring r7 = radgen::testing::numbered_ring(7);
  const TheoremInput a{r7, polys(r7, {"x1*x2", "x3*x4", "x5"}), polys(r7, {"x1", "x3", "x6"}), 2};
  const GammaResult ra = build_gamma(a, opts);
  out.push_back(verify_theorem(a, ra, opts).verdict == Verdict::holds);
  const TheoremInput b{r7, ra.gammas, polys(r7, {"x5", "x2", "x7"}), 2};
  const GammaResult rb = build_gamma(b, opts);
  out.push_back(verify_theorem(b, rb, opts).verdict == Verdict::holds);

  const Ring r6 = radgen::testing::numbered_ring(6);
  const TheoremInput c{r6, polys(r6, {"x1*x4", "x5", "x6"}), polys(r6, {"x1", "x2", "x3"}), 1};
  const GammaResult rc = build_gamma(c, opts);
  out.push_back(verify_theorem(c, rc, opts).verdict == Verdict::holds);

  const Ring r10 = radgen::testing::numbered_ring(10);
  const MonomialIdeal triple = intersect_all({MonomialIdeal::parse(r10, {"x1*x4", "x2*x5", "x3*x6"}),
                                              MonomialIdeal::parse(r10, {"x1", "x7", "x8"}),
                                              MonomialIdeal::parse(r10, {"x2", "x9", "x10"})});
  out.push_back(radical_equal(triple.to_ideal_gens(), IdealGens(r10, polys(r10, kFiveGenerators)), opts).verdict);

  for (std::size_t t = 1; t <= 4; ++t) {
    const StciResult s = build_stci(t, opts);
    out.push_back(radical_equal(intersect_all(chain_ideals(s.input)).to_ideal_gens(), IdealGens(s.input.ring, s.gens),
                                opts)
                      .verdict);
  }
  return out;
}

Check criterion7() {
  Check c;
  GbStats stats;
  GbOptions checked;
  checked.self_check = true;
  checked.monomial_fast_path = false;  // route every query through a basis run
  checked.stats = &stats;
  std::vector<bool> rational;
  try {
    rational = shipped_verdicts(checked);
  } catch (const InternalError& e) {
    c.require(false, std::string("self-check: ") + e.what());
    return c;
  }
  c.require(stats.bases > 0 && stats.self_checks == stats.bases, "every basis self-checked");
  c.require(std::find(rational.begin(), rational.end(), false) == rational.end(), "rational verdicts");

  // Idempotence on the bases behind the shipped examples.
  const Ring r6 = radgen::testing::numbered_ring(6);
  const Ring r10 = radgen::testing::numbered_ring(10);
  for (const IdealGens& g : {IdealGens(r6, polys(r6, kFourGammas)), IdealGens(r10, polys(r10, kFiveGenerators))}) {
    const auto gb = buchberger(g, checked);
    c.require(buchberger(IdealGens(g.ring(), gb.basis), checked).basis == gb.basis, "idempotence");
  }

  GbOptions modp = checked;
  modp.field = FieldMode::mod(kDefaultPrime);
  c.require(shipped_verdicts(modp) == rational, "mod-p agrees with rational");
  c.require(reproduce("example1", modp.field).report["verdict"] == "true", "mod-p example1 report");
  return c;
}

Check criterion8() {
  Check c;
  const Ring r6 = radgen::testing::numbered_ring(6);
  const TheoremInput in{r6, polys(r6, {"x1*x4", "x5", "x6"}), polys(r6, {"x1", "x2", "x3"}), 1};
  const GammaResult res = build_gamma(in);
  c.require(verify_theorem(in, res).verdict == Verdict::holds, "unmodified list holds");
  for (std::size_t drop = 0; drop < res.gammas.size(); ++drop) {
    std::vector<Polynomial> fewer = res.gammas;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    const TheoremReport rep = verify_theorem(in, fewer);
    bool product_fails = false;
    for (const auto& p : rep.inclusion_b) product_fails = product_fails || p.in_radical_gammas == Verdict::fails;
    c.require(rep.verdict == Verdict::fails && product_fails, "deleting gamma " + std::to_string(drop + 1));
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"example 1 reproduction", criterion1},
      {"example 2 reproduction", criterion2},
      {"example 3 reproduction", criterion3},
      {"complete-intersection family", criterion4},
      {"randomized construction suite", criterion5},
      {"randomized partition suite", criterion6},
      {"engine self-checks", criterion7},
      {"negative control", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    std::printf("%s criterion %zu (%s) [%.2f s]%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, elapsed,
                c.ok ? "" : ": ", c.detail.c_str());
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
