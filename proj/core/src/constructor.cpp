#include "radgen/constructor.hpp"

#include <algorithm>

namespace radgen {

const char* to_string(GammaRule rule) {
  switch (rule) {
    case GammaRule::antidiagonal: return "antidiagonal";
    case GammaRule::with_prefix_mu: return "with_prefix_mu";
    case GammaRule::tail: return "tail";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::holds;
}

bool check_prefix_containment(std::span<const Polynomial> alpha, std::span<const Polynomial> beta, std::size_t s,
                              const GbOptions& opts) {
  if (s > alpha.size() || s > beta.size()) throw InvalidInput("prefix length exceeds list length");
  for (std::size_t i = 0; i < s; ++i) {
    const IdealGens prefix(beta.front().ring(), std::vector<Polynomial>(beta.begin(), beta.begin() + i + 1));
    if (!ideal_member(alpha[i], prefix, opts)) return false;
  }
  return true;
}

std::size_t ara_upper_bound(std::size_t u, std::size_t v, std::size_t s) {
  if (u == 0 || s >= u || s > v) {
    throw InvalidInput("need 0 <= s < u and s <= v (u=" + std::to_string(u) + ", v=" + std::to_string(v) +
                       ", s=" + std::to_string(s) + ")");
  }
  return s + 2 <= v ? u + v - s - 1 : u;
}

namespace {

void validate(const TheoremInput& in) {
  ara_upper_bound(in.mu.size(), in.nu.size(), in.s);
  for (const auto* list : {&in.mu, &in.nu}) {
    for (const auto& p : *list) {
      require_same_ring(in.ring, p.ring(), "theorem input");
      if (p.is_zero()) throw InvalidInput("generators must be nonzero");
    }
  }
}

}  // namespace

GammaResult build_gamma(const TheoremInput& in, const GbOptions& opts) {
  validate(in);
  const std::size_t u = in.mu.size();
  const std::size_t v = in.nu.size();
  const std::size_t s = in.s;
  for (std::size_t i = 1; i <= s; ++i) {
    const IdealGens prefix(in.ring, {in.nu.begin(), in.nu.begin() + static_cast<std::ptrdiff_t>(i)});
    if (!ideal_member(in.mu[i - 1], prefix, opts)) {
      throw HypothesisViolation("mu_" + std::to_string(i) + " is not in (nu_1, ..., nu_" + std::to_string(i) + ")", i);
    }
  }

  const std::size_t r = ara_upper_bound(u, v, s);
  GammaResult out;
  for (std::size_t i = 1; i <= r; ++i) {
    GammaProvenance prov;
    Polynomial gamma(in.ring);
    // h + k = i + s + 1 with s+1 <= h <= u and 1 <= k <= v; indices past u
    // or v are the zero convention and are skipped.
    const std::size_t diag = i + s + 1;
    const std::size_t h_lo = std::max(s + 1, diag > v ? diag - v : 1);
    const std::size_t h_hi = std::min(u, diag - 1);
    for (std::size_t h = h_lo; h <= h_hi; ++h) {
      const std::size_t k = diag - h;
      gamma += in.mu[h - 1] * in.nu[k - 1];
      prov.products.emplace_back(h, k);
    }
    if (i + s >= u + 1 && i <= u) {
      const std::size_t m = i + s - u;
      gamma += in.mu[m - 1];
      prov.mu_index = m;
      prov.rule = GammaRule::with_prefix_mu;
    } else {
      prov.rule = i <= u - s ? GammaRule::antidiagonal : GammaRule::tail;
    }
    out.gammas.push_back(std::move(gamma));
    out.provenance.push_back(std::move(prov));
  }

  std::vector<Polynomial> rotated(in.mu.begin() + static_cast<std::ptrdiff_t>(s), in.mu.end());
  rotated.insert(rotated.end(), in.mu.begin(), in.mu.begin() + static_cast<std::ptrdiff_t>(s));
  out.mu_prefix_certified = check_prefix_containment(out.gammas, rotated, u, opts);
  out.nu_prefix_certified = check_prefix_containment(out.gammas, in.nu, v, opts);
  return out;
}

PartitionSystem summand_partition(const TheoremInput& in, const GammaResult& result) {
  std::vector<std::vector<Polynomial>> parts;
  for (const auto& prov : result.provenance) {
    std::vector<Polynomial> part;
    auto add = [&part](Polynomial p) {
      if (std::find(part.begin(), part.end(), p) == part.end()) part.push_back(std::move(p));
    };
    for (const auto& [h, k] : prov.products) add(in.mu[h - 1] * in.nu[k - 1]);
    if (prov.mu_index) add(in.mu[*prov.mu_index - 1]);
    parts.push_back(std::move(part));
  }
  return PartitionSystem(in.ring, std::move(parts));
}

namespace {

Verdict radical_verdict(const Polynomial& f, const IdealGens& gens, const GbOptions& opts) {
  try {
    return radical_member(f, gens, opts) ? Verdict::holds : Verdict::fails;
  } catch (const BudgetExceeded&) {
    return Verdict::inconclusive;
  }
}

}  // namespace

TheoremReport verify_theorem(const TheoremInput& in, std::span<const Polynomial> gammas, const GbOptions& opts) {
  validate(in);
  TheoremReport report;
  report.field = opts.field;
  const IdealGens ideal_i(in.ring, in.mu);
  const IdealGens ideal_j(in.ring, in.nu);
  const IdealGens ideal_g(in.ring, std::vector<Polynomial>(gammas.begin(), gammas.end()));
  Verdict all = Verdict::holds;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    GammaCheck check;
    check.index = i + 1;
    check.in_radical_i = radical_verdict(gammas[i], ideal_i, opts);
    check.in_radical_j = radical_verdict(gammas[i], ideal_j, opts);
    all = combine(all, combine(check.in_radical_i, check.in_radical_j));
    report.inclusion_a.push_back(check);
  }
  for (std::size_t h = 1; h <= in.mu.size(); ++h) {
    for (std::size_t k = 1; k <= in.nu.size(); ++k) {
      ProductCheck check;
      check.h = h;
      check.k = k;
      check.in_radical_gammas = radical_verdict(in.mu[h - 1] * in.nu[k - 1], ideal_g, opts);
      all = combine(all, check.in_radical_gammas);
      report.inclusion_b.push_back(check);
    }
  }
  report.verdict = all;
  return report;
}

ChainInput make_chain_input(std::size_t t, std::vector<std::size_t> a) {
  if (t < 1) throw InvalidInput("chain needs t >= 1");
  const std::size_t ah = a.empty() ? 0 : a.back();
  if (ah > t) throw InvalidInput("a_h must not exceed t");
  std::vector<std::string> names;
  ChainInput in;
  for (std::size_t i = 1; i <= t; ++i) {
    in.x.push_back(names.size());
    names.push_back("x" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= ah; ++i) {
    in.y.push_back(names.size());
    names.push_back("y" + std::to_string(i));
  }
  in.ring = Ring(std::move(names));
  in.a = std::move(a);
  validate(in);
  return in;
}

void validate(const ChainInput& in) {
  const std::size_t t = in.x.size();
  const std::size_t h = in.a.size();
  if (t < 1) throw InvalidInput("chain needs t >= 1");
  if (h > t) throw InvalidInput("chain needs h <= t");
  std::size_t prev = 0;
  for (std::size_t ai : in.a) {
    if (ai <= prev) throw InvalidInput("a_1 < ... < a_h must be strictly increasing and positive");
    prev = ai;
  }
  if (prev > t) throw InvalidInput("a_h must not exceed t");
  if (in.y.size() != prev) throw InvalidInput("need exactly a_h y-variables");
  std::vector<std::size_t> all = in.x;
  all.insert(all.end(), in.y.begin(), in.y.end());
  for (std::size_t v : all) {
    if (v >= in.ring.num_vars()) throw InvalidInput("chain variable index out of range");
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw InvalidInput("x and y variables must be distinct");
}

std::vector<MonomialIdeal> chain_ideals(const ChainInput& in) {
  validate(in);
  std::vector<MonomialIdeal> out;
  out.push_back(MonomialIdeal::prime(in.ring, in.x));
  for (std::size_t ai : in.a) {
    VarSubset vars(in.y.begin(), in.y.begin() + static_cast<std::ptrdiff_t>(ai));
    vars.insert(vars.end(), in.x.begin() + static_cast<std::ptrdiff_t>(ai), in.x.end());
    std::sort(vars.begin(), vars.end());
    out.push_back(MonomialIdeal::prime(in.ring, vars));
  }
  return out;
}

std::vector<Polynomial> build_chain(const ChainInput& in, const GbOptions& opts) {
  validate(in);
  const std::size_t t = in.x.size();
  std::vector<Polynomial> level;
  for (std::size_t xi : in.x) level.push_back(make_variable(in.ring, xi));
  std::vector<Polynomial> ys;
  for (std::size_t yi : in.y) ys.push_back(make_variable(in.ring, yi));

  std::size_t prev_a = 0;
  for (std::size_t step = 1; step <= in.a.size(); ++step) {
    const std::size_t ah = in.a[step - 1];
    const std::size_t u = ah + prev_a - step + 1;
    TheoremInput ti{in.ring, {level.begin(), level.begin() + static_cast<std::ptrdiff_t>(u)},
                    {ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(ah)}, prev_a};
    GammaResult gr = build_gamma(ti, opts);
    if (gr.r() != 2 * ah - step) throw InternalError("chain step produced an unexpected number of elements");
    std::vector<Polynomial> next = std::move(gr.gammas);
    for (std::size_t i = 2 * ah - step + 1; i <= t + ah - step; ++i) {
      next.push_back(make_variable(in.ring, in.x[i - ah + step - 1]));
    }
    level = std::move(next);
    prev_a = ah;
  }
  return level;
}

StciResult build_stci(std::size_t t, const GbOptions& opts) {
  if (t < 1) throw InvalidInput("stci needs t >= 1");
  std::vector<std::size_t> a(t);
  for (std::size_t i = 0; i < t; ++i) a[i] = i + 1;
  StciResult out{make_chain_input(t, std::move(a)), {}};
  out.gens = build_chain(out.input, opts);
  return out;
}

SimplicialComplex stci_complex(std::size_t t) {
  if (t < 1) throw InvalidInput("stci needs t >= 1");
  std::vector<std::size_t> a(t);
  for (std::size_t i = 0; i < t; ++i) a[i] = i + 1;
  const ChainInput in = make_chain_input(t, std::move(a));
  std::vector<VarSubset> facets;
  for (std::size_t i = 0; i <= t; ++i) {
    VarSubset f(in.x.begin(), in.x.begin() + static_cast<std::ptrdiff_t>(i));
    f.insert(f.end(), in.y.begin() + static_cast<std::ptrdiff_t>(i), in.y.end());
    facets.push_back(std::move(f));
  }
  return make_complex(in.ring, std::move(facets));
}

}  // namespace radgen
