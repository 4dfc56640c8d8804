#include "radgen/groebner.hpp"

#include <charconv>

namespace radgen {

FieldMode FieldMode::mod(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not a prime below 2^31");
  return FieldMode(p);
}

FieldMode FieldMode::parse(const std::string& text) {
  if (text == "rat") return rational();
  constexpr std::string_view prefix = "mod:";
  if (text.rfind(prefix, 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc{} || ptr != last || p > UINT32_MAX) throw InvalidInput("bad field specification '" + text + "'");
    return mod(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("bad field specification '" + text + "' (expected rat or mod:<p>)");
}

std::string FieldMode::describe() const { return is_rational() ? "rat" : "mod:" + std::to_string(prime_); }

IdealGens::IdealGens(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring(), "ideal generators");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

IdealGens IdealGens::parse(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_poly(t, ring));
  return IdealGens(ring, std::move(gens));
}

bool IdealGens::all_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

namespace {

template <FieldElement K>
std::vector<BasicPolynomial<K>> convert(const std::vector<Polynomial>& gens, const GbOptions& opts) {
  std::vector<BasicPolynomial<K>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    if constexpr (std::is_same_v<K, Rational>) {
      out.push_back(g.with_order(opts.order));
    } else {
      BasicPolynomial<K> r = to_mod_p(g.with_order(opts.order), opts.field.prime());
      if (!r.is_zero()) out.push_back(std::move(r));
    }
  }
  return out;
}

template <FieldElement K>
GroebnerBasis<K> basis_of(const Ring& ring, const std::vector<Polynomial>& gens, const GbOptions& opts) {
  auto converted = convert<K>(gens, opts);
  if (converted.empty()) return GroebnerBasis<K>{ring.with_order(opts.order), {}, true};
  return buchberger<K>(std::move(converted), opts);
}

template <FieldElement K>
bool member_via_basis(const Polynomial& f, const IdealGens& gens, const GbOptions& opts) {
  auto fk = convert<K>({f}, opts);
  if (fk.empty()) return true;
  const GroebnerBasis<K> gb = basis_of<K>(gens.ring(), gens.gens(), opts);
  return normal_form<K>(fk.front(), gb.basis).is_zero();
}

template <FieldElement K>
bool radical_via_basis(const Polynomial& f, const IdealGens& gens, const GbOptions& opts) {
  const Ring& ring = gens.ring();
  const Ring big = ring.extended(ring.fresh_name("w")).with_order(opts.order);
  std::vector<Polynomial> lifted;
  lifted.reserve(gens.size() + 1);
  for (const auto& g : gens.gens()) lifted.push_back(g.with_order(opts.order).embedded(big));
  const Polynomial w = make_variable(big, big.num_vars() - 1);
  lifted.push_back(make_constant(big, 1) - w * f.with_order(opts.order).embedded(big));
  return basis_of<K>(big, lifted, opts).is_unit();
}

bool term_in_monomial_ideal(const Monomial& m, const std::vector<Polynomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
}

bool term_in_monomial_radical(const Monomial& m, const std::vector<Polynomial>& gens) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Polynomial& g) { return m.support_contains(g.leading_monomial()); });
}

}  // namespace

GroebnerBasis<Rational> buchberger(const IdealGens& gens, const GbOptions& opts) {
  GbOptions rational_opts = opts;
  rational_opts.field = FieldMode::rational();
  return basis_of<Rational>(gens.ring(), gens.gens(), rational_opts);
}

GroebnerBasis<ModP> buchberger_mod_p(const IdealGens& gens, const GbOptions& opts) {
  if (opts.field.is_rational()) throw InvalidInput("buchberger_mod_p needs a prime field mode");
  return basis_of<ModP>(gens.ring(), gens.gens(), opts);
}

bool ideal_member(const Polynomial& f, const IdealGens& gens, const GbOptions& opts) {
  require_same_ring(f.ring(), gens.ring(), "ideal_member");
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  // A monomial ideal contains f iff it contains every term of f.
  if (opts.monomial_fast_path && gens.all_monomial()) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const Term<Rational>& t) { return term_in_monomial_ideal(t.mono, gens.gens()); });
  }
  return opts.field.is_rational() ? member_via_basis<Rational>(f, gens, opts) : member_via_basis<ModP>(f, gens, opts);
}

bool radical_member(const Polynomial& f, const IdealGens& gens, const GbOptions& opts) {
  require_same_ring(f.ring(), gens.ring(), "radical_member");
  if (f.is_zero()) return true;
  if (gens.empty()) return false;
  // The radical of a monomial ideal is the squarefree monomial ideal on the
  // generators' supports.
  if (opts.monomial_fast_path && gens.all_monomial()) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const Term<Rational>& t) { return term_in_monomial_radical(t.mono, gens.gens()); });
  }
  return opts.field.is_rational() ? radical_via_basis<Rational>(f, gens, opts) : radical_via_basis<ModP>(f, gens, opts);
}

RadicalReport radical_equal(const IdealGens& a, const IdealGens& b, const GbOptions& opts) {
  require_same_ring(a.ring(), b.ring(), "radical_equal");
  RadicalReport report;
  report.field = opts.field;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!radical_member(a.gens()[i], b, opts)) {
      report.failures.push_back({InclusionFailure::Direction::a_in_radical_b, i, a.gens()[i]});
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!radical_member(b.gens()[i], a, opts)) {
      report.failures.push_back({InclusionFailure::Direction::b_in_radical_a, i, b.gens()[i]});
    }
  }
  report.verdict = report.failures.empty();
  return report;
}

}  // namespace radgen
