#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radgen/constructor.hpp"
#include "radgen/monomial_ideal.hpp"
#include "radgen/sv_lemma.hpp"

namespace radgen::cli {

namespace {

// ---- job document -----------------------------------------------------------

template <class T>
std::optional<T> optional_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  try {
    return doc[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  return doc[key];
}

// ---- helpers shared by commands --------------------------------------------

Ring make_ring(const JobSpec& job) {
  if (job.ring.empty()) throw InvalidInput("field 'ring' must list at least one variable");
  return Ring(job.ring);
}

std::vector<Polynomial> parse_list(const Ring& ring, const JobSpec& job, std::size_t which) {
  if (which >= job.ideals.size()) {
    throw InvalidInput("command '" + job.command + "' needs at least " + std::to_string(which + 1) + " entries in 'ideals'");
  }
  std::vector<Polynomial> out;
  const auto& texts = job.ideals[which];
  for (std::size_t j = 0; j < texts.size(); ++j) {
    try {
      out.push_back(parse_poly(texts[j], ring));
    } catch (const ParseError& e) {
      throw InvalidInput("ideals[" + std::to_string(which) + "][" + std::to_string(j) + "]: " + e.what());
    }
  }
  return out;
}

MonomialIdeal parse_monomial_ideal(const Ring& ring, const JobSpec& job, std::size_t which) {
  return MonomialIdeal::from_polynomials(IdealGens(ring, parse_list(ring, job, which)));
}

Json poly_list(std::span<const Polynomial> polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(print_poly(p, MonomialOrder::degrevlex));
  return out;
}

Json subset_list(const std::vector<VarSubset>& subsets, const VarSet& vars) {
  Json out = Json::array();
  for (const auto& s : subsets) {
    Json names = Json::array();
    for (std::size_t v : s) names.push_back(vars.name(v));
    out.push_back(names);
  }
  return out;
}

GbOptions gb_options(const JobSpec& job) {
  GbOptions opts;
  opts.field = job.field;
  opts.max_steps = job.max_steps;
  return opts;
}

Json header(const JobSpec& job, const std::string& command) {
  Json r;
  r["command"] = command;
  r["field"] = job.field.describe();
  if (!job.field.is_rational()) r["verified"] = "mod p";
  return r;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::holds: return kOk;
    case Verdict::fails: return kFalse;
    case Verdict::inconclusive: return kBudget;
  }
  return kBudget;
}

Verdict radical_equal_verdict(const IdealGens& a, const IdealGens& b, const GbOptions& opts, Json* failures = nullptr) {
  try {
    const RadicalReport rep = radical_equal(a, b, opts);
    if (failures) {
      *failures = Json::array();
      for (const auto& f : rep.failures) {
        Json item;
        item["direction"] = f.direction == InclusionFailure::Direction::a_in_radical_b ? "first_in_radical_of_second"
                                                                                       : "second_in_radical_of_first";
        item["index"] = f.index + 1;
        item["generator"] = print_poly(f.generator, MonomialOrder::degrevlex);
        failures->push_back(item);
      }
    }
    return rep.verdict ? Verdict::holds : Verdict::fails;
  } catch (const BudgetExceeded&) {
    return Verdict::inconclusive;
  }
}

Json provenance_json(const GammaResult& result) {
  Json out = Json::array();
  for (const auto& p : result.provenance) {
    Json item;
    item["rule"] = to_string(p.rule);
    if (p.mu_index) item["mu_index"] = *p.mu_index;
    Json products = Json::array();
    for (const auto& [h, k] : p.products) products.push_back({h, k});
    item["products"] = products;
    out.push_back(item);
  }
  return out;
}

Json theorem_json(const TheoremReport& rep) {
  Json out;
  out["verdict"] = to_string(rep.verdict);
  Json a = Json::array();
  for (const auto& c : rep.inclusion_a) {
    a.push_back({{"gamma", c.index}, {"in_radical_I", to_string(c.in_radical_i)}, {"in_radical_J", to_string(c.in_radical_j)}});
  }
  Json b = Json::array();
  for (const auto& c : rep.inclusion_b) {
    b.push_back({{"h", c.h}, {"k", c.k}, {"in_radical_gammas", to_string(c.in_radical_gammas)}});
  }
  out["gammas_in_radicals"] = a;
  out["products_in_radical"] = b;
  return out;
}

// One application of the intersection construction, with its verification.
struct Stage {
  TheoremInput input;
  GammaResult result;
  Verdict verdict;
  Json json;
};

Stage run_stage(const TheoremInput& in, const GbOptions& opts, const std::vector<std::string>& display = {}) {
  Stage st{in, build_gamma(in, opts), Verdict::holds, Json{}};
  const TheoremReport rep = verify_theorem(in, st.result, opts);
  Json& j = st.json;
  j["mu"] = poly_list(in.mu);
  j["nu"] = poly_list(in.nu);
  j["s"] = in.s;
  j["ara_upper_bound"] = ara_upper_bound(in.mu.size(), in.nu.size(), in.s);
  j["gammas"] = poly_list(st.result.gammas);
  j["provenance"] = provenance_json(st.result);
  j["prefix_containment"] = {{"mu", st.result.mu_prefix_certified}, {"nu", st.result.nu_prefix_certified}};
  st.verdict = rep.verdict;
  if (!st.result.mu_prefix_certified || !st.result.nu_prefix_certified) st.verdict = combine(st.verdict, Verdict::fails);
  if (!display.empty()) {
    bool same = display.size() == st.result.gammas.size();
    for (std::size_t i = 0; same && i < display.size(); ++i) same = parse_poly(display[i], in.ring) == st.result.gammas[i];
    j["matches_display"] = same;
    if (!same) st.verdict = combine(st.verdict, Verdict::fails);
  }
  j["theorem"] = theorem_json(rep);
  return st;
}

std::vector<Polynomial> parse_all(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// Height, minimal primes and the ara certificate for a monomial ideal
// generated up to radical by `gens` (already verified by the caller).
void add_height(Json& r, const MonomialIdeal& ideal, std::size_t generator_count, Verdict radical) {
  const auto primes = minimal_primes(ideal);
  const HeightInfo hi = height(ideal);
  r["minimal_primes"] = subset_list(primes, ideal.ring().vars());
  r["height"] = hi.height;
  r["pure"] = hi.pure;
  r["ara_upper_bound"] = generator_count;
  if (radical == Verdict::holds && hi.height == generator_count) r["ara"] = generator_count;
}

// ---- reproduce targets ---------------------------------------------------------

Outcome reproduce_example1(const JobSpec& job) {
  const GbOptions opts = gb_options(job);
  const Ring ring(numbered("x", 7));
  Json r = header(job, "reproduce");
  r["example"] = "example1";
  r["ring"] = ring.vars().names();

  const std::vector<VarSubset> primes = {{0, 2, 4}, {1, 3, 4}, {0, 3, 4}, {1, 2, 4}, {0, 2, 5}, {1, 4, 6}};
  std::vector<MonomialIdeal> prime_ideals;
  for (const auto& p : primes) prime_ideals.push_back(MonomialIdeal::prime(ring, p));
  const MonomialIdeal ideal = intersect_all(prime_ideals);
  const MonomialIdeal displayed =
      MonomialIdeal::parse(ring, {"x1*x2", "x1*x5", "x3*x5", "x5*x6", "x3*x4*x7", "x2*x3*x4"});
  const MonomialIdeal i1 = MonomialIdeal::parse(ring, {"x1*x2", "x3*x4", "x5"});
  const MonomialIdeal i2 = MonomialIdeal::parse(ring, {"x1", "x3", "x6"});
  const MonomialIdeal i3 = MonomialIdeal::parse(ring, {"x2", "x5", "x7"});
  const bool ideal_ok = ideal == displayed && intersect_all({i1, i2, i3}) == ideal;
  r["ideal"] = ideal.to_strings();
  r["ideal_matches_display"] = ideal_ok;

  Stage first = run_stage({ring, parse_all(ring, {"x1*x2", "x3*x4", "x5"}), parse_all(ring, {"x1", "x3", "x6"}), 2}, opts,
                          {"x1*x5", "x1*x2+x3*x5", "x3*x4+x5*x6"});
  Stage second = run_stage({ring, first.result.gammas, parse_all(ring, {"x5", "x2", "x7"}), 2}, opts,
                           {"(x3*x4+x5*x6)*x5", "x1*x5+(x3*x4+x5*x6)*x2", "x1*x2+x3*x5+(x3*x4+x5*x6)*x7"});
  r["stages"] = {first.json, second.json};
  const auto& gens = second.result.gammas;
  r["generators"] = poly_list(gens);
  const Verdict radical = radical_equal_verdict(ideal.to_ideal_gens(), IdealGens(ring, gens), opts);
  r["radical_equal"] = to_string(radical);
  add_height(r, ideal, gens.size(), radical);
  const auto found = minimal_primes(ideal);
  std::vector<VarSubset> expected = primes;
  std::sort(expected.begin(), expected.end());
  std::vector<VarSubset> got = found;
  std::sort(got.begin(), got.end());
  r["primes_match_display"] = got == expected;

  Verdict v = combine(combine(first.verdict, second.verdict), radical);
  if (!ideal_ok || got != expected) v = combine(v, Verdict::fails);
  r["verdict"] = to_string(v);
  return {r, exit_for(v)};
}

Outcome reproduce_example2(const JobSpec& job) {
  const GbOptions opts = gb_options(job);
  const Ring ring(numbered("x", 6));
  Json r = header(job, "reproduce");
  r["example"] = "example2";
  r["ring"] = ring.vars().names();

  const MonomialIdeal i1 = intersect(MonomialIdeal::parse(ring, {"x1", "x5", "x6"}), MonomialIdeal::parse(ring, {"x4", "x5", "x6"}));
  const MonomialIdeal i2 = MonomialIdeal::parse(ring, {"x1", "x2", "x3"});
  const MonomialIdeal ideal = intersect(i1, i2);
  const bool ideal_ok =
      i1 == MonomialIdeal::parse(ring, {"x1*x4", "x5", "x6"}) &&
      ideal == MonomialIdeal::parse(ring, {"x1*x4", "x1*x5", "x1*x6", "x2*x5", "x2*x6", "x3*x5", "x3*x6"});
  r["ideal"] = ideal.to_strings();
  r["ideal_matches_display"] = ideal_ok;

  Stage st = run_stage({ring, parse_all(ring, {"x1*x4", "x5", "x6"}), parse_all(ring, {"x1", "x2", "x3"}), 1}, opts,
                       {"x1*x5", "x2*x5+x1*x6", "x1*x4+x3*x5+x2*x6", "x3*x6"});
  r["stages"] = {st.json};
  r["generators"] = poly_list(st.result.gammas);
  const Verdict radical = radical_equal_verdict(ideal.to_ideal_gens(), IdealGens(ring, st.result.gammas), opts);
  r["radical_equal"] = to_string(radical);
  add_height(r, ideal, st.result.r(), radical);
  r["ara_lower_bound"] = "not reproduced (cohomological argument)";

  Verdict v = combine(st.verdict, radical);
  if (!ideal_ok) v = combine(v, Verdict::fails);
  r["verdict"] = to_string(v);
  return {r, exit_for(v)};
}

Outcome reproduce_example3(const JobSpec& job) {
  const GbOptions opts = gb_options(job);
  const Ring ring(numbered("x", 10));
  Json r = header(job, "reproduce");
  r["example"] = "example3";
  r["ring"] = ring.vars().names();

  const MonomialIdeal a = MonomialIdeal::parse(ring, {"x1*x4", "x2*x5", "x3*x6"});
  const MonomialIdeal b = MonomialIdeal::parse(ring, {"x1", "x7", "x8"});
  const MonomialIdeal c = MonomialIdeal::parse(ring, {"x2", "x9", "x10"});
  const MonomialIdeal ideal = intersect_all({a, b, c});
  r["ideal"] = ideal.to_strings();
  r["minimal_generator_count"] = ideal.size();

  Stage first = run_stage({ring, parse_all(ring, {"x1*x4", "x2*x5", "x3*x6"}), parse_all(ring, {"x1", "x7", "x8"}), 1}, opts);
  Stage second = run_stage({ring, first.result.gammas, parse_all(ring, {"x2", "x9", "x10"}), 1}, opts,
                           {"(x2*x5*x7+x1*x3*x6)*x2",
                            "(x2*x5*x7+x1*x3*x6)*x9+(x1*x4+x2*x5*x8+x3*x6*x7)*x2",
                            "(x2*x5*x7+x1*x3*x6)*x10+(x1*x4+x2*x5*x8+x3*x6*x7)*x9+x2*x3*x6*x8",
                            "x1*x2*x5+(x1*x4+x2*x5*x8+x3*x6*x7)*x10+x3*x6*x8*x9", "x3*x6*x8*x10"});
  r["stages"] = {first.json, second.json};
  const auto& gens = second.result.gammas;
  r["generators"] = poly_list(gens);
  const Verdict radical = radical_equal_verdict(ideal.to_ideal_gens(), IdealGens(ring, gens), opts);
  r["radical_equal"] = to_string(radical);
  r["ara_upper_bound"] = gens.size();

  const Verdict v = combine(combine(first.verdict, second.verdict), radical);
  r["verdict"] = to_string(v);
  return {r, exit_for(v)};
}

Outcome reproduce_corollary2(const JobSpec& job) {
  if (!job.t) throw InvalidInput("reproduce corollary2 needs --t");
  const std::size_t t = *job.t;
  if (t < 1 || t > job.max_t) {
    throw InvalidInput("corollary2 needs 1 <= t <= " + std::to_string(job.max_t) + " (raise --max-t to go further)");
  }
  const GbOptions opts = gb_options(job);
  const StciResult res = build_stci(t, opts);
  const Ring& ring = res.input.ring;
  Json r = header(job, "reproduce");
  r["example"] = "corollary2";
  r["t"] = t;
  r["ring"] = ring.vars().names();
  const MonomialIdeal ideal = intersect_all(chain_ideals(res.input));
  r["ideal"] = ideal.to_strings();
  r["generators"] = poly_list(res.gens);
  const Verdict radical = radical_equal_verdict(ideal.to_ideal_gens(), IdealGens(ring, res.gens), opts);
  r["radical_equal"] = to_string(radical);
  add_height(r, ideal, res.gens.size(), radical);

  const SimplicialComplex complex = stci_complex(t);
  const bool face_ok = face_ideal(complex) == ideal;
  std::vector<std::size_t> order(complex.facets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const bool shellable = check_shelling(complex, order);
  r["facets"] = subset_list(complex.facets, ring.vars());
  r["face_ideal_matches"] = face_ok;
  r["shelling_order_valid"] = shellable;

  Verdict v = radical;
  if (!face_ok || !shellable || height(ideal).height != t || res.gens.size() != t) v = combine(v, Verdict::fails);
  r["verdict"] = to_string(v);
  return {r, exit_for(v)};
}

// ---- commands ----------------------------------------------------------------

Outcome cmd_construct(const JobSpec& job) {
  const Ring ring = make_ring(job);
  if (!job.s) throw InvalidInput("command 'construct' needs field 's'");
  const TheoremInput in{ring, parse_list(ring, job, 0), parse_list(ring, job, 1), *job.s};
  Stage st = run_stage(in, gb_options(job));
  Json r = header(job, "construct");
  r["ring"] = job.ring;
  r["r"] = st.result.r();
  for (auto it = st.json.begin(); it != st.json.end(); ++it) r[it.key()] = it.value();
  r["verdict"] = to_string(st.verdict);
  return {r, exit_for(st.verdict)};
}

Outcome cmd_verify(const JobSpec& job) {
  const Ring ring = make_ring(job);
  const IdealGens a(ring, parse_list(ring, job, 0));
  const IdealGens b(ring, parse_list(ring, job, 1));
  const RadicalReport rep = radical_equal(a, b, gb_options(job));
  Json r = header(job, "verify");
  r["first"] = poly_list(a.gens());
  r["second"] = poly_list(b.gens());
  Json failures = Json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"direction", f.direction == InclusionFailure::Direction::a_in_radical_b
                                          ? "first_in_radical_of_second"
                                          : "second_in_radical_of_first"},
                        {"index", f.index + 1},
                        {"generator", print_poly(f.generator, MonomialOrder::degrevlex)}});
  }
  r["failures"] = failures;
  r["verdict"] = rep.verdict ? "true" : "false";
  return {r, rep.verdict ? kOk : kFalse};
}

Outcome cmd_intersect(const JobSpec& job) {
  const Ring ring = make_ring(job);
  if (job.ideals.empty()) throw InvalidInput("command 'intersect' needs at least one ideal");
  std::vector<MonomialIdeal> ideals;
  for (std::size_t i = 0; i < job.ideals.size(); ++i) ideals.push_back(parse_monomial_ideal(ring, job, i));
  const MonomialIdeal result = intersect_all(ideals);
  Json r = header(job, "intersect");
  r["generators"] = result.to_strings();
  r["minimal_generator_count"] = result.size();
  return {r, kOk};
}

Outcome cmd_minimal_primes(const JobSpec& job, bool with_height) {
  const Ring ring = make_ring(job);
  const MonomialIdeal ideal = parse_monomial_ideal(ring, job, 0);
  Json r = header(job, with_height ? "height" : "minimal-primes");
  r["ideal"] = ideal.to_strings();
  r["minimal_primes"] = subset_list(minimal_primes(ideal), ring.vars());
  if (with_height) {
    const HeightInfo hi = height(ideal);
    r["height"] = hi.height;
    r["pure"] = hi.pure;
  }
  return {r, kOk};
}

Outcome chain_report(const JobSpec& job, const ChainInput& in, const std::vector<Polynomial>& gens, const char* name) {
  const MonomialIdeal ideal = intersect_all(chain_ideals(in));
  Json r = header(job, name);
  r["ring"] = in.ring.vars().names();
  r["t"] = in.x.size();
  r["a"] = in.a;
  r["generators"] = poly_list(gens);
  r["intersection"] = ideal.to_strings();
  const Verdict radical = radical_equal_verdict(ideal.to_ideal_gens(), IdealGens(in.ring, gens), gb_options(job));
  r["radical_equal"] = to_string(radical);
  add_height(r, ideal, gens.size(), radical);
  r["verdict"] = to_string(radical);
  return {r, exit_for(radical)};
}

Outcome cmd_stci(const JobSpec& job) {
  if (!job.t) throw InvalidInput("command 'stci' needs field 't'");
  const StciResult res = build_stci(*job.t, gb_options(job));
  return chain_report(job, res.input, res.gens, "stci");
}

Outcome cmd_chain(const JobSpec& job) {
  if (!job.t) throw InvalidInput("command 'chain' needs field 't'");
  if (job.h && *job.h != job.a.size()) throw InvalidInput("field 'h' must equal the length of 'a'");
  const ChainInput in = make_chain_input(*job.t, job.a);
  return chain_report(job, in, build_chain(in, gb_options(job)), "chain");
}

Outcome cmd_sv_combine(const JobSpec& job) {
  const Ring ring = make_ring(job);
  std::vector<std::vector<Polynomial>> parts;
  for (std::size_t i = 0; i < job.ideals.size(); ++i) parts.push_back(parse_list(ring, job, i));
  const PartitionSystem system = job.e.empty() ? PartitionSystem(ring, parts) : PartitionSystem(ring, parts, job.e);
  const GbOptions opts = gb_options(job);
  const ValidationReport rep = validate_partition(system, opts);
  Json r = header(job, "sv-combine");
  r["single_first_part"] = rep.single_first_part;
  Json violations = Json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"part", v.part + 1}, {"first", v.first + 1}, {"second", v.second + 1}});
  }
  r["violations"] = violations;
  r["valid"] = rep.ok;
  if (!rep.ok) {
    r["verdict"] = "false";
    return {r, kFalse};
  }
  const auto q = combine_unchecked(system);
  r["combined"] = poly_list(q);
  const Verdict radical = radical_equal_verdict(system.all_elements(), IdealGens(ring, q), opts);
  r["radical_equal"] = to_string(radical);
  r["verdict"] = to_string(radical);
  return {r, exit_for(radical)};
}

}  // namespace

JobSpec parse_job(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("job document must be a JSON object");
  JobSpec job;
  if (auto c = optional_field<std::string>(doc, "command")) job.command = *c;
  if (doc.contains("ring")) {
    for (const auto& n : array_field(doc, "ring")) {
      if (!n.is_string()) throw InvalidInput("field 'ring' must contain variable names");
      job.ring.push_back(n.get<std::string>());
    }
  }
  if (doc.contains("ideals")) {
    const Json& ideals = array_field(doc, "ideals");
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!ideals[i].is_array()) throw InvalidInput("ideals[" + std::to_string(i) + "] must be an array of strings");
      std::vector<std::string> gens;
      for (const auto& g : ideals[i]) {
        if (!g.is_string()) throw InvalidInput("ideals[" + std::to_string(i) + "] must contain polynomial strings");
        gens.push_back(g.get<std::string>());
      }
      job.ideals.push_back(std::move(gens));
    }
  }
  job.s = optional_field<std::size_t>(doc, "s");
  job.t = optional_field<std::size_t>(doc, "t");
  job.h = optional_field<std::size_t>(doc, "h");
  if (auto a = optional_field<std::vector<std::size_t>>(doc, "a")) job.a = *a;
  if (auto e = optional_field<std::vector<std::vector<unsigned>>>(doc, "e")) job.e = *e;
  if (auto p = optional_field<std::uint32_t>(doc, "p")) job.field = FieldMode::mod(*p);
  if (auto ex = optional_field<std::string>(doc, "example")) job.example = *ex;
  return job;
}

Outcome reproduce(const std::string& name, const JobSpec& params) {
  if (name == "example1") return reproduce_example1(params);
  if (name == "example2") return reproduce_example2(params);
  if (name == "example3") return reproduce_example3(params);
  if (name == "corollary2") return reproduce_corollary2(params);
  throw InvalidInput("unknown example '" + name + "' (expected example1, example2, example3 or corollary2)");
}

Outcome run(const JobSpec& job) {
  const std::string& c = job.command;
  if (c == "construct") return cmd_construct(job);
  if (c == "verify") return cmd_verify(job);
  if (c == "intersect") return cmd_intersect(job);
  if (c == "minimal-primes") return cmd_minimal_primes(job, false);
  if (c == "height") return cmd_minimal_primes(job, true);
  if (c == "stci") return cmd_stci(job);
  if (c == "chain") return cmd_chain(job);
  if (c == "sv-combine") return cmd_sv_combine(job);
  if (c == "reproduce") return reproduce(job.example, job);
  throw InvalidInput("unknown command '" + c + "'");
}

Outcome run_safely(const JobSpec& job) {
  try {
    return run(job);
  } catch (const BudgetExceeded& e) {
    Json r = header(job, job.command);
    r["verdict"] = "inconclusive";
    r["error"] = e.what();
    r["hint"] = "raise --max-steps or retry with --field mod:32003";
    return {r, kBudget};
  } catch (const Error& e) {
    Json r;
    r["command"] = job.command;
    r["error"] = e.what();
    return {r, kInputError};
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"radgen: small generating sets up to radical for intersections of ideals", "radgen"};
  std::string command;
  std::string name;
  std::string input;
  std::string output;
  std::string field = "rat";
  std::uint64_t max_steps = 1'000'000;
  std::size_t t = 0;
  std::size_t max_t = 4;
  bool timing = false;
  app.add_option("command", command, "construct | verify | intersect | minimal-primes | height | stci | chain | "
                                     "sv-combine | reproduce")
      ->required();
  app.add_option("name", name, "reproduce target: example1 | example2 | example3 | corollary2");
  app.add_option("--input", input, "job file (JSON)");
  auto* field_opt = app.add_option("--field", field, "coefficient field: rat or mod:<p>");
  app.add_option("--max-steps", max_steps, "S-pair reductions allowed per Groebner basis");
  app.add_option("--output", output, "write the report here instead of stdout");
  auto* t_opt = app.add_option("--t", t, "parameter t for reproduce corollary2");
  app.add_option("--max-t", max_t, "largest t accepted by reproduce corollary2");
  app.add_flag("--timing", timing, "include wall-clock time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    err << "radgen: unknown command '" << command << "'\n" << app.help();
    return kInputError;
  }

  JobSpec job;
  try {
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw InvalidInput("cannot open input file '" + input + "'");
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(input + ": malformed JSON at byte " + std::to_string(e.byte));
      }
      job = parse_job(doc);
      if (!job.command.empty() && job.command != command) {
        throw InvalidInput("input file declares command '" + job.command + "' but '" + command + "' was requested");
      }
    } else if (command != "reproduce") {
      throw InvalidInput("command '" + command + "' needs --input <file>");
    }
    job.command = command;
    if (!name.empty()) job.example = name;
    if (command == "reproduce" && job.example.empty()) throw InvalidInput("reproduce needs a target name");
    if (field_opt->count() > 0) job.field = FieldMode::parse(field);
    job.max_steps = max_steps;
    job.max_t = max_t;
    if (t_opt->count() > 0) job.t = t;
  } catch (const Error& e) {
    err << "radgen: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome = run_safely(job);
  if (timing) {
    outcome.report["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  if (outcome.exit_code == kInputError && outcome.report.contains("error")) {
    err << "radgen: " << outcome.report["error"].get<std::string>() << "\n";
  }
  const std::string text = outcome.report.dump(2) + "\n";
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) {
      err << "radgen: cannot write '" << output << "'\n";
      return kInputError;
    }
    file << text;
  } else {
    out << text;
  }
  return outcome.exit_code;
}

}  // namespace radgen::cli
