#include "radgen/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace radgen {

namespace {

using Mask = std::uint64_t;

void require_mask_width(const Ring& ring) {
  if (ring.num_vars() > 64) throw InvalidInput("squarefree combinatorics supports at most 64 variables");
}

Mask mask_of(const Monomial& m) {
  Mask out = 0;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] != 0) out |= Mask{1} << i;
  }
  return out;
}

Mask mask_of(const VarSubset& s) {
  Mask out = 0;
  for (std::size_t v : s) out |= Mask{1} << v;
  return out;
}

VarSubset subset_of(Mask m) {
  VarSubset out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

bool subset_less(const VarSubset& a, const VarSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Every chosen vertex must still be the only chosen vertex on some edge;
// once a vertex loses its last private edge it never regains one.
bool all_private(const std::vector<Mask>& edges, Mask cover) {
  for (Mask rest = cover; rest != 0; rest &= rest - 1) {
    const Mask v = rest & (~rest + 1);
    const bool has_private = std::any_of(edges.begin(), edges.end(), [&](Mask e) { return (e & cover) == v; });
    if (!has_private) return false;
  }
  return true;
}

// Branch on the first uncovered edge: the j-th branch takes its j-th vertex
// and forbids the earlier ones, so each minimal cover is reached once.
void cover_search(const std::vector<Mask>& edges, Mask cover, Mask forbidden, std::vector<Mask>& found) {
  auto open = std::find_if(edges.begin(), edges.end(), [cover](Mask e) { return (e & cover) == 0; });
  if (open == edges.end()) {
    found.push_back(cover);
    return;
  }
  for (Mask rest = *open & ~forbidden; rest != 0; rest &= rest - 1) {
    const Mask v = rest & (~rest + 1);
    if (all_private(edges, cover | v)) cover_search(edges, cover | v, forbidden, found);
    forbidden |= v;
  }
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens) {
    if (g.num_vars() != ring_.num_vars()) throw RingMismatch("monomial arity does not match ring");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::prime(const Ring& ring, const VarSubset& vars) {
  std::vector<Monomial> gens;
  for (std::size_t v : vars) {
    if (v >= ring.num_vars()) throw InvalidInput("variable index out of range");
    gens.push_back(ring.var(v));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_polynomials(const IdealGens& gens) {
  std::vector<Monomial> monos;
  for (const auto& g : gens.gens()) {
    if (!g.is_monomial()) throw InvalidInput("generator " + print_poly(g) + " is not a monomial");
    monos.push_back(g.leading_monomial());
  }
  return MonomialIdeal(gens.ring(), std::move(monos));
}

MonomialIdeal MonomialIdeal::parse(const Ring& ring, const std::vector<std::string>& texts) {
  return from_polynomials(IdealGens::parse(ring, texts));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

IdealGens MonomialIdeal::to_ideal_gens() const {
  std::vector<Polynomial> polys;
  polys.reserve(gens_.size());
  for (const auto& g : gens_) polys.push_back(make_monomial(ring_, g));
  return IdealGens(ring_, std::move(polys));
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(print_monomial(g, ring_.vars()));
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "monomial intersection");
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) lcms.push_back(lcm(f, g));
  }
  return MonomialIdeal(a.ring(), std::move(lcms));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw InvalidInput("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal radical_monomial(const MonomialIdeal& ideal) {
  std::vector<Monomial> parts;
  parts.reserve(ideal.size());
  for (const auto& g : ideal.gens()) parts.push_back(g.squarefree_part());
  return MonomialIdeal(ideal.ring(), std::move(parts));
}

std::vector<VarSubset> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InvalidInput("minimal_primes needs a squarefree monomial ideal");
  require_mask_width(ideal.ring());
  if (ideal.is_unit()) return {};
  std::vector<Mask> edges;
  for (const auto& g : ideal.gens()) edges.push_back(mask_of(g));
  // Small edges first keeps the branching factor low.
  std::sort(edges.begin(), edges.end(), [](Mask a, Mask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::vector<Mask> found;
  cover_search(edges, 0, 0, found);
  std::vector<VarSubset> out;
  for (Mask c : found) out.push_back(subset_of(c));
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

HeightInfo height(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidInput("height of the zero ideal is not defined here");
  if (ideal.is_unit()) throw InvalidInput("the unit ideal has no minimal primes");
  const auto primes = minimal_primes(ideal);
  HeightInfo info;
  info.height = primes.front().size();
  info.pure = std::all_of(primes.begin(), primes.end(), [&](const VarSubset& p) { return p.size() == info.height; });
  return info;
}

SimplicialComplex make_complex(const Ring& vertices, std::vector<VarSubset> facets) {
  require_mask_width(vertices);
  if (facets.empty()) throw InvalidInput("a simplicial complex needs at least one facet");
  std::vector<Mask> masks;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidInput("repeated vertex in facet");
    for (std::size_t v : f) {
      if (v >= vertices.num_vars()) throw InvalidInput("facet vertex out of range");
    }
    masks.push_back(mask_of(f));
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i != j && (masks[i] & masks[j]) == masks[i]) {
        throw InvalidInput("facet " + format_subset(facets[i], vertices.vars()) + " is contained in another facet");
      }
    }
  }
  return SimplicialComplex{vertices, std::move(facets)};
}

MonomialIdeal face_ideal(const SimplicialComplex& complex) {
  const Ring& ring = complex.vertices;
  require_mask_width(ring);
  if (complex.facets.empty()) throw InvalidInput("a simplicial complex needs at least one facet");
  std::vector<Mask> facets;
  std::size_t max_size = 0;
  for (const auto& f : complex.facets) {
    facets.push_back(mask_of(f));
    max_size = std::max(max_size, f.size());
  }
  auto is_face = [&](Mask s) {
    return std::any_of(facets.begin(), facets.end(), [s](Mask f) { return (s & f) == s; });
  };
  const std::size_t n = ring.num_vars();
  std::vector<Monomial> gens;
  // Minimal non-faces have at most max_size + 1 vertices. Walk subsets by
  // size; a non-face is minimal iff dropping any vertex yields a face.
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= std::min(n, max_size + 1); ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      Mask s = 0;
      for (std::size_t v : pick) s |= Mask{1} << v;
      if (!is_face(s)) {
        bool minimal = true;
        for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
          minimal = is_face(s & ~(rest & (~rest + 1)));
        }
        if (minimal) gens.push_back(Monomial::from_support(n, pick));
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidInput("the unit ideal is not the face ideal of any complex");
  const std::size_t n = ideal.ring().num_vars();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<VarSubset> facets;
  for (const auto& p : minimal_primes(ideal)) facets.push_back(subset_of(all & ~mask_of(p)));
  std::sort(facets.begin(), facets.end(), subset_less);
  return make_complex(ideal.ring(), std::move(facets));
}

bool check_shelling(const SimplicialComplex& complex, const std::vector<std::size_t>& order) {
  const std::size_t count = complex.facets.size();
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool permutation = sorted.size() == count;
  for (std::size_t i = 0; permutation && i < sorted.size(); ++i) permutation = sorted[i] == i;
  if (!permutation || count == 0) throw InvalidInput("shelling order is not a permutation of the facets");
  const std::size_t dim = complex.facets.front().size();
  for (const auto& f : complex.facets) {
    if (f.size() != dim) throw InvalidInput("shelling check needs a pure complex");
  }
  std::vector<Mask> facets;
  for (std::size_t idx : order) facets.push_back(mask_of(complex.facets[idx]));
  for (std::size_t i = 1; i < facets.size(); ++i) {
    std::vector<Mask> meets;
    for (std::size_t j = 0; j < i; ++j) meets.push_back(facets[i] & facets[j]);
    for (Mask m : meets) {
      const bool maximal = std::none_of(meets.begin(), meets.end(), [m](Mask o) { return o != m && (m & o) == m; });
      if (maximal && static_cast<std::size_t>(std::popcount(m)) + 1 != dim) return false;
    }
  }
  return true;
}

std::string format_subset(const VarSubset& s, const VarSet& vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += vars.name(s[i]);
  }
  return out + "}";
}

}  // namespace radgen
