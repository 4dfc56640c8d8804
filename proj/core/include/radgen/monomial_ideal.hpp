#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radgen/groebner.hpp"
#include "radgen/polyring.hpp"

namespace radgen {

// Variable indices, strictly increasing.
using VarSubset = std::vector<std::size_t>;

// Ideal generated by monomials, stored minimalized (no generator divides
// another) and sorted descending by exponent vector. No generators means the
// zero ideal; the generator 1 means the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  // Ideal generated by the given variables.
  static MonomialIdeal prime(const Ring& ring, const VarSubset& vars);
  // Every generator must be a single term; coefficients are ignored.
  static MonomialIdeal from_polynomials(const IdealGens& gens);
  static MonomialIdeal parse(const Ring& ring, const std::vector<std::string>& texts);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;

  IdealGens to_ideal_gens() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

// Divisibility-minimal subset, sorted descending by exponent vector.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals);
MonomialIdeal radical_monomial(const MonomialIdeal& ideal);

// Minimal primes of a squarefree monomial ideal, i.e. the minimal vertex
// covers of the generators' supports, each given by its variables. Sorted
// by size, then lexicographically.
std::vector<VarSubset> minimal_primes(const MonomialIdeal& ideal);

struct HeightInfo {
  std::size_t height = 0;
  bool pure = false;  // every minimal prime has the same size
};
HeightInfo height(const MonomialIdeal& ideal);

struct SimplicialComplex {
  Ring vertices;
  std::vector<VarSubset> facets;  // no facet contains another
};

SimplicialComplex make_complex(const Ring& vertices, std::vector<VarSubset> facets);
// Stanley-Reisner ideal: products of the minimal non-faces.
MonomialIdeal face_ideal(const SimplicialComplex& complex);
// Complex whose face ideal is the given squarefree ideal; the facets are the
// complements of its minimal primes.
SimplicialComplex complex_of(const MonomialIdeal& ideal);
// For each facet after the first, every maximal face of its intersection
// with the union of the earlier facets has one vertex fewer than the facet.
// `order` lists facet indices; the complex must be pure.
bool check_shelling(const SimplicialComplex& complex, const std::vector<std::size_t>& order);

std::string format_subset(const VarSubset& s, const VarSet& vars);

}  // namespace radgen
