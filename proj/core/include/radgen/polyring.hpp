#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radgen/coefficient.hpp"
#include "radgen/errors.hpp"
#include "radgen/monomial.hpp"

namespace radgen {

// Ordered list of distinct variable names. Declaration order is the index
// order used by every monomial order.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

// A polynomial ring over the variables of a VarSet with a fixed term order.
// Cheap to copy; the variable list is shared.
class Ring {
 public:
  Ring() : Ring(VarSet{}) {}
  explicit Ring(VarSet vars, MonomialOrder order = MonomialOrder::degrevlex);
  explicit Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex)
      : Ring(VarSet(std::move(names)), order) {}

  const VarSet& vars() const { return *vars_; }
  std::size_t num_vars() const { return vars_->size(); }
  MonomialOrder order() const { return order_; }

  Ring with_order(MonomialOrder order) const;
  // Same variables plus `name` appended last.
  Ring extended(const std::string& name) const;
  // A variable name not yet used in this ring, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  Monomial one() const { return Monomial(num_vars()); }
  Monomial var(std::size_t i) const { return Monomial::variable(num_vars(), i); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.order_ == b.order_ && (a.vars_ == b.vars_ || *a.vars_ == *b.vars_);
  }

 private:
  std::shared_ptr<const VarSet> vars_;
  MonomialOrder order_;
};

void require_same_ring(const Ring& a, const Ring& b, std::string_view context);

template <FieldElement K>
struct Term {
  K coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial: terms strictly descending in the ring's order, no zero
// coefficients, no repeated monomials. The empty term list is zero, so two
// polynomials are equal iff their term lists are equal.
template <FieldElement K>
class BasicPolynomial {
 public:
  using Coeff = K;

  BasicPolynomial() = default;
  explicit BasicPolynomial(Ring ring) : ring_(std::move(ring)) {}

  // Sorts, merges duplicate monomials and drops zeros.
  static BasicPolynomial from_terms(Ring ring, std::vector<Term<K>> terms);
  static BasicPolynomial constant(Ring ring, K c) {
    std::vector<Term<K>> t;
    t.push_back({std::move(c), ring.one()});
    return from_terms(std::move(ring), std::move(t));
  }
  static BasicPolynomial term(Ring ring, K c, Monomial m) {
    std::vector<Term<K>> t;
    t.push_back({std::move(c), std::move(m)});
    return from_terms(std::move(ring), std::move(t));
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term<K>& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const K& leading_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;

  BasicPolynomial monic() const;
  BasicPolynomial scaled(const K& c, const Monomial& m) const;
  BasicPolynomial pow(unsigned e) const;
  // Re-sorts the terms under another order of the same variables.
  BasicPolynomial with_order(MonomialOrder order) const;
  // Embeds into a ring that appends variables after the existing ones.
  BasicPolynomial embedded(const Ring& larger) const;

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial addition");
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    return a.add_scaled(K::one_like(sample_coeff(a, b)), Monomial(a.ring_.num_vars()), b);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial subtraction");
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return a.add_scaled(-K::one_like(sample_coeff(a, b)), Monomial(a.ring_.num_vars()), b);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a) {
    BasicPolynomial out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
    BasicPolynomial out(a.ring_);
    for (const auto& t : a.terms_) out = out.add_scaled(t.coeff, t.mono, b);
    return out;
  }
  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = *this + b; }
  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // this + c*m*other, merged in one pass. The workhorse of reduction.
  BasicPolynomial add_scaled(const K& c, const Monomial& m, const BasicPolynomial& other) const;
  // Drops the leading term.
  BasicPolynomial tail() const {
    BasicPolynomial out(ring_);
    out.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
    return out;
  }

 private:
  static const K& sample_coeff(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.terms_.empty() ? b.terms_.front().coeff : a.terms_.front().coeff;
  }

  Ring ring_;
  std::vector<Term<K>> terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using PolynomialModP = BasicPolynomial<ModP>;

// Rational-coefficient conveniences.
Polynomial make_constant(const Ring& ring, long c);
Polynomial make_variable(const Ring& ring, std::size_t index);
Polynomial make_monomial(const Ring& ring, const Monomial& m);

PolynomialModP to_mod_p(const Polynomial& f, std::uint32_t p);

// Parses `poly := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
// `factor := integer ['/' integer] | var ['^' integer] | '(' poly ')'`, with
// an optional leading sign on each poly. Errors carry the byte offset.
Polynomial parse_poly(std::string_view text, const Ring& ring);

// Canonical text: terms descending in `order`, coefficients "n" or "n/d",
// unit coefficients elided, "0" for the zero polynomial.
template <FieldElement K>
std::string print_poly(const BasicPolynomial<K>& p, MonomialOrder order);
template <FieldElement K>
std::string print_poly(const BasicPolynomial<K>& p) {
  return print_poly(p, p.ring().order());
}

std::string print_monomial(const Monomial& m, const VarSet& vars);

// ---------------------------------------------------------------------------

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::from_terms(Ring ring, std::vector<Term<K>> terms) {
  const MonomialOrder order = ring.order();
  for (const auto& t : terms) {
    if (t.mono.num_vars() != ring.num_vars()) throw RingMismatch("monomial arity does not match ring");
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term<K>& a, const Term<K>& b) { return compare(a.mono, b.mono, order) > 0; });
  BasicPolynomial out(std::move(ring));
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

template <FieldElement K>
std::uint64_t BasicPolynomial<K>::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  const K inv = terms_.front().coeff.inverse();
  BasicPolynomial out = *this;
  for (auto& t : out.terms_) t.coeff = t.coeff * inv;
  return out;
}

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::scaled(const K& c, const Monomial& m) const {
  BasicPolynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono * m});
  return out;
}

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::pow(unsigned e) const {
  if (terms_.empty()) {
    if (e == 0) throw ArithmeticError("zero polynomial raised to the power 0");
    return *this;
  }
  BasicPolynomial result = constant(ring_, K::one_like(terms_.front().coeff));
  BasicPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::with_order(MonomialOrder order) const {
  if (order == ring_.order()) return *this;
  return from_terms(ring_.with_order(order), terms_);
}

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::embedded(const Ring& larger) const {
  const auto& small = ring_.vars().names();
  const auto& big = larger.vars().names();
  if (big.size() < small.size() || !std::equal(small.begin(), small.end(), big.begin())) {
    throw RingMismatch("target ring does not extend the source ring");
  }
  std::vector<Term<K>> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.coeff, term.mono.extended(big.size() - small.size())});
  return from_terms(larger, std::move(t));
}

template <FieldElement K>
BasicPolynomial<K> BasicPolynomial<K>::add_scaled(const K& c, const Monomial& m,
                                                  const BasicPolynomial& other) const {
  if (c.is_zero() || other.terms_.empty()) return *this;
  const MonomialOrder order = ring_.order();
  BasicPolynomial out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  // The term order is multiplicative, so c*m*other stays sorted.
  Monomial scaled_mono;
  bool have_scaled = false;
  while (it != terms_.end() || jt != other.terms_.end()) {
    if (jt != other.terms_.end() && !have_scaled) {
      scaled_mono = jt->mono * m;
      have_scaled = true;
    }
    if (jt == other.terms_.end()) {
      out.terms_.push_back(*it++);
      continue;
    }
    if (it == terms_.end()) {
      out.terms_.push_back({jt->coeff * c, std::move(scaled_mono)});
      ++jt;
      have_scaled = false;
      continue;
    }
    const auto cmp = compare(it->mono, scaled_mono, order);
    if (cmp > 0) {
      out.terms_.push_back(*it++);
    } else if (cmp < 0) {
      out.terms_.push_back({jt->coeff * c, std::move(scaled_mono)});
      ++jt;
      have_scaled = false;
    } else {
      K sum = it->coeff + jt->coeff * c;
      if (!sum.is_zero()) out.terms_.push_back({std::move(sum), it->mono});
      ++it;
      ++jt;
      have_scaled = false;
    }
  }
  return out;
}

template <FieldElement K>
std::string print_poly(const BasicPolynomial<K>& p, MonomialOrder order) {
  if (p.is_zero()) return "0";
  const BasicPolynomial<K> q = p.with_order(order);
  const VarSet& vars = q.ring().vars();
  std::string out;
  bool first = true;
  for (const auto& t : q.terms()) {
    bool negative = false;
    K mag = t.coeff;
    if constexpr (requires { t.coeff.sign(); }) {
      if (t.coeff.sign() < 0) {
        negative = true;
        mag = -t.coeff;
      }
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += print_monomial(t.mono, vars);
    } else {
      out += mag.to_string() + "*" + print_monomial(t.mono, vars);
    }
  }
  return out;
}

}  // namespace radgen
