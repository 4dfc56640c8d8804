#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace radgen {

// Exponent vector over a fixed variable list. The zero vector is the unit
// monomial. Products detect exponent overflow.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);
  // Squarefree monomial with the given variables set to 1.
  static Monomial from_support(std::size_t num_vars, std::span<const std::size_t> vars);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_squarefree() const;
  Monomial squarefree_part() const;
  std::vector<std::size_t> support() const;
  // Support of this monomial contains the support of `other`.
  bool support_contains(const Monomial& other) const;

  // Same exponents with `extra` zero exponents appended.
  Monomial extended(std::size_t extra) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  // a / b; requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b);
  Monomial pow(Exponent e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Plain lexicographic comparison of exponent vectors; used for storage
  // order, not as a term order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

enum class MonomialOrder { lex, degrevlex };

// Three-way comparison of two monomials in the given term order.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < ea.size(); ++i) {
      if (ea[i] != eb[i]) return ea[i] <=> eb[i];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace radgen
