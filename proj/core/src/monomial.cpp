#include "radgen/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "radgen/errors.hpp"

namespace radgen {

namespace {

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  if (a > std::numeric_limits<Monomial::Exponent>::max() - b) {
    throw ArithmeticError("monomial exponent overflow");
  }
  return a + b;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  std::vector<Exponent> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::from_support(std::size_t num_vars, std::span<const std::size_t> vars) {
  std::vector<Exponent> e(num_vars, 0);
  for (std::size_t v : vars) e.at(v) = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Monomial Monomial::squarefree_part() const {
  std::vector<Exponent> e(exps_.size());
  std::transform(exps_.begin(), exps_.end(), e.begin(), [](Exponent x) { return x > 0 ? 1u : 0u; });
  return Monomial(std::move(e));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

bool Monomial::support_contains(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] != 0 && exps_[i] == 0) return false;
  }
  return true;
}

Monomial Monomial::extended(std::size_t extra) const {
  std::vector<Exponent> e = exps_;
  e.resize(exps_.size() + extra, 0);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw ArithmeticError("monomial quotient is not exact");
    out.exps_[i] = a.exps_[i] - b.exps_[i];
  }
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial Monomial::pow(Exponent e) const {
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t x = std::uint64_t{exps_[i]} * e;
    if (x > std::numeric_limits<Exponent>::max()) throw ArithmeticError("monomial exponent overflow");
    out[i] = static_cast<Exponent>(x);
  }
  return Monomial(std::move(out));
}

}  // namespace radgen
