#include "radgen/coefficient.hpp"

#include <limits>

namespace radgen {

Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (text.empty() || v.set_str(std::string(text), 10) != 0) {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(v));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return Rational(mpq_class(1 / value_));
}

ModP::ModP(std::int64_t n, std::uint32_t p) : modulus_(p) {
  if (p < 2) throw ArithmeticError("modulus must be at least 2");
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

ModP ModP::inverse() const {
  if (value_ == 0) throw ArithmeticError("division by zero mod " + std::to_string(modulus_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus_, new_r = value_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ArithmeticError("non-invertible residue; modulus is not prime");
  return ModP(t, modulus_);
}

ModP operator+(const ModP& a, const ModP& b) {
  ModP out;
  out.modulus_ = a.modulus_;
  std::uint64_t s = std::uint64_t{a.value_} + b.value_;
  out.value_ = static_cast<std::uint32_t>(s >= a.modulus_ ? s - a.modulus_ : s);
  return out;
}

ModP operator-(const ModP& a, const ModP& b) {
  ModP out;
  out.modulus_ = a.modulus_;
  out.value_ = a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.modulus_ - b.value_);
  return out;
}

ModP operator*(const ModP& a, const ModP& b) {
  ModP out;
  out.modulus_ = a.modulus_;
  out.value_ = static_cast<std::uint32_t>((std::uint64_t{a.value_} * b.value_) % a.modulus_);
  return out;
}

ModP operator-(const ModP& a) {
  ModP out;
  out.modulus_ = a.modulus_;
  out.value_ = a.value_ == 0 ? 0 : a.modulus_ - a.value_;
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModP reduce_mod(const Rational& q, std::uint32_t p) {
  mpz_class num = q.value().get_num() % p;
  mpz_class den = q.value().get_den() % p;
  if (den == 0) {
    throw ArithmeticError("denominator of " + q.to_string() + " vanishes mod " + std::to_string(p));
  }
  return ModP(num.get_si(), p) / ModP(den.get_si(), p);
}

}  // namespace radgen
