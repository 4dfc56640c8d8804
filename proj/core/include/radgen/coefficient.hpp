#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "radgen/errors.hpp"

namespace radgen {

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  // Parses a decimal integer or "n/d".
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  const mpq_class& value() const { return value_; }

  Rational inverse() const;
  std::string to_string() const { return value_.get_str(); }

  static Rational one_like(const Rational&) { return Rational(1); }
  static Rational from_int_like(const Rational&, long n) { return Rational(n); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
  Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
  Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
  Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_;
};

// Residue modulo a word-sized prime. Each element carries its modulus so
// arithmetic needs no ambient context.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t n, std::uint32_t p);

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  ModP inverse() const;
  std::string to_string() const { return std::to_string(value_); }

  static ModP one_like(const ModP& x) { return ModP(1, x.modulus_); }
  static ModP from_int_like(const ModP& x, long n) { return ModP(n, x.modulus_); }

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  friend ModP operator-(const ModP& a);
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// Reduces a rational into Z/p; throws ArithmeticError if p divides the denominator.
ModP reduce_mod(const Rational& q, std::uint32_t p);

inline constexpr std::uint32_t kDefaultPrime = 32003;

template <class K>
concept FieldElement = requires(const K a, const K b, long n) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<K>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { K::one_like(a) } -> std::same_as<K>;
  { K::from_int_like(a, n) } -> std::same_as<K>;
};

}  // namespace radgen
