#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace acq {

// Either the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  Field() = default;
  static Field rational() { return Field(); }
  // Throws std::invalid_argument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  // Accepts "k" or "p/q" with optional leading '-'.
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // Only meaningful over the rationals / over a prime field respectively.
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  // this += a * b without a temporary Scalar.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& other) const;

  // "p/q" (or "k" for integers) over Q, "k mod p" over F_p.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);

}  // namespace acq
