#include "acq/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "acq/errors.hpp"

namespace acq {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  // Residues stay below 2^32, so the product fits.
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^32");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "prime " + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw DivisionByZero();
  r_ = mul_mod(reduce(value.get_num(), p), pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw DivisionByZero();
  value.canonicalize();
  return Scalar(field, value);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("cannot combine scalars over " + field_.to_string() + " and " +
                        other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ += other.q_;
  } else {
    r_ = (r_ + other.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ -= other.q_;
  } else {
    r_ = (r_ + field_.characteristic() - other.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ *= other.q_;
  } else {
    r_ = mul_mod(r_, other.r_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (field_.is_rational()) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ += tmp;
  } else {
    r_ = (r_ + mul_mod(a.r_, b.r_, field_.characteristic())) % field_.characteristic();
  }
}

bool Scalar::operator==(const Scalar& other) const {
  if (!(field_ == other.field_)) return false;
  return field_.is_rational() ? q_ == other.q_ : r_ == other.r_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar neg(const Scalar& a) { return -a; }
Scalar inv(const Scalar& a) { return a.inverse(); }

}  // namespace acq
