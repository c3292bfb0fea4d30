#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace chacon {

// base^exp as an arbitrary-precision integer.
mpz_class integer_power(unsigned long base, unsigned long exp);

// Exact rational number. Always canonical: lowest terms, positive
// denominator. All arithmetic and comparisons are exact; there is no
// conversion to floating point anywhere in the library.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long value) : value_(value) {}  // NOLINT: integers embed
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_fraction_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) >= 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;  // kept canonical
};

Rational abs(const Rational& r);

// Fixed-point decimal rendering with `digits` fractional digits,
// round-half-even at the last digit.
std::string to_decimal_string(const Rational& value, int digits);

}  // namespace chacon
