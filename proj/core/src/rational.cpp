#include "chacon/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace chacon {

mpz_class integer_power(unsigned long base, unsigned long exp) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
  return result;
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational denominator must be nonzero");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw std::invalid_argument("rational division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::string Rational::to_fraction_string() const {
  std::string text = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    text += "/" + value_.get_den().get_str();
  }
  return text;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_fraction_string();
}

Rational abs(const Rational& r) {
  return r < Rational(0) ? -r : r;
}

std::string to_decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("digit count must be nonnegative");
  mpz_class num = value.numerator();
  const mpz_class den = value.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  mpz_class integral = num / den;
  const mpz_class scale = integer_power(10, static_cast<unsigned long>(digits));
  const mpz_class scaled = (num % den) * scale;
  mpz_class frac = scaled / den;
  const mpz_class twice_rem = 2 * (scaled % den);

  const int tie = cmp(twice_rem, den);
  if (tie > 0 || (tie == 0 && mpz_odd_p(frac.get_mpz_t()) != 0)) {
    ++frac;
    if (frac == scale) {  // carry into the integer part
      frac = 0;
      ++integral;
    }
  }

  std::string out = integral.get_str();
  if (digits > 0) {
    std::string frac_str = frac.get_str();
    frac_str.insert(0, static_cast<size_t>(digits) - frac_str.size(), '0');
    out += "." + frac_str;
  }
  if (negative && (integral != 0 || frac != 0)) out.insert(0, "-");
  return out;
}

}  // namespace chacon
