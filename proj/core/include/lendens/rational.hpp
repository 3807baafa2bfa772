#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lendens {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic
  Rational(const BigInt& numerator, const BigInt& denominator);
  Rational(std::int64_t numerator, std::int64_t denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  /// Accepts "p", "p/q", or a decimal such as "0.125".
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Smallest integer >= this value.
  BigInt ceil() const;
  BigInt floor() const;
  double to_double() const;

  /// Always "p/q" (denominator printed even when 1).
  std::string to_fraction_string() const;
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_;
};

/// (a+c)/(b+d) for a/b and c/d given as (numerator, denominator) pairs.
Rational mediant(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

}  // namespace lendens
