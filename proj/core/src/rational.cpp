#include "lendens/rational.hpp"

#include <cctype>

#include "lendens/error.hpp"

namespace lendens {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw Error(ErrorCode::kParseError, "empty integer in '" + std::string(whole) + "'");
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    throw Error(ErrorCode::kParseError, "bad integer in '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::kParseError, "bad integer in '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text.front() == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  if (denominator < 0) {
    value_ = mp::cpp_rational(BigInt(-numerator), BigInt(-denominator));
  } else {
    value_ = mp::cpp_rational(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") {
      int_part = "0";
    }
    BigInt whole = parse_integer(int_part, text);
    if (whole < 0) whole = -whole;
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    if (frac < 0 || (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+'))) {
      throw Error(ErrorCode::kParseError, "bad decimal '" + std::string(text) + "'");
    }
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    Rational r(whole * scale + frac, scale);
    return negative ? -r : r;
  }
  return Rational(parse_integer(text, text), BigInt(1));
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

BigInt Rational::floor() const {
  BigInt n = numerator();
  BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt f = floor();
  return f * denominator() == numerator() ? f : BigInt(f + 1);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_string() const {
  return is_integer() ? numerator().str() : to_fraction_string();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational mediant(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Rational(a + c, b + d);
}

}  // namespace lendens
