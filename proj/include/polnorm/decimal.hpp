#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace polnorm {

// Exact decimal number: value = mantissa * 10^exponent, with an arbitrary
// precision mantissa. Comparisons are exact decimal order; no rounding
// happens anywhere. The set of decimals is closed under the operations
// provided here (+, -, halving), which is all the library needs.
//
// Canonical form: mantissa not divisible by 10 (zero is mantissa 0,
// exponent 0). str() renders plain positional notation, which doubles as
// the canonical serialisation.
class Decimal {
 public:
  using Int = boost::multiprecision::cpp_int;

  Decimal() : mant_(0), exp_(0) {}

  static Decimal from_int(long long v);
  // Accepts the JSON number grammar: [-]digits[.digits][(e|E)[+-]digits].
  // A leading '+' is also tolerated. Throws ParseError on anything else or
  // when the resulting decimal exponent leaves [-kMaxExponent, kMaxExponent].
  static Decimal parse(std::string_view text);

  // Total order; returns <0, 0, >0.
  int cmp(const Decimal& other) const;

  Decimal operator+(const Decimal& other) const;
  Decimal operator-(const Decimal& other) const;
  Decimal operator-() const;

  // Exact midpoint (a+b)/2; always a decimal since halving multiplies the
  // mantissa by 5 when it is odd.
  static Decimal midpoint(const Decimal& a, const Decimal& b);

  bool is_zero() const { return mant_ == 0; }

  std::string str() const;

  bool operator==(const Decimal& o) const { return cmp(o) == 0; }
  bool operator!=(const Decimal& o) const { return cmp(o) != 0; }
  bool operator<(const Decimal& o) const { return cmp(o) < 0; }
  bool operator<=(const Decimal& o) const { return cmp(o) <= 0; }
  bool operator>(const Decimal& o) const { return cmp(o) > 0; }
  bool operator>=(const Decimal& o) const { return cmp(o) >= 0; }

  // Keeps positional rendering bounded; 10^9999 is far beyond any sane
  // policy constant.
  static constexpr std::int64_t kMaxExponent = 9999;

 private:
  Decimal(Int mant, std::int64_t exp) : mant_(std::move(mant)), exp_(exp) { normalize(); }

  void normalize();

  Int mant_;
  std::int64_t exp_;
};

}  // namespace polnorm
