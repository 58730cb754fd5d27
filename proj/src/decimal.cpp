#include "polnorm/decimal.hpp"

#include <algorithm>
#include <cctype>

#include "polnorm/errors.hpp"

namespace polnorm {

namespace {

Decimal::Int pow10(std::int64_t n) {
  Decimal::Int r = 1;
  Decimal::Int base = 10;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

}  // namespace

void Decimal::normalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  while (mant_ % 10 == 0) {
    mant_ /= 10;
    ++exp_;
  }
}

Decimal Decimal::from_int(long long v) { return Decimal(Int(v), 0); }

Decimal Decimal::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& why) -> Decimal {
    throw ParseError("invalid number '" + std::string(text) + "': " + why);
  };

  bool negative = false;
  if (i < n && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }

  std::string digits;
  std::size_t int_digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i]);
    ++i;
    ++int_digits;
  }
  if (int_digits == 0) return fail("missing integer part");

  std::size_t frac_digits = 0;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i]);
      ++i;
      ++frac_digits;
    }
    if (frac_digits == 0) return fail("missing fraction digits");
  }

  std::int64_t sci_exp = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      return fail("missing exponent digits");
    }
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      sci_exp = sci_exp * 10 + (text[i] - '0');
      ++i;
      if (sci_exp > 10 * kMaxExponent) return fail("exponent out of range");
    }
    if (exp_neg) sci_exp = -sci_exp;
  }
  if (i != n) return fail("trailing characters");

  std::int64_t exp = sci_exp - static_cast<std::int64_t>(frac_digits);
  if (exp > kMaxExponent || exp < -kMaxExponent) return fail("exponent out of range");

  Int mant(digits);
  if (negative) mant = -mant;
  return Decimal(std::move(mant), exp);
}

int Decimal::cmp(const Decimal& other) const {
  const int sa = mant_ == 0 ? 0 : (mant_ < 0 ? -1 : 1);
  const int sb = other.mant_ == 0 ? 0 : (other.mant_ < 0 ? -1 : 1);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  const std::int64_t e = std::min(exp_, other.exp_);
  const Int a = mant_ * pow10(exp_ - e);
  const Int b = other.mant_ * pow10(other.exp_ - e);
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

Decimal Decimal::operator+(const Decimal& other) const {
  const std::int64_t e = std::min(exp_, other.exp_);
  Int m = mant_ * pow10(exp_ - e) + other.mant_ * pow10(other.exp_ - e);
  return Decimal(std::move(m), e);
}

Decimal Decimal::operator-() const {
  Decimal r = *this;
  r.mant_ = -r.mant_;
  return r;
}

Decimal Decimal::operator-(const Decimal& other) const { return *this + (-other); }

Decimal Decimal::midpoint(const Decimal& a, const Decimal& b) {
  Decimal sum = a + b;
  if (sum.mant_ % 2 == 0) {
    sum.mant_ /= 2;
  } else {
    sum.mant_ *= 5;
    sum.exp_ -= 1;
  }
  sum.normalize();
  return sum;
}

std::string Decimal::str() const {
  if (mant_ == 0) return "0";
  const bool neg = mant_ < 0;
  const Int magnitude = neg ? Int(-mant_) : mant_;
  std::string digits = magnitude.str();
  std::string out;
  if (exp_ >= 0) {
    out = digits + std::string(static_cast<std::size_t>(exp_), '0');
  } else {
    const std::size_t frac = static_cast<std::size_t>(-exp_);
    if (digits.size() > frac) {
      out = digits.substr(0, digits.size() - frac) + "." + digits.substr(digits.size() - frac);
    } else {
      out = "0." + std::string(frac - digits.size(), '0') + digits;
    }
  }
  return neg ? "-" + out : out;
}

}  // namespace polnorm
