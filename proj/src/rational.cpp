#include "gp/rational.hpp"

#include <cctype>
#include <limits>

#include "gp/errors.hpp"

namespace gp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string digits128(__int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

constexpr __int128 kMax64 = std::numeric_limits<long long>::max();

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
  if (den == 0) throw ValidationError("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax64 || num < -kMax64 || den > kMax64)
    throw OverflowError("rational: value does not fit in 64 bits");
  Rational r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational::Rational(long long num, long long den) { *this = make(num, den); }

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("rational: empty string");
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '-') {
    neg = true;
    ++pos;
  }
  auto read_digits = [&](long long& out) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("rational: expected digits in '" + std::string(text) + "'");
    __int128 v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > kMax64) throw OverflowError("rational: literal too large");
      ++pos;
    }
    out = static_cast<long long>(v);
  };
  long long num = 0;
  long long den = 1;
  read_digits(num);
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("rational: bad character in '" + std::string(text) + "'");
    ++pos;
    read_digits(den);
    if (pos != text.size()) throw ParseError("rational: trailing characters in '" + std::string(text) + "'");
  }
  return make(neg ? -static_cast<__int128>(num) : num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<std::string> Rational::decimal() const {
  long long d = den_;
  uint32_t twos = 0;
  uint32_t fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::nullopt;
  const uint32_t k = twos > fives ? twos : fives;
  __int128 scaled = num_ < 0 ? -static_cast<__int128>(num_) : num_;
  for (uint32_t i = fives; i < k; ++i) scaled *= 5;
  for (uint32_t i = twos; i < k; ++i) scaled *= 2;
  std::string digits = digits128(scaled);
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  std::string out;
  if (num_ < 0) out += '-';
  out += digits.substr(0, digits.size() - k);
  if (k > 0) {
    out += '.';
    out += digits.substr(digits.size() - k);
  }
  return out;
}

bool Rational::less_than_inv_pow2(uint32_t k) const {
  if (num_ <= 0) return true;
  // num * 2^k < den; den < 2^63, so k >= 63 forces false for num >= 1.
  if (k >= 63) return false;
  return (static_cast<__int128>(num_) << k) < static_cast<__int128>(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace gp
