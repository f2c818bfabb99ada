#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gp {

/// Exact rational on 64-bit numerator / positive 64-bit denominator, always
/// normalized. Intermediates run in 128 bits; results that do not reduce back
/// into 64 bits raise OverflowError. No floating point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool negative() const { return num_ < 0; }

  std::string str() const;

  // Exact decimal expansion; available iff den = 2^a * 5^b.
  std::optional<std::string> decimal() const;

  // Exact test *this < 2^{-k}, valid for every k >= 0 without overflow.
  bool less_than_inv_pow2(uint32_t k) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational make(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gp
