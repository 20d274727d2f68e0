#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmp.h>

namespace bitrade {

/// Arbitrary-precision rational number, kept in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) == 1 after every
/// operation. All arithmetic and comparisons are exact; decimal strings
/// appear only at output boundaries via to_decimal().
///
/// Values are immutable once constructed (all operations return new
/// values) and may be shared freely between threads.
class Rational {
public:
  Rational() { mpq_init(q_); }

  Rational(long long n) : Rational() { set_integer(n); }
  Rational(int n) : Rational(static_cast<long long>(n)) {}

  /// num/den, canonicalized. den == 0 throws std::domain_error.
  Rational(long long num, long long den);

  Rational(const Rational& other) {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }
  Rational(Rational&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }
  Rational& operator=(const Rational& other) {
    mpq_set(q_, other.q_);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "p", "-p" or "p/q" (decimal digits only). Throws
  /// std::invalid_argument on any other shape, including "p/0".
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  /// Throws std::domain_error when b == 0.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  Rational& operator+=(const Rational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }
  Rational& operator/=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = mpq_cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  /// Decimal digit string of the canonical numerator (with '-' when
  /// negative) and denominator.
  std::string numerator() const;
  std::string denominator() const;

  /// "p/q", or just "p" when the denominator is 1. Round-trips through
  /// parse().
  std::string to_string() const;

  /// Decimal rendering rounded half-to-even at `digits` fractional
  /// digits (0 <= digits <= 50, else std::domain_error). Never used for
  /// comparisons inside the library.
  std::string to_decimal(int digits) const;

private:
  void set_integer(long long n);

  mpq_t q_;
};

Rational abs(const Rational& x);

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

/// Streams to_string().
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace bitrade
