#include "bitrade/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bitrade {

namespace {

// Wraps the C string returned by mpz_get_str and releases it through
// GMP's registered deallocator.
std::string mpz_to_string(mpz_srcptr z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string s(raw);
  void (*freefunc)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, s.size() + 1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

void Rational::set_integer(long long n) {
  mpz_set_si(mpq_numref(q_), static_cast<long>(n));
  mpz_set_ui(mpq_denref(q_), 1);
}

Rational::Rational(long long num, long long den) : Rational() {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpz_set_si(mpq_numref(q_), static_cast<long>(num));
  mpz_set_si(mpq_denref(q_), static_cast<long>(den));
  mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, b.q_);
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("Rational: expected \"p\" or \"p/q\", got \"" +
                                std::string(text) + "\"");
  }

  Rational r;
  mpz_set_str(mpq_numref(r.q_), std::string(num).c_str(), 10);
  mpz_set_str(mpq_denref(r.q_), std::string(den).c_str(), 10);
  if (mpz_sgn(mpq_denref(r.q_)) == 0) {
    throw std::invalid_argument("Rational: zero denominator in \"" +
                                std::string(text) + "\"");
  }
  if (negative) mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
  mpq_canonicalize(r.q_);
  return r;
}

std::string Rational::numerator() const { return mpz_to_string(mpq_numref(q_)); }

std::string Rational::denominator() const {
  return mpz_to_string(mpq_denref(q_));
}

std::string Rational::to_string() const {
  if (mpz_cmp_ui(mpq_denref(q_), 1) == 0) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0 || digits > 50) {
    throw std::domain_error("Rational::to_decimal: digits out of [0, 50]");
  }

  const bool negative = sign() < 0;

  // |num| * 10^digits, then divide by den; the remainder decides the
  // half-to-even rounding of the last kept digit.
  mpz_t scaled, quot, rem, twice_rem;
  mpz_inits(scaled, quot, rem, twice_rem, nullptr);
  mpz_abs(scaled, mpq_numref(q_));
  mpz_t pow10;
  mpz_init_set_ui(pow10, 10);
  mpz_pow_ui(pow10, pow10, static_cast<unsigned long>(digits));
  mpz_mul(scaled, scaled, pow10);
  mpz_fdiv_qr(quot, rem, scaled, mpq_denref(q_));
  mpz_mul_2exp(twice_rem, rem, 1);
  const int cmp = mpz_cmp(twice_rem, mpq_denref(q_));
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot))) {
    mpz_add_ui(quot, quot, 1);
  }
  std::string body = mpz_to_string(quot);
  const bool is_zero_result = mpz_sgn(quot) == 0;
  mpz_clears(scaled, quot, rem, twice_rem, pow10, nullptr);

  if (digits > 0) {
    const auto width = static_cast<std::size_t>(digits);
    if (body.size() <= width) {
      body.insert(0, width + 1 - body.size(), '0');
    }
    body.insert(body.size() - width, ".");
  }
  if (negative && !is_zero_result) body.insert(0, "-");
  return body;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}

}  // namespace bitrade
