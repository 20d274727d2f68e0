#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitrade/rational.hpp"

namespace bitrade {

/// Finite value distribution with exact masses. Invariants established at
/// construction and never broken afterwards:
///   - support values strictly increasing, each >= 0
///   - every stored mass > 0 (zero-mass points are dropped)
///   - masses sum to exactly 1
/// Immutable after construction; safe to share between threads.
class DiscreteDistribution {
public:
  struct Point {
    Rational value;
    Rational mass;
  };

  /// Builds a distribution from (value, mass) pairs in any order.
  /// Pairs with equal values are merged, zero masses dropped. Throws
  /// std::invalid_argument on a negative value, a negative mass, or
  /// masses not summing to exactly 1.
  static DiscreteDistribution from_points(std::vector<Point> points);

  /// Single point of mass 1 at `value`.
  static DiscreteDistribution point_mass(Rational value);

  std::size_t size() const { return values_.size(); }
  const Rational& value(std::size_t i) const { return values_[i]; }
  const Rational& mass(std::size_t i) const { return masses_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& min_value() const { return values_.front(); }
  const Rational& max_value() const { return values_.back(); }

  /// Mass at exactly `v`; zero when `v` is not a support point.
  Rational mass_at(const Rational& v) const;

  /// Pr[X <= x], exact.
  Rational cdf(const Rational& x) const;
  /// Pr[X >= x], exact.
  Rational survival(const Rational& x) const;

  /// Exact equality of supports and masses.
  friend bool operator==(const DiscreteDistribution& a,
                         const DiscreteDistribution& b) {
    return a.values_ == b.values_ && a.masses_ == b.masses_;
  }

private:
  DiscreteDistribution() = default;

  std::vector<Rational> values_;
  std::vector<Rational> masses_;
  std::vector<Rational> cumulative_;  // cumulative_[i] == Pr[X <= values_[i]]
};

/// Moves `amount` of probability mass from support point `from` to `to`
/// (which need not be in the support yet). Throws std::domain_error when
/// `from` is not a support point, `amount` is negative, or `amount`
/// exceeds the mass at `from`.
DiscreteDistribution shift_mass(const DiscreteDistribution& d,
                                const Rational& from, const Rational& to,
                                const Rational& amount);

/// Error raised by the distribution-file parser; carries the 1-based line
/// number of the offending input line (0 when the error is not tied to a
/// single line, e.g. a bad total mass). what() reads like a compiler
/// diagnostic: "[source:]line N: message".
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message,
             const std::string& source = "");
  int line() const { return line_; }
  const std::string& message() const { return message_; }

private:
  int line_;
  std::string message_;
};

/// Parses the distribution text format: one `<value> <mass>` pair per
/// line, each token an integer or p/q rational, `#` starts a comment,
/// blank lines ignored. Masses must sum to exactly 1; no silent
/// renormalization. Duplicate support values, malformed rationals,
/// negative values and negative masses are ParseErrors with the line
/// number; zero-mass points are accepted and dropped.
DiscreteDistribution parse_distribution(std::string_view text);

/// parse_distribution over the contents of `path`. Throws
/// std::runtime_error when the file cannot be read.
DiscreteDistribution load_distribution(const std::filesystem::path& path);

}  // namespace bitrade
