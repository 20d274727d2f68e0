#pragma once

#include <vector>

#include "bitrade/rational.hpp"

namespace bitrade {

/// Incrementally extended table of harmonic numbers H_n = sum_{i=1..n} 1/i,
/// computed exactly. Entry n is built as entry (n-1) + 1/n, so
/// at(n+1) - at(n) == 1/(n+1) holds for every cached index.
///
/// Thread model: warm_up() (or the first at(n) reaching n) must run
/// single-threaded; afterwards concurrent at(k) calls for k <= cached_max()
/// are safe. Interleaving growth with reads is a contract violation.
class HarmonicTable {
public:
  /// H_n for n >= 1, extending the table as needed. n < 1 throws
  /// std::domain_error.
  Rational at(int n);

  /// Extends the table through n_max.
  void warm_up(int n_max);

  int cached_max() const { return static_cast<int>(values_.size()); }

private:
  std::vector<Rational> values_;  // values_[i] == H_{i+1}
};

/// Process-wide table shared by the closed-form evaluators.
HarmonicTable& harmonic_table();

/// H_n from the shared table.
inline Rational harmonic(int n) { return harmonic_table().at(n); }

}  // namespace bitrade
