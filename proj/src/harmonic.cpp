#include "bitrade/harmonic.hpp"

#include <stdexcept>

namespace bitrade {

Rational HarmonicTable::at(int n) {
  if (n < 1) throw std::domain_error("harmonic: n must be >= 1");
  warm_up(n);
  return values_[static_cast<std::size_t>(n) - 1];
}

void HarmonicTable::warm_up(int n_max) {
  if (values_.empty()) values_.push_back(Rational(1));
  for (int n = cached_max() + 1; n <= n_max; ++n) {
    values_.push_back(values_.back() + Rational(1, n));
  }
}

HarmonicTable& harmonic_table() {
  static HarmonicTable table;
  return table;
}

}  // namespace bitrade
