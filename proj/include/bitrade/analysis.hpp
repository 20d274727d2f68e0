#pragma once

#include <vector>

#include "bitrade/rational.hpp"

namespace bitrade {

enum class SweepSource {
  closed_form,  // O(1) per row after harmonic warm-up
  oracle,       // full O(H^2) double sum; intended for small ranges
};

/// One hard-family instance in a sweep over H. The two offering
/// mechanisms tie on this family, so a single `bo` column carries both.
/// The bound columns always come from the closed-form expressions.
struct SweepRow {
  int h;
  Rational opt;
  Rational bo;
  Rational ratio;        // bo / opt
  Rational ratio_lower;  // <= ratio
  Rational ratio_upper;  // >= ratio
  SweepSource source;
};

/// Rows for H = h_min, h_min+step, ..., <= h_max. Requires
/// 4 <= h_min <= h_max and step >= 1 (std::domain_error otherwise).
/// Output is ordered by H and deterministic.
std::vector<SweepRow> sweep(int h_min, int h_max, int step,
                            SweepSource source);

/// Result of scanning closed_ratio(H) for H in {4..h_max}: every H whose
/// ratio is >= 1/2, and the smallest threshold after which the ratio
/// stays below 1/2 through h_max. The threshold is an observed value for
/// the scanned range, not a claim about larger H.
struct BelowHalfScan {
  int h_max;
  int threshold;
  std::vector<int> above_half;
};

/// Requires h_max >= 121 (std::domain_error otherwise).
BelowHalfScan find_below_half(int h_max);

/// The equal-revenue pair at H = 2, where a fixed price of 1 already
/// extracts the full first-best GFT (so second-best == first-best == 1),
/// while each offering mechanism reaches only 3/4. The best-of mechanism
/// therefore stops at a 3/4 fraction of the second-best.
struct BestOfReport {
  Rational opt;
  Rational second_best;
  Rational fixed_price;  // the price achieving second_best
  Rational so;
  Rational bo;
  Rational best_of_fraction;  // max(so, bo) / second_best
};

BestOfReport best_of_demo();

}  // namespace bitrade
