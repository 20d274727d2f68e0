#pragma once

#include "bitrade/rational.hpp"

namespace bitrade {

// Exact closed forms for the two families, all in terms of harmonic
// numbers H_n (shared table, see harmonic.hpp). Each function validates
// its domain and throws std::domain_error below it.

/// First-best GFT of the equal-revenue pair: 2*H_H / (H+1). H >= 2.
Rational closed_opt_er(int h);

/// First-best GFT of the hard pair:
/// 2*H_H / (H+1) - (H-2) / (H*(H-1)). H >= 4.
Rational closed_opt_hard(int h);

/// Seller-offering GFT == buyer-offering GFT of the hard pair:
/// H_{H-1}/(H-1) - 7/(12*(H-1)) + 1/(2*(H-1)^2). H >= 4.
Rational closed_bo_hard(int h);

/// Random-offerer share of the first-best on the hard pair,
/// closed_bo_hard / closed_opt_hard (the two offering mechanisms tie, so
/// this equals (BO+SO)/(2*OPT)). H >= 4.
Rational closed_ratio(int h);

/// Upper bound on closed_ratio:
/// 1/2 + 1/(H-1) - 1/(12*(2*H_H - 1)) - 1/(12*(H-1)*(2*H_H - 1)).
/// Drops below 1/2 for all large H. H > 2.
Rational ratio_upper_bound(int h);

/// Lower bound on closed_ratio:
/// 1/2 - (1/H + 7/12 + (H-2)/(2*H*(H-1))) / (2*H_H + 2/H).
/// Approaches 1/2 from below as H grows. H > 2.
Rational ratio_lower_bound(int h);

/// Everything above for one H (H >= 4), evaluated once.
struct ClosedForms {
  int h;
  Rational opt_er;
  Rational opt_hard;
  Rational bo_hard;
  Rational ratio;
  Rational ratio_upper;
  Rational ratio_lower;
};

ClosedForms closed_forms(int h);

}  // namespace bitrade
