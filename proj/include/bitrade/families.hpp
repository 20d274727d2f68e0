#pragma once

#include "bitrade/distribution.hpp"

namespace bitrade {

// The two distribution families the library ships, parameterized by an
// integer scale H. Both are integer-supported; each family comes as a
// seller/buyer pair that is symmetric under v -> H - v.
//
// Equal-revenue family (H >= 2): every posted price in the core range
// earns the same expected revenue.
//   er_seller: support {0..H-1},  Pr[s <= m] = 1/(H-m)
//   er_buyer:  support {1..H},    Pr[b >= m] = 1/m
//
// Hard family (H >= 4): the equal-revenue pair with mass 1/H - 1/(2(H-1))
// moved inward from the extreme value (0 for the seller, H for the buyer).
//   hard_seller: Pr[s <= 0] = 1/(2(H-1)), Pr[s <= m] = 1/(H-m) for
//                m in {1..H-1}; the point H carries no mass
//   hard_buyer:  Pr[b >= H] = 1/(2(H-1)), Pr[b >= m] = 1/m for
//                m in {1..H-1}; the point 0 carries no mass

/// Throws std::domain_error when h < 2.
DiscreteDistribution er_seller(int h);
DiscreteDistribution er_buyer(int h);

/// Throws std::domain_error when h < 4.
DiscreteDistribution hard_seller(int h);
DiscreteDistribution hard_buyer(int h);

}  // namespace bitrade
