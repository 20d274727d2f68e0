#pragma once

#include <optional>
#include <string>

#include "bitrade/rational.hpp"

namespace bitrade {

/// A quantity whose brute-force value disagrees with its closed form.
struct EquivalenceFailure {
  int h;
  std::string quantity;
  Rational oracle_value;
  Rational closed_value;
};

/// Compares one oracle/closed-form pair; a mismatch yields a failure
/// record naming the quantity.
std::optional<EquivalenceFailure> compare_quantity(int h,
                                                   const std::string& quantity,
                                                   const Rational& oracle_value,
                                                   const Rational& closed_value);

/// Runs the full double-sum oracle on both families at H = h and checks,
/// by exact equality, OPT_ER, OPT_hard, BO_hard and SO_hard against their
/// closed forms plus the BO == SO symmetry. Returns the first mismatch,
/// or nullopt when everything agrees. Requires h >= 4.
std::optional<EquivalenceFailure> check_equivalence(int h);

}  // namespace bitrade
