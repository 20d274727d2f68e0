#include "bitrade/verify.hpp"

#include "bitrade/closedform.hpp"
#include "bitrade/families.hpp"
#include "bitrade/mechanisms.hpp"

namespace bitrade {

std::optional<EquivalenceFailure> compare_quantity(
    int h, const std::string& quantity, const Rational& oracle_value,
    const Rational& closed_value) {
  if (oracle_value == closed_value) return std::nullopt;
  return EquivalenceFailure{h, quantity, oracle_value, closed_value};
}

std::optional<EquivalenceFailure> check_equivalence(int h) {
  const auto er_s = er_seller(h);
  const auto er_b = er_buyer(h);
  if (auto f = compare_quantity(h, "OPT_ER", gft_first_best(er_s, er_b),
                                closed_opt_er(h))) {
    return f;
  }

  const auto hard_s = hard_seller(h);
  const auto hard_b = hard_buyer(h);
  if (auto f = compare_quantity(h, "OPT_hard", gft_first_best(hard_s, hard_b),
                                closed_opt_hard(h))) {
    return f;
  }
  const Rational bo = gft_buyer_offering(hard_s, hard_b);
  const Rational so = gft_seller_offering(hard_s, hard_b);
  if (auto f = compare_quantity(h, "BO_hard", bo, closed_bo_hard(h))) {
    return f;
  }
  if (auto f = compare_quantity(h, "SO_hard", so, closed_bo_hard(h))) {
    return f;
  }
  return compare_quantity(h, "SO_vs_BO_symmetry", so, bo);
}

}  // namespace bitrade
