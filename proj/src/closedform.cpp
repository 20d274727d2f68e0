#include "bitrade/closedform.hpp"

#include <stdexcept>

#include "bitrade/harmonic.hpp"

namespace bitrade {

namespace {

void require_h(int h, int minimum, const char* what) {
  if (h < minimum) {
    throw std::domain_error(std::string(what) + ": H must be >= " +
                            std::to_string(minimum) + ", got " +
                            std::to_string(h));
  }
}

}  // namespace

Rational closed_opt_er(int h) {
  require_h(h, 2, "closed_opt_er");
  return Rational(2) * harmonic(h) / Rational(h + 1);
}

Rational closed_opt_hard(int h) {
  require_h(h, 4, "closed_opt_hard");
  return closed_opt_er(h) -
         Rational(h - 2, static_cast<long long>(h) * (h - 1));
}

Rational closed_bo_hard(int h) {
  require_h(h, 4, "closed_bo_hard");
  const long long hm1 = h - 1;
  return harmonic(h - 1) / Rational(hm1) - Rational(7, 12 * hm1) +
         Rational(1, 2 * hm1 * hm1);
}

Rational closed_ratio(int h) {
  require_h(h, 4, "closed_ratio");
  return closed_bo_hard(h) / closed_opt_hard(h);
}

Rational ratio_upper_bound(int h) {
  require_h(h, 3, "ratio_upper_bound");
  const Rational twice_h_minus_1 = Rational(2) * harmonic(h) - Rational(1);
  const Rational correction = Rational(1, 12) / twice_h_minus_1;
  const Rational hm1(h - 1);
  return Rational(1, 2) + Rational(1) / hm1 - correction - correction / hm1;
}

Rational ratio_lower_bound(int h) {
  require_h(h, 3, "ratio_lower_bound");
  const Rational numerator =
      Rational(1, h) + Rational(7, 12) +
      Rational(h - 2, 2LL * h * (h - 1));
  const Rational denominator = Rational(2) * harmonic(h) + Rational(2, h);
  return Rational(1, 2) - numerator / denominator;
}

ClosedForms closed_forms(int h) {
  require_h(h, 4, "closed_forms");
  ClosedForms f;
  f.h = h;
  f.opt_er = closed_opt_er(h);
  f.opt_hard = closed_opt_hard(h);
  f.bo_hard = closed_bo_hard(h);
  f.ratio = f.bo_hard / f.opt_hard;
  f.ratio_upper = ratio_upper_bound(h);
  f.ratio_lower = ratio_lower_bound(h);
  return f;
}

}  // namespace bitrade
