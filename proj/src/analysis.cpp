#include "bitrade/analysis.hpp"

#include <stdexcept>
#include <string>

#include "bitrade/closedform.hpp"
#include "bitrade/families.hpp"
#include "bitrade/harmonic.hpp"
#include "bitrade/mechanisms.hpp"

namespace bitrade {

std::vector<SweepRow> sweep(int h_min, int h_max, int step,
                            SweepSource source) {
  if (h_min < 4) {
    throw std::domain_error("sweep: h_min must be >= 4, got " +
                            std::to_string(h_min));
  }
  if (h_max < h_min) {
    throw std::domain_error("sweep: h_max must be >= h_min");
  }
  if (step < 1) {
    throw std::domain_error("sweep: step must be >= 1");
  }

  harmonic_table().warm_up(h_max);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>((h_max - h_min) / step) + 1);
  for (int h = h_min; h <= h_max; h += step) {
    SweepRow row;
    row.h = h;
    row.source = source;
    if (source == SweepSource::closed_form) {
      row.opt = closed_opt_hard(h);
      row.bo = closed_bo_hard(h);
    } else {
      const auto seller = hard_seller(h);
      const auto buyer = hard_buyer(h);
      row.opt = gft_first_best(seller, buyer);
      row.bo = gft_buyer_offering(seller, buyer);
    }
    row.ratio = row.bo / row.opt;
    row.ratio_lower = ratio_lower_bound(h);
    row.ratio_upper = ratio_upper_bound(h);
    rows.push_back(std::move(row));
  }
  return rows;
}

BelowHalfScan find_below_half(int h_max) {
  if (h_max < 121) {
    throw std::domain_error("find_below_half: h_max must be >= 121");
  }
  harmonic_table().warm_up(h_max);

  const Rational half(1, 2);
  BelowHalfScan scan;
  scan.h_max = h_max;
  scan.threshold = 4;
  for (int h = 4; h <= h_max; ++h) {
    if (closed_ratio(h) >= half) {
      scan.above_half.push_back(h);
      scan.threshold = h + 1;
    }
  }
  return scan;
}

BestOfReport best_of_demo() {
  const auto seller = er_seller(2);
  const auto buyer = er_buyer(2);

  BestOfReport report;
  report.fixed_price = Rational(1);
  report.opt = gft_first_best(seller, buyer);
  report.second_best = gft_fixed_price(report.fixed_price, seller, buyer);
  report.so = gft_seller_offering(seller, buyer);
  report.bo = gft_buyer_offering(seller, buyer);
  report.best_of_fraction = max(report.so, report.bo) / report.second_best;
  return report;
}

}  // namespace bitrade
