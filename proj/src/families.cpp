#include "bitrade/families.hpp"

#include <stdexcept>
#include <vector>

namespace bitrade {

namespace {

void require_h(int h, int minimum, const char* family) {
  if (h < minimum) {
    throw std::domain_error(std::string(family) + ": H must be >= " +
                            std::to_string(minimum) + ", got " +
                            std::to_string(h));
  }
}

}  // namespace

DiscreteDistribution er_seller(int h) {
  require_h(h, 2, "er_seller");
  std::vector<DiscreteDistribution::Point> points;
  points.reserve(static_cast<std::size_t>(h));
  points.push_back({Rational(0), Rational(1, h)});
  for (int y = 1; y <= h - 1; ++y) {
    // CDF step 1/(H-y) - 1/(H-y+1).
    points.push_back({Rational(y), Rational(1, static_cast<long long>(h - y) *
                                                   (h - y + 1))});
  }
  return DiscreteDistribution::from_points(std::move(points));
}

DiscreteDistribution er_buyer(int h) {
  require_h(h, 2, "er_buyer");
  std::vector<DiscreteDistribution::Point> points;
  points.reserve(static_cast<std::size_t>(h));
  for (int x = 1; x <= h - 1; ++x) {
    // Survival step 1/x - 1/(x+1).
    points.push_back(
        {Rational(x), Rational(1, static_cast<long long>(x) * (x + 1))});
  }
  points.push_back({Rational(h), Rational(1, h)});
  return DiscreteDistribution::from_points(std::move(points));
}

DiscreteDistribution hard_seller(int h) {
  require_h(h, 4, "hard_seller");
  std::vector<DiscreteDistribution::Point> points;
  points.reserve(static_cast<std::size_t>(h));
  const Rational half_tail(1, 2LL * (h - 1));
  points.push_back({Rational(0), half_tail});
  points.push_back({Rational(1), half_tail});  // 1/(H-1) - 1/(2(H-1))
  for (int m = 2; m <= h - 1; ++m) {
    points.push_back({Rational(m), Rational(1, static_cast<long long>(h - m) *
                                                   (h - m + 1))});
  }
  return DiscreteDistribution::from_points(std::move(points));
}

DiscreteDistribution hard_buyer(int h) {
  require_h(h, 4, "hard_buyer");
  std::vector<DiscreteDistribution::Point> points;
  points.reserve(static_cast<std::size_t>(h));
  for (int m = 1; m <= h - 2; ++m) {
    points.push_back(
        {Rational(m), Rational(1, static_cast<long long>(m) * (m + 1))});
  }
  const Rational half_tail(1, 2LL * (h - 1));
  points.push_back({Rational(h - 1), half_tail});  // 1/(H-1) - 1/(2(H-1))
  points.push_back({Rational(h), half_tail});
  return DiscreteDistribution::from_points(std::move(points));
}

}  // namespace bitrade
