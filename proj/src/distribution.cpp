#include "bitrade/distribution.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace bitrade {

DiscreteDistribution DiscreteDistribution::from_points(
    std::vector<Point> points) {
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.value < b.value; });

  DiscreteDistribution d;
  Rational total;
  for (auto& p : points) {
    if (p.value.sign() < 0) {
      throw std::invalid_argument("DiscreteDistribution: negative value " +
                                  p.value.to_string());
    }
    if (p.mass.sign() < 0) {
      throw std::invalid_argument("DiscreteDistribution: negative mass " +
                                  p.mass.to_string() + " at value " +
                                  p.value.to_string());
    }
    total += p.mass;
    if (!d.values_.empty() && d.values_.back() == p.value) {
      d.masses_.back() += p.mass;
    } else {
      d.values_.push_back(std::move(p.value));
      d.masses_.push_back(std::move(p.mass));
    }
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("DiscreteDistribution: masses sum to " +
                                total.to_string() + ", expected 1");
  }

  // Drop zero-mass points (possible directly or via merges).
  std::size_t kept = 0;
  for (std::size_t i = 0; i < d.values_.size(); ++i) {
    if (d.masses_[i].is_zero()) continue;
    if (kept != i) {
      d.values_[kept] = std::move(d.values_[i]);
      d.masses_[kept] = std::move(d.masses_[i]);
    }
    ++kept;
  }
  d.values_.resize(kept);
  d.masses_.resize(kept);

  d.cumulative_.reserve(kept);
  Rational running;
  for (const auto& m : d.masses_) {
    running += m;
    d.cumulative_.push_back(running);
  }
  return d;
}

DiscreteDistribution DiscreteDistribution::point_mass(Rational value) {
  return from_points({{std::move(value), Rational(1)}});
}

Rational DiscreteDistribution::mass_at(const Rational& v) const {
  const auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return Rational(0);
  return masses_[static_cast<std::size_t>(it - values_.begin())];
}

Rational DiscreteDistribution::cdf(const Rational& x) const {
  // Index of the last support point <= x.
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  if (it == values_.begin()) return Rational(0);
  return cumulative_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

Rational DiscreteDistribution::survival(const Rational& x) const {
  // 1 - Pr[X < x] = 1 - Pr[X <= largest support point < x].
  const auto it = std::lower_bound(values_.begin(), values_.end(), x);
  if (it == values_.begin()) return Rational(1);
  return Rational(1) -
         cumulative_[static_cast<std::size_t>(it - values_.begin()) - 1];
}

DiscreteDistribution shift_mass(const DiscreteDistribution& d,
                                const Rational& from, const Rational& to,
                                const Rational& amount) {
  if (amount.sign() < 0) {
    throw std::domain_error("shift_mass: negative amount");
  }
  const Rational available = d.mass_at(from);
  if (available.is_zero()) {
    throw std::domain_error("shift_mass: " + from.to_string() +
                            " is not a support point");
  }
  if (amount > available) {
    throw std::domain_error("shift_mass: amount " + amount.to_string() +
                            " exceeds mass " + available.to_string() +
                            " at " + from.to_string());
  }

  std::vector<DiscreteDistribution::Point> points;
  points.reserve(d.size() + 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    points.push_back({d.value(i), d.mass(i)});
    if (d.value(i) == from) points.back().mass -= amount;
  }
  points.push_back({to, amount});
  return DiscreteDistribution::from_points(std::move(points));
}

namespace {

std::string format_parse_error(int line, const std::string& message,
                               const std::string& source) {
  std::string out;
  if (!source.empty()) out += source + ": ";
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  return out + message;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message,
                       const std::string& source)
    : std::runtime_error(format_parse_error(line, message, source)),
      line_(line),
      message_(message) {}

DiscreteDistribution parse_distribution(std::string_view text) {
  std::vector<DiscreteDistribution::Point> points;
  std::map<Rational, int> seen;  // value -> first line

  int line_no = 0;
  std::istringstream input{std::string(text)};
  std::string line;
  while (std::getline(input, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string value_token, mass_token, extra;
    if (!(fields >> value_token)) continue;  // blank or comment-only line
    if (!(fields >> mass_token) || (fields >> extra)) {
      throw ParseError(line_no, "expected `<value> <mass>`");
    }

    Rational value, mass;
    try {
      value = Rational::parse(value_token);
      mass = Rational::parse(mass_token);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (value.sign() < 0) {
      throw ParseError(line_no, "negative value " + value.to_string());
    }
    if (mass.sign() < 0) {
      throw ParseError(line_no, "negative mass " + mass.to_string());
    }
    if (const auto [it, inserted] = seen.emplace(value, line_no); !inserted) {
      throw ParseError(line_no, "duplicate value " + value.to_string() +
                                    " (first seen on line " +
                                    std::to_string(it->second) + ")");
    }
    points.push_back({std::move(value), std::move(mass)});
  }

  try {
    return DiscreteDistribution::from_points(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

DiscreteDistribution load_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open distribution file: " +
                             path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_distribution(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

}  // namespace bitrade
