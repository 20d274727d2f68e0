#include "bitrade/mechanisms.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace bitrade {

Rational seller_expected_profit(const Rational& s,
                                const DiscreteDistribution& buyer,
                                const Rational& p) {
  return (p - s) * buyer.survival(p);
}

Rational buyer_expected_utility(const Rational& b,
                                const DiscreteDistribution& seller,
                                const Rational& p) {
  return (b - p) * seller.cdf(p);
}

PriceQuote seller_optimal_price(const Rational& s,
                                const DiscreteDistribution& buyer) {
  if (s.sign() < 0) {
    throw std::domain_error("seller_optimal_price: negative seller value");
  }
  std::optional<Rational> best_profit;
  Rational best_price;
  // Ascending scan; >= keeps the highest maximizer.
  for (std::size_t j = 0; j < buyer.size(); ++j) {
    Rational profit = seller_expected_profit(s, buyer, buyer.value(j));
    if (!best_profit || profit >= *best_profit) {
      best_profit = std::move(profit);
      best_price = buyer.value(j);
    }
  }
  if (!best_profit || best_profit->sign() <= 0) {
    return PriceQuote::never_trade();
  }
  return PriceQuote::finite(std::move(best_price));
}

PriceQuote buyer_optimal_price(const Rational& b,
                               const DiscreteDistribution& seller) {
  if (b.sign() < 0) {
    throw std::domain_error("buyer_optimal_price: negative buyer value");
  }
  std::optional<Rational> best_utility;
  Rational best_price;
  // Ascending scan; > keeps the lowest maximizer.
  for (std::size_t i = 0; i < seller.size(); ++i) {
    Rational utility = buyer_expected_utility(b, seller, seller.value(i));
    if (!best_utility || utility > *best_utility) {
      best_utility = std::move(utility);
      best_price = seller.value(i);
    }
  }
  if (!best_utility || best_utility->sign() <= 0) {
    return PriceQuote::finite(Rational(0));
  }
  return PriceQuote::finite(std::move(best_price));
}

Rational gft_first_best(const DiscreteDistribution& seller,
                        const DiscreteDistribution& buyer) {
  Rational total;
  for (std::size_t i = 0; i < seller.size(); ++i) {
    const Rational& s = seller.value(i);
    Rational inner;
    for (std::size_t j = 0; j < buyer.size(); ++j) {
      if (buyer.value(j) <= s) continue;
      inner += buyer.mass(j) * (buyer.value(j) - s);
    }
    total += seller.mass(i) * inner;
  }
  return total;
}

Rational gft_seller_offering(const DiscreteDistribution& seller,
                             const DiscreteDistribution& buyer) {
  Rational total;
  for (std::size_t i = 0; i < seller.size(); ++i) {
    const Rational& s = seller.value(i);
    const PriceQuote quote = seller_optimal_price(s, buyer);
    if (quote.is_never_trade()) continue;
    const Rational& p = quote.price();
    if (s > p) continue;  // trade needs s <= p as well
    Rational inner;
    for (std::size_t j = 0; j < buyer.size(); ++j) {
      if (buyer.value(j) < p) continue;
      inner += buyer.mass(j) * (buyer.value(j) - s);
    }
    total += seller.mass(i) * inner;
  }
  return total;
}

Rational gft_buyer_offering(const DiscreteDistribution& seller,
                            const DiscreteDistribution& buyer) {
  Rational total;
  for (std::size_t j = 0; j < buyer.size(); ++j) {
    const Rational& b = buyer.value(j);
    const PriceQuote quote = buyer_optimal_price(b, seller);
    const Rational& p = quote.price();
    Rational inner;
    for (std::size_t i = 0; i < seller.size(); ++i) {
      if (seller.value(i) > p) break;
      inner += seller.mass(i) * (b - seller.value(i));
    }
    total += buyer.mass(j) * inner;
  }
  return total;
}

Rational gft_random_offerer(const DiscreteDistribution& seller,
                            const DiscreteDistribution& buyer) {
  return (gft_seller_offering(seller, buyer) +
          gft_buyer_offering(seller, buyer)) /
         Rational(2);
}

Rational gft_fixed_price(const Rational& p,
                         const DiscreteDistribution& seller,
                         const DiscreteDistribution& buyer) {
  if (p.sign() < 0) {
    throw std::domain_error("gft_fixed_price: negative price");
  }
  Rational total;
  for (std::size_t i = 0; i < seller.size(); ++i) {
    if (seller.value(i) > p) break;
    Rational inner;
    for (std::size_t j = 0; j < buyer.size(); ++j) {
      if (buyer.value(j) < p) continue;
      inner += buyer.mass(j) * (buyer.value(j) - seller.value(i));
    }
    total += seller.mass(i) * inner;
  }
  return total;
}

GftReport evaluate(const DiscreteDistribution& seller,
                   const DiscreteDistribution& buyer) {
  GftReport report;
  report.opt = gft_first_best(seller, buyer);
  report.so = gft_seller_offering(seller, buyer);
  report.bo = gft_buyer_offering(seller, buyer);
  report.random_offerer = (report.so + report.bo) / Rational(2);
  report.best_of = max(report.so, report.bo);
  if (report.opt.sign() > 0) {
    report.ratio = report.random_offerer / report.opt;
  }
  return report;
}

}  // namespace bitrade
