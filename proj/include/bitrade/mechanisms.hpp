#pragma once

#include <optional>

#include "bitrade/distribution.hpp"
#include "bitrade/rational.hpp"

namespace bitrade {

/// A posted price, or the "never trade" sentinel a seller falls back to
/// when no price earns him strictly positive expected profit.
class PriceQuote {
public:
  static PriceQuote finite(Rational price) {
    return PriceQuote(std::move(price));
  }
  static PriceQuote never_trade() { return PriceQuote(); }

  bool is_never_trade() const { return !price_.has_value(); }
  /// Valid only when !is_never_trade().
  const Rational& price() const { return *price_; }

  friend bool operator==(const PriceQuote&, const PriceQuote&) = default;

private:
  PriceQuote() = default;
  explicit PriceQuote(Rational price) : price_(std::move(price)) {}

  std::optional<Rational> price_;
};

/// Expected profit (p - s) * Pr[b >= p] of a seller with value s posting
/// price p against the buyer distribution.
Rational seller_expected_profit(const Rational& s,
                                const DiscreteDistribution& buyer,
                                const Rational& p);

/// Expected utility (b - p) * Pr[s <= p] of a buyer with value b posting
/// price p against the seller distribution.
Rational buyer_expected_utility(const Rational& b,
                                const DiscreteDistribution& seller,
                                const Rational& p);

/// Profit-maximizing posted price for a seller with value s. Candidates
/// are the buyer's support points (expected profit is monotone between
/// them, so nothing better exists off-support). Ties at the maximum break
/// to the HIGHEST price; when no price earns strictly positive profit the
/// result is never_trade().
PriceQuote seller_optimal_price(const Rational& s,
                                const DiscreteDistribution& buyer);

/// Utility-maximizing posted price for a buyer with value b, searched
/// over the seller's support points. Ties break to the LOWEST price; when
/// no price earns strictly positive utility the price is 0.
PriceQuote buyer_optimal_price(const Rational& b,
                               const DiscreteDistribution& seller);

/// First-best gains from trade E[max(b - s, 0)], by exact double sum.
Rational gft_first_best(const DiscreteDistribution& seller,
                        const DiscreteDistribution& buyer);

/// GFT of the seller-offering mechanism: each seller type posts its
/// optimal price p; the pair (s, b) trades iff b >= p and s <= p.
Rational gft_seller_offering(const DiscreteDistribution& seller,
                             const DiscreteDistribution& buyer);

/// GFT of the buyer-offering mechanism: each buyer type posts its optimal
/// price p; the pair (s, b) trades iff s <= p.
Rational gft_buyer_offering(const DiscreteDistribution& seller,
                            const DiscreteDistribution& buyer);

/// (seller-offering + buyer-offering) / 2.
Rational gft_random_offerer(const DiscreteDistribution& seller,
                            const DiscreteDistribution& buyer);

/// GFT of the fixed-price mechanism at price p: trade iff b >= p >= s,
/// with weak inequalities so that ties favor trade.
Rational gft_fixed_price(const Rational& p, const DiscreteDistribution& seller,
                         const DiscreteDistribution& buyer);

/// One instance's GFT under every mechanism. Invariants: 0 <= so <= opt,
/// 0 <= bo <= opt, random_offerer == (so + bo)/2,
/// best_of == max(so, bo) <= opt. `ratio` is random_offerer / opt, absent
/// when opt == 0.
struct GftReport {
  Rational opt;
  Rational so;
  Rational bo;
  Rational random_offerer;
  Rational best_of;
  std::optional<Rational> ratio;
};

GftReport evaluate(const DiscreteDistribution& seller,
                   const DiscreteDistribution& buyer);

}  // namespace bitrade
