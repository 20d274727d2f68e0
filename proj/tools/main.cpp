// bitrade: evaluate posted-price bilateral-trade mechanisms over discrete
// value distributions, in exact rational arithmetic.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bitrade/analysis.hpp"
#include "bitrade/closedform.hpp"
#include "bitrade/distribution.hpp"
#include "bitrade/families.hpp"
#include "bitrade/harmonic.hpp"
#include "bitrade/mechanisms.hpp"
#include "bitrade/rational.hpp"
#include "bitrade/verify.hpp"

namespace {

using bitrade::DiscreteDistribution;
using bitrade::GftReport;
using bitrade::Rational;

struct RenderOptions {
  std::string format = "text";  // text | csv | json
  int digits = 12;
  bool exact = false;
};

std::string decimal(const Rational& x, const RenderOptions& opt) {
  return x.to_decimal(opt.digits);
}

// ---------------------------------------------------------------------------
// report

struct InstanceArgs {
  std::string family;
  int h = 0;
  std::string seller_file;
  std::string buyer_file;
};

// Resolves --family/--h vs --seller-dist/--buyer-dist into a pair of
// distributions. Throws CLI::ValidationError on inconsistent flags.
std::pair<DiscreteDistribution, DiscreteDistribution> resolve_instance(
    const InstanceArgs& args) {
  const bool by_family = !args.family.empty() || args.h != 0;
  const bool by_files = !args.seller_file.empty() || !args.buyer_file.empty();
  if (by_family == by_files) {
    throw CLI::ValidationError(
        "specify either --family with --h, or --seller-dist with --buyer-dist");
  }
  if (by_family) {
    if (args.family.empty() || args.h == 0) {
      throw CLI::ValidationError("--family and --h go together");
    }
    if (args.family == "er") {
      return {bitrade::er_seller(args.h), bitrade::er_buyer(args.h)};
    }
    return {bitrade::hard_seller(args.h), bitrade::hard_buyer(args.h)};
  }
  if (args.seller_file.empty() || args.buyer_file.empty()) {
    throw CLI::ValidationError("--seller-dist and --buyer-dist go together");
  }
  return {bitrade::load_distribution(args.seller_file),
          bitrade::load_distribution(args.buyer_file)};
}

void print_report_text(std::ostream& os, const GftReport& report,
                       const RenderOptions& opt) {
  const auto line = [&](const char* name, const Rational& value) {
    os << name << " = " << decimal(value, opt);
    if (opt.exact) os << " (" << value.to_string() << ")";
    os << "\n";
  };
  line("opt", report.opt);
  line("so", report.so);
  line("bo", report.bo);
  line("random_offerer", report.random_offerer);
  line("best_of", report.best_of);
  if (report.ratio) {
    line("ratio", *report.ratio);
  } else {
    os << "ratio = undefined (opt = 0)\n";
  }
}

void print_report_csv(std::ostream& os, const GftReport& report,
                      const RenderOptions& opt) {
  os << "opt,so,bo,random_offerer,best_of,ratio";
  if (opt.exact) {
    os << ",opt_exact,so_exact,bo_exact,random_offerer_exact,best_of_exact,"
          "ratio_exact";
  }
  os << "\n";
  const std::vector<const Rational*> columns = {
      &report.opt, &report.so, &report.bo, &report.random_offerer,
      &report.best_of};
  for (const auto* c : columns) os << decimal(*c, opt) << ",";
  os << (report.ratio ? decimal(*report.ratio, opt) : "");
  if (opt.exact) {
    for (const auto* c : columns) os << "," << c->to_string();
    os << "," << (report.ratio ? report.ratio->to_string() : "");
  }
  os << "\n";
}

void print_report_json(std::ostream& os, const GftReport& report,
                       const RenderOptions& opt) {
  nlohmann::ordered_json j;
  j["opt"] = decimal(report.opt, opt);
  j["so"] = decimal(report.so, opt);
  j["bo"] = decimal(report.bo, opt);
  j["random_offerer"] = decimal(report.random_offerer, opt);
  j["best_of"] = decimal(report.best_of, opt);
  j["ratio"] =
      report.ratio ? nlohmann::ordered_json(decimal(*report.ratio, opt))
                   : nlohmann::ordered_json(nullptr);
  if (opt.exact) {
    j["opt_exact"] = report.opt.to_string();
    j["so_exact"] = report.so.to_string();
    j["bo_exact"] = report.bo.to_string();
    j["random_offerer_exact"] = report.random_offerer.to_string();
    j["best_of_exact"] = report.best_of.to_string();
    j["ratio_exact"] = report.ratio
                           ? nlohmann::ordered_json(report.ratio->to_string())
                           : nlohmann::ordered_json(nullptr);
  }
  os << j.dump(2) << "\n";
}

int run_report(const InstanceArgs& instance, const RenderOptions& opt) {
  const auto [seller, buyer] = resolve_instance(instance);
  const GftReport report = bitrade::evaluate(seller, buyer);
  if (opt.format == "csv") {
    print_report_csv(std::cout, report, opt);
  } else if (opt.format == "json") {
    print_report_json(std::cout, report, opt);
  } else {
    print_report_text(std::cout, report, opt);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

void write_sweep_csv(std::ostream& os, const std::vector<bitrade::SweepRow>& rows,
                     const RenderOptions& opt) {
  os << "H,opt,bo,so,ratio,ratio_lower,ratio_upper";
  if (opt.exact) {
    os << ",opt_exact,bo_exact,so_exact,ratio_exact,ratio_lower_exact,"
          "ratio_upper_exact";
  }
  os << "\n";
  for (const auto& row : rows) {
    os << row.h << "," << decimal(row.opt, opt) << "," << decimal(row.bo, opt)
       << "," << decimal(row.bo, opt) << "," << decimal(row.ratio, opt) << ","
       << decimal(row.ratio_lower, opt) << "," << decimal(row.ratio_upper, opt);
    if (opt.exact) {
      os << "," << row.opt.to_string() << "," << row.bo.to_string() << ","
         << row.bo.to_string() << "," << row.ratio.to_string() << ","
         << row.ratio_lower.to_string() << "," << row.ratio_upper.to_string();
    }
    os << "\n";
  }
}

int run_sweep(int h_min, int h_max, int step, const std::string& source,
              const std::string& out_file, const RenderOptions& opt) {
  const auto rows = bitrade::sweep(h_min, h_max, step,
                                   source == "oracle"
                                       ? bitrade::SweepSource::oracle
                                       : bitrade::SweepSource::closed_form);
  if (out_file.empty()) {
    write_sweep_csv(std::cout, rows, opt);
    return 0;
  }
  std::ofstream out(out_file);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_file);
  }
  write_sweep_csv(out, rows, opt);
  if (!out.flush()) {
    throw std::runtime_error("write failed: " + out_file);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(int h_min, int h_max) {
  if (h_min < 4 || h_max < h_min) {
    throw CLI::ValidationError("verify requires 4 <= h-min <= h-max");
  }
  bitrade::harmonic_table().warm_up(h_max);
  for (int h = h_min; h <= h_max; ++h) {
    if (const auto failure = bitrade::check_equivalence(h)) {
      std::cout << "H=" << h << " FAIL " << failure->quantity << ": oracle "
                << failure->oracle_value << ", closed form "
                << failure->closed_value << "\n";
      return 1;
    }
    std::cout << "H=" << h << " ok\n";
  }
  std::cout << "verified H in [" << h_min << "," << h_max
            << "]: oracle and closed forms agree exactly\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bestof

int run_bestof() {
  const bitrade::BestOfReport report = bitrade::best_of_demo();
  std::cout << "fixed price = " << report.fixed_price << "\n";
  std::cout << "opt = " << report.opt << "\n";
  if (report.second_best == report.opt) {
    std::cout << "second_best = opt = " << report.second_best
              << " (the fixed-price mechanism extracts the optimal GFT)\n";
  } else {
    std::cout << "second_best = " << report.second_best << "\n";
  }
  std::cout << "so = " << report.so << "\n";
  std::cout << "bo = " << report.bo << "\n";
  std::cout << "best_of/second_best = " << report.best_of_fraction << "\n";
  if (report.best_of_fraction != Rational(3, 4)) {
    std::cerr << "expected best_of/second_best = 3/4\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// quote

int run_quote(const std::string& side, const std::string& value_text,
              const InstanceArgs& instance, const std::string& dist_file,
              const RenderOptions& opt) {
  const Rational value = Rational::parse(value_text);
  if (value.sign() < 0) {
    throw CLI::ValidationError("--value must be >= 0");
  }

  // The relevant distribution is the counterparty's.
  DiscreteDistribution counterparty = [&] {
    const bool by_family = !instance.family.empty() || instance.h != 0;
    if (by_family == !dist_file.empty()) {
      throw CLI::ValidationError(
          "specify either --family with --h, or --dist");
    }
    if (!dist_file.empty()) return bitrade::load_distribution(dist_file);
    if (instance.family.empty() || instance.h == 0) {
      throw CLI::ValidationError("--family and --h go together");
    }
    if (instance.family == "er") {
      return side == "seller" ? bitrade::er_buyer(instance.h)
                              : bitrade::er_seller(instance.h);
    }
    return side == "seller" ? bitrade::hard_buyer(instance.h)
                            : bitrade::hard_seller(instance.h);
  }();

  const auto print_gain = [&](const char* name, const Rational& gain) {
    std::cout << name << " = " << decimal(gain, opt);
    if (opt.exact) std::cout << " (" << gain.to_string() << ")";
    std::cout << "\n";
  };

  if (side == "seller") {
    const auto quote = bitrade::seller_optimal_price(value, counterparty);
    if (quote.is_never_trade()) {
      std::cout << "price = never-trade\n";
      print_gain("expected profit", Rational(0));
    } else {
      std::cout << "price = " << quote.price() << "\n";
      print_gain("expected profit",
                 bitrade::seller_expected_profit(value, counterparty,
                                                 quote.price()));
    }
  } else {
    const auto quote = bitrade::buyer_optimal_price(value, counterparty);
    std::cout << "price = " << quote.price() << "\n";
    print_gain("expected utility",
               bitrade::buyer_expected_utility(value, counterparty,
                                               quote.price()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact evaluation of posted-price bilateral-trade mechanisms over "
      "discrete value distributions"};
  app.set_help_flag("--help", "Print help and exit");  // frees -h for --h
  app.require_subcommand(1);

  RenderOptions render;
  InstanceArgs instance;

  const auto add_render = [&](CLI::App* cmd, bool with_format) {
    if (with_format) {
      cmd->add_option("--format", render.format, "Output format")
          ->check(CLI::IsMember({"text", "csv", "json"}))
          ->capture_default_str();
    }
    cmd->add_option("--digits", render.digits,
                    "Decimal digits in rendered columns")
        ->check(CLI::Range(0, 50))
        ->capture_default_str();
    cmd->add_flag("--exact", render.exact,
                  "Also print exact p/q rational values");
  };
  const auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--family", instance.family,
                    "Built-in family: er (equal revenue) or hard")
        ->check(CLI::IsMember({"er", "hard"}));
    cmd->add_option("--h", instance.h, "Family scale parameter H");
  };

  // report
  auto* report = app.add_subcommand(
      "report", "GFT of every mechanism on one instance");
  add_instance(report);
  report->add_option("--seller-dist", instance.seller_file,
                     "Seller distribution file");
  report->add_option("--buyer-dist", instance.buyer_file,
                     "Buyer distribution file");
  add_render(report, /*with_format=*/true);

  // sweep
  int h_min = 0, h_max = 0, step = 1;
  std::string source = "closed";
  std::string out_file;
  auto* sweep = app.add_subcommand(
      "sweep", "CSV of hard-family GFT and ratio over a range of H");
  sweep->add_option("--h-min", h_min, "Smallest H (>= 4)")->required();
  sweep->add_option("--h-max", h_max, "Largest H")->required();
  sweep->add_option("--step", step, "H increment")->capture_default_str();
  sweep->add_option("--source", source, "closed forms or brute-force oracle")
      ->check(CLI::IsMember({"closed", "oracle"}))
      ->capture_default_str();
  sweep->add_option("--out", out_file, "Output file (default: stdout)");
  add_render(sweep, /*with_format=*/false);

  // verify
  int verify_min = 4, verify_max = 128;
  auto* verify = app.add_subcommand(
      "verify", "Check closed forms against the brute-force oracle");
  verify->add_option("--h-min", verify_min, "Smallest H")
      ->capture_default_str();
  verify->add_option("--h-max", verify_max, "Largest H")
      ->capture_default_str();

  // bestof
  app.add_subcommand("bestof",
                     "Equal-revenue instance at H=2 where best-of reaches "
                     "only 3/4 of the second-best GFT");

  // quote
  std::string side, value_text, dist_file;
  auto* quote = app.add_subcommand(
      "quote", "Optimal posted price for one seller or buyer type");
  quote->add_option("--side", side, "Which agent posts the price")
      ->check(CLI::IsMember({"seller", "buyer"}))
      ->required();
  quote->add_option("--value", value_text, "The agent's private value")
      ->required();
  add_instance(quote);
  quote->add_option("--dist", dist_file,
                    "Counterparty distribution file (instead of --family)");
  add_render(quote, /*with_format=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("report")) return run_report(instance, render);
    if (app.got_subcommand("sweep")) {
      return run_sweep(h_min, h_max, step, source, out_file, render);
    }
    if (app.got_subcommand("verify")) return run_verify(verify_min, verify_max);
    if (app.got_subcommand("bestof")) return run_bestof();
    if (app.got_subcommand("quote")) {
      return run_quote(side, value_text, instance, dist_file, render);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
