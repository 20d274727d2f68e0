#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bitrade/closedform.hpp"
#include "bitrade/rational.hpp"

using bitrade::Rational;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = fs::temp_directory_path() /
                       ("bitrade_cli_out_" + std::to_string(++counter));
  const fs::path err = fs::temp_directory_path() /
                       ("bitrade_cli_err_" + std::to_string(counter));
  const std::string command = std::string(BITRADE_CLI_PATH) + " " + args +
                              " >" + out.string() + " 2>" + err.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return result;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("report on the equal-revenue family at H=2") {
  const auto result = run_cli("report --family er --h 2");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("opt = 1.000000000000") != std::string::npos);
  CHECK(result.out.find("so = 0.750000000000") != std::string::npos);
  CHECK(result.out.find("bo = 0.750000000000") != std::string::npos);
}

TEST_CASE("report json carries exact rationals that re-parse") {
  const auto result =
      run_cli("report --family hard --h 50 --format json --exact");
  REQUIRE(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.out);
  CHECK(j.at("ratio").is_string());
  const Rational ratio =
      Rational::parse(j.at("ratio_exact").get<std::string>());
  CHECK(ratio == bitrade::closed_ratio(50));
  CHECK(j.at("ratio").get<std::string>() == ratio.to_decimal(12));
  CHECK(Rational::parse(j.at("opt_exact").get<std::string>()) ==
        bitrade::closed_opt_hard(50));
}

TEST_CASE("report usage and input errors exit 2") {
  CHECK(run_cli("report").exit_code == 2);
  CHECK(run_cli("report --family er").exit_code == 2);
  CHECK(run_cli("report --family bogus --h 4").exit_code == 2);
  CHECK(run_cli("report --family hard --h 3").exit_code == 2);
  CHECK(run_cli("report --family er --h 2 --seller-dist x.txt").exit_code ==
        2);
  CHECK(run_cli("report --seller-dist /nonexistent --buyer-dist /nonexistent")
            .exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("report on user-supplied point masses") {
  const auto seller = write_temp("bitrade_seller_point.txt", "5 1\n");
  const auto buyer = write_temp("bitrade_buyer_point.txt", "3 1\n");
  const auto result = run_cli("report --seller-dist " + seller.string() +
                              " --buyer-dist " + buyer.string());
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("opt = 0.000000000000") != std::string::npos);
  CHECK(result.out.find("ratio = undefined (opt = 0)") != std::string::npos);

  const auto json_result =
      run_cli("report --format json --seller-dist " + seller.string() +
              " --buyer-dist " + buyer.string());
  CHECK(json_result.exit_code == 0);
  CHECK(nlohmann::json::parse(json_result.out).at("ratio").is_null());

  fs::remove(seller);
  fs::remove(buyer);
}

TEST_CASE("malformed distribution file reports the line") {
  const auto bad = write_temp("bitrade_bad_dist.txt", "0 1/2\noops 1/2\n");
  const auto result = run_cli("report --seller-dist " + bad.string() +
                              " --buyer-dist " + bad.string());
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("line 2") != std::string::npos);
  fs::remove(bad);
}

TEST_CASE("sweep csv output") {
  const auto result = run_cli("sweep --h-min 4 --h-max 8 --step 1");
  REQUIRE(result.exit_code == 0);
  const auto lines = split_lines(result.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "H,opt,bo,so,ratio,ratio_lower,ratio_upper");
  CHECK(split_csv(lines[1])[0] == "4");
  CHECK(split_csv(lines[5])[0] == "8");

  // bo and so columns agree; the decimal ratio of H=4 is 17/24.
  const auto row4 = split_csv(lines[1]);
  CHECK(row4[2] == row4[3]);
  CHECK(row4[4] == Rational(17, 24).to_decimal(12));

  // Deterministic output: same flags, same bytes.
  const auto again = run_cli("sweep --h-min 4 --h-max 8 --step 1");
  CHECK(again.out == result.out);

  // The oracle source produces the identical file on this range.
  const auto oracle = run_cli("sweep --h-min 4 --h-max 8 --step 1 --source oracle");
  CHECK(oracle.out == result.out);
}

TEST_CASE("sweep exact columns re-render to the decimal columns") {
  const auto result = run_cli("sweep --h-min 4 --h-max 12 --step 4 --exact");
  REQUIRE(result.exit_code == 0);
  const auto lines = split_lines(result.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "H,opt,bo,so,ratio,ratio_lower,ratio_upper,opt_exact,bo_exact,"
        "so_exact,ratio_exact,ratio_lower_exact,ratio_upper_exact");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 13);
    for (int c = 1; c <= 6; ++c) {
      CHECK(Rational::parse(fields[c + 6]).to_decimal(12) == fields[c]);
    }
  }
}

TEST_CASE("sweep writes to a file and fails cleanly on a bad path") {
  const fs::path out = fs::temp_directory_path() / "bitrade_sweep_out.csv";
  const auto result =
      run_cli("sweep --h-min 4 --h-max 6 --step 1 --out " + out.string());
  CHECK(result.exit_code == 0);
  CHECK(split_lines(slurp(out)).size() == 4);
  fs::remove(out);

  CHECK(run_cli("sweep --h-min 4 --h-max 6 --step 1 --out /nonexistent-dir/x")
            .exit_code == 2);
  CHECK(run_cli("sweep --h-min 2 --h-max 6 --step 1").exit_code == 2);
  CHECK(run_cli("sweep --h-min 4").exit_code == 2);
}

TEST_CASE("verify exits 0 and reports progress") {
  const auto result = run_cli("verify --h-min 4 --h-max 12");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("H=4 ok") != std::string::npos);
  CHECK(result.out.find("H=12 ok") != std::string::npos);
  CHECK(result.out.find("agree exactly") != std::string::npos);

  CHECK(run_cli("verify --h-min 3 --h-max 12").exit_code == 2);
}

TEST_CASE("bestof prints the 3/4 comparison") {
  const auto result = run_cli("bestof");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("fixed price = 1") != std::string::npos);
  CHECK(result.out.find("second_best = opt = 1") != std::string::npos);
  CHECK(result.out.find("best_of/second_best = 3/4") != std::string::npos);
}

TEST_CASE("quote reproduces the offer table") {
  const auto s0 = run_cli("quote --side seller --value 0 --family hard --h 1000");
  CHECK(s0.exit_code == 0);
  CHECK(s0.out.find("price = 999") != std::string::npos);

  const auto b2 = run_cli("quote --side buyer --value 2 --family hard --h 1000");
  CHECK(b2.exit_code == 0);
  CHECK(b2.out.find("price = 0") != std::string::npos);

  const auto high =
      run_cli("quote --side seller --value 1001 --family hard --h 1000");
  CHECK(high.exit_code == 0);
  CHECK(high.out.find("price = never-trade") != std::string::npos);

  // Against a user-supplied counterparty file.
  const auto dist = write_temp("bitrade_quote_dist.txt", "1 1/2\n4 1/2\n");
  const auto from_file = run_cli("quote --side seller --value 0 --dist " +
                                 dist.string() + " --exact");
  CHECK(from_file.exit_code == 0);
  // max((1-0)*1, (4-0)*1/2) = 2 at price 4.
  CHECK(from_file.out.find("price = 4") != std::string::npos);
  CHECK(from_file.out.find("(2)") != std::string::npos);
  fs::remove(dist);

  CHECK(run_cli("quote --side seller --value -1 --family hard --h 10")
            .exit_code == 2);
  CHECK(run_cli("quote --side seller --family hard --h 10").exit_code == 2);
  CHECK(run_cli("quote --side seller --value 0").exit_code == 2);
}
