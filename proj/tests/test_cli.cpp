#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lemniscate/cli.hpp"
#include "lemniscate/constants.hpp"

using namespace lemniscate;
using lemniscate::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lemniscate_test_cli_" + name);
}

const std::string kL = cli::format_double(standard_constants().L);

}  // namespace

TEST_CASE("format_double") {
  CHECK(cli::format_double(0.0) == "0");
  CHECK(cli::format_double(-0.0) == "0");
  CHECK(cli::format_double(0.1) == "0.1");
  CHECK(cli::format_double(-2.5e-20) == "-2.5e-20");
  CHECK(std::stod(kL) == standard_constants().L);
}

TEST_CASE("function names") {
  for (const char* name : {"sl", "cl", "wp_pseudo", "wp_lem"}) {
    CHECK(cli::function_name(cli::parse_function(name)) == name);
  }
  CHECK_THROWS_AS(cli::parse_function("sn"), DomainError);
}

TEST_CASE("eval") {
  auto r = invoke({"eval", "sl", "0", "0"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "{\"function\":\"sl\",\"z\":{\"re\":0.0,\"im\":0.0},\"value\":{\"re\":0.0,\"im\":0.0}}\n");

  r = invoke({"eval", "sl", kL, "0"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("\"value\":{\"re\":1.0,") != std::string::npos);

  r = invoke({"eval", "cl", "0", kL});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("\"value\":\"pole\"") != std::string::npos);

  r = invoke({"eval", "wp_lem", "-1.5", "-0.25"});
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).size() == 1);
}

TEST_CASE("eval parse failures") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "sl", "abc", "0"},
           {"eval", "sl", "1"},
           {"eval", "tan", "0", "0"},
           {"eval", "sl", "nan", "0"},
           {"frobnicate"},
           {}}) {
    const auto r = invoke(args);
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("grid 2x2 over the unit square") {
  const auto path = temp_file("unit.csv");
  const auto r = invoke({"grid", "sl", "--xmin", "0", "--xmax", "1", "--ymin", "0", "--ymax", "1",
                         "--nx", "2", "--ny", "2", "--out", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(slurp(path));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "x,y,re,im,is_pole");
  CHECK(rows[1] == "0,0,0,0,0");
  CHECK(rows[2].rfind("1,0,", 0) == 0);
  CHECK(rows[3].rfind("0,1,0,", 0) == 0);
  CHECK(rows[4].rfind("1,1,", 0) == 0);
  CHECK(slurp(path).find('\r') == std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("grid marks the pole at L + iL and is byte stable") {
  const std::string two_l = cli::format_double(2.0 * standard_constants().L);
  const auto a = temp_file("pole_a.csv"), b = temp_file("pole_b.csv");
  for (const auto& path : {a, b}) {
    const auto r = invoke({"grid", "sl", "--xmin", "0", "--xmax", two_l, "--ymin", "0", "--ymax",
                           two_l, "--nx", "3", "--ny", "3", "--out", path.string()});
    REQUIRE(r.code == cli::kExitOk);
  }
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  const auto rows = lines(text);
  REQUIRE(rows.size() == 10);
  CHECK(rows[5] == kL + "," + kL + ",0,0,1");
  // the other rows are finite; cl poles are not on this grid
  int poles = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) poles += rows[i].back() == '1';
  CHECK(poles == 1);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("grid of every function") {
  for (const char* fn : {"sl", "cl", "wp_pseudo", "wp_lem"}) {
    const auto path = temp_file(std::string("fn_") + fn + ".csv");
    const auto r = invoke({"grid", fn, "--xmin", "-3", "--xmax", "3", "--ymin", "-2", "--ymax",
                           "2", "--nx", "7", "--ny", "5", "--out", path.string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(lines(slurp(path)).size() == 36);
    std::filesystem::remove(path);
  }
}

TEST_CASE("grid errors") {
  const auto path = temp_file("bad.csv");
  const auto base = [&](std::vector<std::string> extra) {
    std::vector<std::string> args{"grid", "sl", "--xmin", "0", "--xmax", "1", "--ymin", "0",
                                  "--ymax", "1", "--out", path.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  CHECK(base({"--nx", "0", "--ny", "2"}).code == cli::kExitUsage);
  CHECK(base({"--nx", "100000", "--ny", "100000"}).code == cli::kExitUsage);
  CHECK(base({"--nx", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"grid", "sl", "--xmin", "1", "--xmax", "1", "--ymin", "0", "--ymax", "1", "--nx",
                "2", "--ny", "2", "--out", path.string()})
            .code == cli::kExitUsage);
  CHECK_FALSE(std::filesystem::exists(path));

  const auto r = invoke({"grid", "sl", "--xmin", "0", "--xmax", "1", "--ymin", "0", "--ymax", "1",
                         "--nx", "2", "--ny", "2", "--out", "/nonexistent-dir/x/grid.csv"});
  CHECK(r.code == cli::kExitIo);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("constants") {
  auto r = invoke({"constants", "--digits", "11"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("K=0.92703733865\n") != std::string::npos);

  r = invoke({"constants", "--digits", "13"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("L=1.311028777146\n") != std::string::npos);
  CHECK(r.out.find("varpi=2.622057554292\n") != std::string::npos);

  r = invoke({"constants"});
  CHECK(r.code == cli::kExitOk);
  CHECK(lines(r.out).size() == 4);

  for (int digits = 1; digits <= 13; ++digits) {
    r = invoke({"constants", "--digits", std::to_string(digits)});
    REQUIRE(r.code == cli::kExitOk);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    const double L = std::stod(ls[1].substr(2));
    const double varpi = std::stod(ls[2].substr(6));
    // varpi is printed as twice the printed L, up to the last rounded digit
    CHECK(std::abs(varpi - 2.0 * L) <= 2.0 * std::pow(10.0, 1 - digits));
  }

  CHECK(invoke({"constants", "--digits", "0"}).code == cli::kExitUsage);
  CHECK(invoke({"constants", "--digits", "14"}).code == cli::kExitUsage);
}

TEST_CASE("check") {
  const auto a = invoke({"check"});
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out.find("result=pass\n") != std::string::npos);
  CHECK(a.out == invoke({"check"}).out);

  const auto strict = invoke({"check", "--tol", "1e-20"});
  CHECK(strict.code == cli::kExitCheckFailed);
  CHECK(strict.out.find("result=fail\n") != std::string::npos);

  const auto one = invoke({"check", "--seed", "5", "--samples", "1"});
  CHECK(one.out == invoke({"check", "--seed", "5", "--samples", "1"}).out);
  CHECK(invoke({"check", "--samples", "0"}).code == cli::kExitUsage);
}
