#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kah/cli.hpp"
#include "kah/io.hpp"
#include "test_util.hpp"

using namespace kah;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("kahtool_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string matrix_text(const CMatrix& g) { return io::matrix_to_json(g).dump(); }

}  // namespace

TEST_CASE("table command") {
  const Result r = run({"table"});
  CHECK(r.code == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j[1][2] == json{{"sign", 1}, {"e", 3}});
  CHECK(j[5][5] == json{{"sign", -1}, {"e", 0}});
  const MultTable t = io::table_from_json(j);
  CHECK(t.entry[6][2] == TableEntry{-1, 4});
}

TEST_CASE("check command") {
  const std::string id = write_temp("id.json", matrix_text(CMatrix::Identity()));
  CHECK(run({"check", id, "--group", "g2c"}).code == cli::kOk);
  const std::string t1 = write_temp("t1.json", matrix_text(one_param(OneParamKind::A1, 1.0).matrix));
  const Result r = run({"check", t1, "--group", "sl3c"});
  CHECK(r.code == cli::kMathFailure);
  CHECK(json::parse(r.out)["report"]["fixes_e1"]["ok"] == false);
  const std::string s1 =
      write_temp("s1.json", matrix_text(one_param(OneParamKind::A0tilde, 1.0).matrix));
  CHECK(run({"check", s1, "--group", "spin7c"}).code == cli::kOk);
  CHECK(run({"check", "-", "--group", "so7c"}, matrix_text(CMatrix::Identity())).code == cli::kOk);
}

TEST_CASE("parse and usage failures exit 2") {
  CHECK(run({"check", "-", "--group", "g2c"}, "{not json").code == cli::kIoFailure);
  CHECK(run({"check", "-", "--group", "g2c"}, "{\"rows\": []}").code == cli::kIoFailure);
  CHECK(run({"check", "/nonexistent/kah.json", "--group", "g2c"}).code == cli::kIoFailure);
  CHECK(run({"check", "-", "--group", "e8"}, matrix_text(CMatrix::Identity())).code ==
        cli::kIoFailure);
  CHECK(run({"decompose", "-", "--pair", "r9"}, matrix_text(CMatrix::Identity())).code ==
        cli::kIoFailure);
  CHECK(run({"bogus"}).code == cli::kIoFailure);
  CHECK(run({}).code == cli::kIoFailure);
  CHECK(run({"random", "--group", "g2c", "--scale", "4"}).code == cli::kIoFailure);
  CHECK(run({"realform", "--algebra", "sl3c"}).code == cli::kIoFailure);
}

TEST_CASE("decompose command") {
  const Result id = run({"decompose", "-", "--pair", "r2"}, matrix_text(CMatrix::Identity()));
  REQUIRE(id.code == cli::kOk);
  const KAHFactors f = io::factors_from_json(json::parse(id.out));
  CHECK(f.theta == 0.0);
  CHECK(f.k == CMatrix::Identity());
  CHECK(test::frob(f.h - CMatrix::Identity()) == 0.0);

  const Result a =
      run({"decompose", "-", "--pair", "r1"}, matrix_text(one_param(OneParamKind::A0, 1.0).matrix));
  REQUIRE(a.code == cli::kOk);
  CHECK(std::abs(json::parse(a.out)["theta"].get<double>() - 1.0) <= 1e-9);

  const Result bad = run({"decompose", "-", "--pair", "r2"},
                         matrix_text(one_param(OneParamKind::A0, 1.0).matrix));
  CHECK(bad.code == cli::kMathFailure);
  CHECK_FALSE(bad.err.empty());

  // a residual tolerance below what double precision can reach
  const Result tight = run({"decompose", "-", "--pair", "r2", "--tol", "1e-30"},
                           run({"random", "--group", "g2c", "--seed", "3"}).out);
  CHECK(tight.code == cli::kMathFailure);
}

TEST_CASE("random command") {
  const Result zero = run({"random", "--group", "g2c", "--seed", "1", "--scale", "0"});
  REQUIRE(zero.code == cli::kOk);
  CHECK(io::matrix_from_json(json::parse(zero.out)) == CMatrix::Identity());
  for (const char* g : {"so7c", "spin7c", "g2c", "sl3c", "so7", "spin7", "g2", "su3"}) {
    const Result r = run({"random", "--group", g, "--seed", "5", "--scale", "2"});
    REQUIRE(r.code == cli::kOk);
    CHECK(run({"check", "-", "--group", g}, r.out).code == cli::kOk);
    CHECK(run({"random", "--group", g, "--seed", "5", "--scale", "2"}).out == r.out);
  }
}

TEST_CASE("visible command") {
  for (const char* p : {"r1", "r1p", "r2"}) {
    const Result r = run({"visible", "--pair", p, "--samples", "50"});
    CHECK(r.code == cli::kOk);
    const json j = json::parse(r.out);
    CHECK(j["s1_residual"] == 0.0);
    CHECK(j["ok"] == true);
  }
}

TEST_CASE("realform command") {
  const Result g = run({"realform", "--algebra", "g2c"});
  REQUIRE(g.code == cli::kOk);
  const json j = json::parse(g.out);
  CHECK(j["dim"] == 14);
  CHECK(j["rank"] == 2);
  CHECK(j["signature"]["pos"].get<int>() + j["signature"]["neg"].get<int>() == 14);
  const Result s = run({"realform", "--algebra", "so7c"});
  REQUIRE(s.code == cli::kOk);
  CHECK(json::parse(s.out)["dim"] == 21);
  CHECK(json::parse(s.out)["rank"] == 3);
}

TEST_CASE("tolerance flags") {
  const std::string m = matrix_text(random_element(GroupTag::G2C, 2, 1.0));
  CHECK(run({"--tol-membership", "1e-30", "check", "-", "--group", "g2c"}, m).code ==
        cli::kMathFailure);
  CHECK(run({"--tol-membership", "-1", "check", "-", "--group", "g2c"}, m).code == cli::kIoFailure);
}
