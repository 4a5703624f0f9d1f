#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ggl/cli.hpp"
#include "ggl/groupoid.hpp"

using ggl::cli::run;

namespace {

  struct Result {
    int         code = 0;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("table") {
  auto r = call({"table", "--carrier", "zn:7", "--shape", "scalar", "--pair", "3,4"});
  CHECK(r.code == 0);
  auto t = ggl::table_from_tsv(r.out);
  CHECK(t.labels.size() == 7);
  CHECK(t.cells[1][0] == 3);

  auto j = call({"table", "--carrier", "zni:3", "--pair", "I,2I", "--format", "json"});
  CHECK(j.code == 0);
  auto tj = ggl::table_from_json_text(j.out);
  CHECK(tj.labels == std::vector<std::string>{"0", "I", "2I"});
  CHECK(tj == ggl::table_from_tsv(call({"table", "--carrier", "zni:3", "--pair", "I,2I"}).out));
}

TEST_CASE("check") {
  auto r = call({"check", "--carrier", "zn:12", "--pair", "4,9", "--identity", "associative"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "holds");
  CHECK(j.at("identity") == "associative");

  auto bol = nlohmann::json::parse(
      call({"check", "--carrier", "zn:4", "--pair", "2,3", "--identity", "bol", "--mode", "exhaustive"}).out);
  CHECK(bol.at("status") == "fails");
  CHECK(bol.contains("witness"));

  auto alt = nlohmann::json::parse(call({"check", "--carrier", "zn:5", "--pair", "3,3", "--identity", "alternative"}).out);
  REQUIRE(alt.is_array());
  CHECK(alt.size() == 2);

  auto s1 = call({"check", "--carrier", "zn:10", "--shape", "mat:3x3", "--pair", "2,3", "--identity", "moufang",
                  "--mode", "sampled:200:5"});
  auto s2 = call({"check", "--carrier", "zn:10", "--shape", "mat:3x3", "--pair", "2,3", "--identity", "moufang",
                  "--mode", "sampled:200:5"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("structure") {
  auto r = call({"structure", "--carrier", "zni:4", "--pair", "3,2", "--max-order", "20"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("order") == 4);
  auto right = j.at("ideals").at("right");
  CHECK(std::find(right.begin(), right.end(), nlohmann::json{"0", "2I"}) != right.end());
}

TEST_CASE("count") {
  auto r = call({"count", "--carrier", "nzn:3", "--class", "all-pairs"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("56\n", 0) == 0);
  auto j = nlohmann::json::parse(
      call({"count", "--carrier", "zni:6", "--class", "idempotent-pairs", "--equal-pairs", "--format", "json"}).out);
  CHECK(j.at("count") == 4);
  CHECK(j.at("equal_pairs") == true);
  CHECK(j.contains("provenance"));
}

TEST_CASE("demo") {
  auto r = call({"demo", "--example", "2.1.1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(3,2,1)∗(1,0,3) = (1,0,3)") != std::string::npos);
  CHECK(r.out.find("(2,2,0)") != std::string::npos);
  auto list = call({"demo", "--list"});
  CHECK(list.out.find("2.2.1") != std::string::npos);
  CHECK(call({"demo", "--example", "9.9.9"}).code == 2);
}

TEST_CASE("verify") {
  auto a = call({"verify", "--suite", "default", "--only", "T13,T1", "--range", "n=3..8", "--seed", "42", "--no-timing"});
  auto b = call({"verify", "--suite", "default", "--only", "T13,T1", "--range", "n=3..8", "--seed", "42", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[0].at("id") == "T13");
  CHECK_FALSE(j.contains("timing"));
  CHECK(nlohmann::json::parse(call({"verify", "--only", "T13"}).out).contains("timing"));

  auto failing = call({"verify", "--only", "T8", "--range", "n=5..10", "--no-timing"});
  CHECK(failing.code == 1);
  CHECK(call({"verify", "--only", "T404"}).code == 2);
  CHECK(call({"verify", "--suite", "other"}).code == 2);
}

TEST_CASE("usage and budget errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"table", "--carrier", "zn:7", "--pair", "3,4", "--colour"}).code == 2);
  CHECK(call({"table", "--carrier", "zx:7", "--pair", "3,4"}).code == 2);
  CHECK(call({"table", "--carrier", "zn:7", "--shape", "mat:2", "--pair", "3,4"}).code == 2);
  CHECK(call({"table", "--carrier", "zn:7", "--pair", "3"}).code == 2);
  CHECK(call({"table", "--carrier", "zn:7", "--pair", "3,4,5"}).code == 2);
  CHECK(call({"table", "--carrier", "zn:7", "--pair", "0,0"}).code == 2);
  CHECK(call({"check", "--carrier", "zn:7", "--pair", "3,4", "--identity", "nope"}).code == 2);

  auto big = call({"table", "--carrier", "zn:500", "--pair", "1,2"});
  CHECK(big.code == 3);
  auto j = nlohmann::json::parse(big.err);
  CHECK(j.at("error") == "budget-exceeded");
  CHECK(j.at("required") == 500);

  auto ex = call({"check", "--carrier", "zn:7", "--shape", "mat:2x2", "--pair", "3,4", "--identity", "bol",
                  "--mode", "exhaustive"});
  CHECK(ex.code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("pair splitting") {
  auto p = ggl::cli::split_pair("2I,3");
  CHECK(p.t == "2I");
  CHECK(p.u == "3");
  CHECK_THROWS(ggl::cli::split_pair(",3"));
}
