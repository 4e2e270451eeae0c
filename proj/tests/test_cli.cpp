#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = consta::cli::run(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("factor") {
  const Run r = run({"factor", "--p", "3", "--n", "4", "--lambda", "2"});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["factors"] == json::parse("[[2,1,1],[2,2,1]]"));
  CHECK(d["orbits"] == json::parse("[[0,1],[2,3]]"));
  CHECK(d["basis"]["t"] == 1);

  const Run h = run({"factor", "--p", "2", "--n", "7"});
  REQUIRE(h.code == 0);
  CHECK(h.doc()["factors"].size() == 3);
}

TEST_CASE("input errors exit with 2") {
  const Run r = run({"factor", "--p", "3", "--n", "6", "--lambda", "2"});
  CHECK(r.code == 2);
  CHECK(r.doc()["error"]["kind"] == "input");
  CHECK(run({"factor", "--p", "4", "--n", "3"}).code == 2);
  CHECK(run({"code", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "1,1"}).code == 2);
  CHECK(run({"code", "--p", "3", "--n", "4", "--lambda", "2", "--gen-set", "0,1,2"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"product", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "2,1,1"}).code == 2);
  CHECK(run({"verify", "--grid-n", "40"}).code == 2);
}

TEST_CASE("negacyclic square") {
  const Run r = run({"product", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "2,1,1", "--generator",
                     "2,1,1"});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["agree"] == true);
  CHECK(d["code"]["generator"] == json::parse("[2,1]"));
  CHECK(d["code"]["dim"] == 3);
  CHECK(d["products"].size() == 3);
}

TEST_CASE("mismatched lengths are rejected") {
  std::filesystem::path tmp = std::filesystem::temp_directory_path() / "consta_cli_len5.json";
  REQUIRE(run({"code", "--p", "2", "--n", "5", "--generator", "1", "--out", tmp.string()}).code == 0);
  const Run r = run({"product", "--code", tmp.string(), "--p", "2", "--n", "7", "--generator", "1,1,0,1"});
  CHECK(r.code == 2);
  std::filesystem::remove(tmp);
}

TEST_CASE("powers and dual") {
  const Run p = run({"powers", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "2,1,1"});
  REQUIRE(p.code == 0);
  CHECK(p.doc()["bounds"]["sequence"] == json::parse("[2,3,4]"));
  CHECK(p.doc()["bounds"]["r"] == 3);
  const Run deg = run({"powers", "--p", "5", "--n", "4", "--generator", "1,0,1"});
  REQUIRE(deg.code == 0);
  CHECK(deg.doc()["bounds"]["sequence"] == json::parse("[2]"));

  const Run d = run({"dual", "--p", "2", "--n", "7", "--generator", "1,1,0,1"});
  REQUIRE(d.code == 0);
  CHECK(d.doc()["set"] == json::parse("[3,5,6]"));
  CHECK(d.doc()["dual"]["dim"] == 3);
  CHECK(d.doc()["agree"] == true);
}

TEST_CASE("transform") {
  const Run r = run({"transform", "--p", "3", "--n", "4", "--lambda", "2", "--vector", "2,1,1,0"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["support"] == json::parse("[2,3]"));
  CHECK(r.doc()["rational"] == true);
  CHECK(run({"transform", "--p", "3", "--n", "4", "--lambda", "2", "--vector", "1,2"}).code == 2);
}

TEST_CASE("code descriptors round trip through files") {
  std::filesystem::path tmp = std::filesystem::temp_directory_path() / "consta_cli_code.json";
  REQUIRE(run({"code", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "2,1,1", "--out", tmp.string()})
              .code == 0);
  const Run again = run({"code", "--code", tmp.string()});
  REQUIRE(again.code == 0);
  std::ifstream in(tmp);
  std::stringstream saved;
  saved << in.rdbuf();
  CHECK(again.out == saved.str());
  const Run sq = run({"product", "--code", tmp.string(), "--code", tmp.string(), "--method", "gcd"});
  CHECK(sq.code == 0);
  CHECK(sq.doc()["code"]["generator"] == json::parse("[2,1]"));
  std::filesystem::remove(tmp);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"powers", "--p", "2", "--degrees", "2", "--n", "5", "--generator", "1"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> v{"verify", "--grid-q", "2", "3", "--grid-n", "6"};
  CHECK(run(v).out == run(v).out);
}

TEST_CASE("other formats") {
  const Run csv = run({"code", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "2,1,1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("q,n,lambda,generator,dim", 0) == 0);
  const Run text = run({"powers", "--p", "3", "--n", "4", "--lambda", "2", "--generator", "2,1,1", "--format", "text"});
  CHECK(text.out.find("r = 3") != std::string::npos);
}

TEST_CASE("verify") {
  const Run small = run({"verify", "--grid-q", "2", "3", "--grid-n", "4"});
  CHECK(small.doc()["checks"]["product.sumset_equals_gcd"]["failed"] == 0);
  const Run fault = run({"verify", "--grid-q", "2", "3", "--grid-n", "4", "--inject-fault"});
  CHECK(fault.code == 1);
  CHECK(fault.doc()["checks"]["product.sumset_equals_gcd"]["failed"] == 1);
}

TEST_CASE("bracketed values stay whole") {
  const Run r = run({"code", "--p", "3", "--degrees", "2", "--n", "4", "--lambda", "[1,2]", "--generator", "[1]"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["code"]["lambda"] == json::parse("[1,2]"));
  CHECK(run({"code", "--p", "3", "--degrees", "2", "--n", "4", "--lambda", "1,2", "--generator", "1"}).doc() ==
        r.doc());
  const Run t = run({"transform", "--p", "3", "--degrees", "2", "--n", "2", "--lambda", "2", "--vector", "[[1,1],2]"});
  REQUIRE(t.code == 0);
  CHECK(t.doc()["round_trip"] == true);
}
