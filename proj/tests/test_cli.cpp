#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "greengb/cli.hpp"

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = greengb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GREENGB_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("ideal subcommand prints the tagged and untagged parts") {
  auto res = run_cli({"ideal", fixture("ex61.sgp"), "--side", "right", "--gen", "x"});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("<| x\n") != std::string::npos);
  CHECK(res.out.find("x x x - x x") != std::string::npos);
  CHECK(res.out.find("status: complete") != std::string::npos);

  auto left = run_cli({"ideal", fixture("ex61.sgp"), "--side", "left", "--gen", "x"});
  CHECK(left.exit_code == 0);
  CHECK(left.out.find("x |>") != std::string::npos);
}

TEST_CASE("green subcommand reproduces the symmetric-group classification") {
  auto res = run_cli({"green", fixture("sym2.sgp"), "--json"});
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["elements"] ==
        nlohmann::json({"e", "s", "e s", "s e", "s s", "e s e", "s e s"}));
  CHECK(j["r_classes"] == nlohmann::json({{0, 2}, {1, 4}, {3, 6}, {5}}));
  CHECK(j["l_classes"] == nlohmann::json({{0, 3}, {1, 4}, {2, 6}, {5}}));
  CHECK(j["h_classes"] == nlohmann::json({{0}, {1, 4}, {2}, {3}, {5}, {6}}));
  CHECK(j["reliable"] == true);
  CHECK(j["bases"]["s e s"]["right"] == nlohmann::json({"<| s e", "<| e s e"}));
  CHECK(j["bases"]["s e s"]["left"] == nlohmann::json({"e s |>", "e s e |>"}));

  SUBCASE("text mode carries the same content") {
    auto text = run_cli({"green", fixture("sym2.sgp")});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("R-classes: {e, e s} {s, s s} {s e, s e s} {e s e}") !=
          std::string::npos);
    CHECK(text.out.find("| s e | s e s |") != std::string::npos);
    CHECK(text.out.find("reliable: true") != std::string::npos);
  }
}

TEST_CASE("reduce subcommand") {
  auto res = run_cli({"reduce", fixture("ex33.sys"), "--poly",
                      "8 <| x y x x y y y + 5 <| y", "--trace"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("normal form: - 16 <| y x y y y + 24 <| y x y y + 5 <| y") !=
        std::string::npos);
  CHECK(res.out.find("\"rule\":0") != std::string::npos);

  SUBCASE("json mode") {
    auto json_res = run_cli({"reduce", fixture("ex33.sys"), "--poly",
                             "8 <| x y x x y y y + 5 <| y", "--json"});
    REQUIRE(json_res.exit_code == 0);
    auto j = nlohmann::json::parse(json_res.out);
    CHECK(j["normal_form"] == "- 16 <| y x y y y + 24 <| y x y y + 5 <| y");
    CHECK(j["steps"] == 3);
  }
  SUBCASE("randomized strategy stays deterministic per seed") {
    auto a = run_cli({"reduce", fixture("ex33.sys"), "--poly", "8 <| x y x x y y y + 5 <| y",
                      "--seed", "9"});
    auto b = run_cli({"reduce", fixture("ex33.sys"), "--poly", "8 <| x y x x y y y + 5 <| y",
                      "--seed", "9"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("member subcommand") {
  auto yes = run_cli({"member", fixture("sym2.sgp"), "--side", "right", "--gen", "e", "--elem",
                      "e s"});
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "member: yes\n");
  auto no = run_cli({"member", fixture("sym2.sgp"), "--side", "right", "--gen", "e", "--elem",
                     "s"});
  CHECK(no.exit_code == 0);
  CHECK(no.out == "member: no\n");

  SUBCASE("json and text agree") {
    auto j = run_cli({"member", fixture("sym2.sgp"), "--side", "right", "--gen", "e", "--elem",
                      "e s", "--json"});
    CHECK(nlohmann::json::parse(j.out)["member"] == true);
  }
}

TEST_CASE("complete subcommand") {
  auto res = run_cli({"complete", fixture("bicyclic.sgp")});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("status: complete") != std::string::npos);
  CHECK(res.out.find("i i - i") != std::string::npos);  // the added rule

  SUBCASE("mixed-system file") {
    auto mixed = run_cli({"complete", fixture("ex33.sys"), "--json"});
    REQUIRE(mixed.exit_code == 0);
    auto j = nlohmann::json::parse(mixed.out);
    CHECK(j["status"] == "complete");
  }
}

TEST_CASE("exit codes") {
  SUBCASE("bound exceeded is 2") {
    auto res = run_cli({"complete", fixture("bicyclic.sgp"), "--max-passes", "1"});
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("status: bound_exceeded") != std::string::npos);
  }
  SUBCASE("parse failures are 3") {
    CHECK(run_cli({"green", fixture("missing.sgp")}).exit_code == 3);
    CHECK(run_cli({"reduce", fixture("ex33.sys"), "--poly", "nope"}).exit_code == 3);
    CHECK(run_cli({"member", fixture("sym2.sgp"), "--side", "right", "--gen", "zz", "--elem",
                   "e"})
              .exit_code == 3);
  }
  SUBCASE("required finiteness violations are 4") {
    auto res = run_cli({"green", fixture("bicyclic.sgp")});
    CHECK(res.exit_code == 4);
    CHECK(res.err.find("truncated") != std::string::npos);
    // with an explicit bound the bounded portion is classified instead
    CHECK(run_cli({"green", fixture("bicyclic.sgp"), "--max-length", "4"}).exit_code == 0);
  }
  SUBCASE("usage errors are 5") {
    CHECK(run_cli({"unknown-subcommand"}).exit_code == 5);
    CHECK(run_cli({"green"}).exit_code == 5);
    CHECK(run_cli({"reduce", fixture("ex33.sys")}).exit_code == 5);  // missing --poly
    CHECK(run_cli({"ideal", fixture("ex61.sgp"), "--side", "sideways", "--gen", "x"}).exit_code ==
          5);
  }
  SUBCASE("help exits zero") {
    auto res = run_cli({"--help"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("green") != std::string::npos);
  }
}

TEST_SUITE_END();
