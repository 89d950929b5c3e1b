#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gpl/scenario.hpp"

using namespace gpl;

TEST_CASE("all five built-in scenarios run clean") {
  for (const auto& name : builtin_scenario_names()) {
    CAPTURE(name);
    RunReport rep = run_scenario(builtin_scenario(name));
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.status == "ok");
  }
}

TEST_CASE("reports are byte-stable across runs") {
  for (const auto& name : {"rational-z4z4", "elliptic-fermat"}) {
    RunReport a = run_scenario(builtin_scenario(name));
    RunReport b = run_scenario(builtin_scenario(name));
    CHECK(a.payload.dump(2) == b.payload.dump(2));
    CHECK(a.text == b.text);
  }
}

TEST_CASE("the text report carries the divisor degree line") {
  RunReport rep = run_scenario(builtin_scenario("rational-z4z4"));
  CHECK(rep.text.find("deg D = 5") != std::string::npos);
  RunReport rep4 = run_scenario(builtin_scenario("rational-z5z5"));
  CHECK(rep4.text.find("deg D = 6") != std::string::npos);
}

TEST_CASE("editing the scenario-1 field to p = 3 is a config error") {
  json j = json::parse(builtin_scenario_text("rational-z4z4"));
  j["field"] = json{{"kind", "prime"}, {"p", 3}};
  CHECK_THROWS_AS(config_from_json(j), Error);
  try {
    config_from_json(j);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConfigError);
    CHECK(exit_code_for(e.code()) == kExitConfig);
  }
}

TEST_CASE("config validation") {
  json good = json::parse(builtin_scenario_text("rational-z4z4"));
  json bad = good;
  bad["g1"] = json::array({json::array({"1", "2", "2", "4"})}); // singular matrix
  CHECK_THROWS_AS(config_from_json(bad), Error);

  bad = good;
  bad["p1"] = json::array({"0", "0"});
  CHECK_THROWS_AS(config_from_json(bad), Error);

  bad = good;
  bad["curve"] = "hyperelliptic";
  CHECK_THROWS_AS(config_from_json(bad), Error);

  bad = good;
  bad.erase("field");
  CHECK_THROWS_AS(config_from_json(bad), Error);

  CHECK_THROWS_AS(builtin_scenario("no-such-scenario"), Error);
}

TEST_CASE("a failing point choice exits with the criterion code") {
  json j = json::parse(builtin_scenario_text("rational-z4z4"));
  j["p2"] = json::array({"0", "1"});
  RunReport rep = run_scenario(config_from_json(j));
  CHECK(rep.exit_code == kExitCriterion);
  CHECK(rep.status == "criterion-failed");
  CHECK(rep.payload["criterion"]["c"]["holds"] == false);
}

TEST_CASE("an expectation mismatch exits with its own code") {
  json j = json::parse(builtin_scenario_text("rational-z4z4"));
  j["expect"]["degree"] = 7;
  RunReport rep = run_scenario(config_from_json(j));
  CHECK(rep.exit_code == kExitExpectation);
  CHECK(rep.status == "expectation-mismatch");
}

TEST_CASE("search over F_7 finds the reduced witness pair") {
  json j;
  j["name"] = "search-f7";
  j["field"] = json{{"kind", "prime"}, {"p", 7}};
  j["mode"] = "inner";
  j["g1"] = json::array({json::array({"1", "-1", "1", "1"})});
  j["g2"] = json::array({json::array({"0", "1", "-1/2", "1"})});
  RunReport rep = run_search(config_from_json(j));
  CHECK(rep.exit_code == kExitOk);
  bool found = false;
  for (const auto& w : rep.payload["witnesses"])
    if (w["p1"] == json::array({"1", "4"}) || // (2:1) canonical over F_7 is (1:4)
        w["p1"] == json::array({"2", "1"}))
      if (w["deg_D"] == 5) found = true;
  CHECK(found);
}

TEST_CASE("search pre-filters condition (b) for equal groups") {
  json j;
  j["name"] = "search-equal";
  j["field"] = json{{"kind", "prime"}, {"p", 7}};
  j["mode"] = "inner";
  j["g1"] = json::array({json::array({"1", "-1", "1", "1"})});
  j["g2"] = json::array({json::array({"1", "-1", "1", "1"})});
  RunReport rep = run_search(config_from_json(j));
  CHECK(rep.payload["witnesses"].empty());
  CHECK(rep.payload["condition_b"]["holds"] == false);
}

TEST_CASE("search over the Klein pair mod 11 contains the rational witness") {
  json j;
  j["name"] = "search-klein-11";
  j["field"] = json{{"kind", "prime"}, {"p", 11}};
  j["mode"] = "inner";
  j["g1"] = json::array({json::array({"0", "2", "1", "0"}), json::array({"-1", "1", "-1/2", "1"})});
  j["g2"] = json::array({json::array({"0", "3", "1", "0"}), json::array({"-1", "1", "-1/3", "1"})});
  RunReport rep = run_search(config_from_json(j));
  bool found = false;
  for (const auto& w : rep.payload["witnesses"])
    if (w["p1"] == json::array({"1", "4"}) && w["p2"] == json::array({"1", "6"}))
      found = true; // (3:1) ~ (1:4) and (2:1) ~ (1:6) over F_11
  CHECK(found);
}

TEST_CASE("search over the rationals needs a candidate list") {
  json j;
  j["name"] = "search-q";
  j["field"] = json{{"kind", "rationals"}};
  j["mode"] = "inner";
  j["g1"] = json::array({json::array({"1", "-1", "1", "1"})});
  j["g2"] = json::array({json::array({"0", "1", "-1/2", "1"})});
  CHECK_THROWS_AS(run_search(config_from_json(j)), Error);

  j["candidates"] = json::array({json::array({"2", "1"}), json::array({"-1", "1"}),
                                 json::array({"0", "1"}), json::array({"1", "1"}),
                                 json::array({"1", "0"})});
  RunReport rep = run_search(config_from_json(j));
  CHECK(rep.payload["witnesses"].size() >= 1);
}

TEST_CASE("the full construction also runs over a finite field") {
  // reduction of the order-4 scenario mod 7; certificates check fibers
  // exhaustively over P^1(F_7)
  json j = json::parse(builtin_scenario_text("rational-z4z4"));
  j["name"] = "z4z4-mod-7";
  j["field"] = json{{"kind", "prime"}, {"p", 7}};
  j["char_not"] = json::array({2, 3});
  RunReport rep = run_scenario(config_from_json(j));
  CHECK(rep.exit_code == kExitOk);
  CHECK(rep.payload["criterion"]["deg_D"] == 5);
  CHECK(rep.payload["model"]["implicit_degree"] == 5);
  CHECK(rep.payload["model"]["certificates"]["f"]["holds"] == true);
  CHECK(rep.payload["model"]["certificates"]["g"]["holds"] == true);
}

TEST_CASE("outer-mode scenarios report the orbit-sum identity") {
  json j;
  j["name"] = "outer-shared-fixed-point";
  j["field"] = json{{"kind", "rationals"}};
  j["mode"] = "outer";
  // two distinct order-2 groups fixing 0; both orbit sums are 2*(0:1)
  j["g1"] = json::array({json::array({"-1", "0", "0", "1"})});
  j["g2"] = json::array({json::array({"1", "0", "1", "-1"})});
  j["q"] = json::array({"0", "1"});
  RunReport rep = run_scenario(config_from_json(j));
  CHECK(rep.exit_code == kExitOk);
  CHECK(rep.payload["criterion"]["deg_D"] == 2);

  j["q"] = json::array({"5", "1"});
  RunReport bad = run_scenario(config_from_json(j));
  CHECK(bad.exit_code == kExitCriterion);
}

TEST_CASE("emit writes files and reports io failures") {
  RunReport rep = run_scenario(builtin_scenario("rational-z4z4"));
  std::string path = "test_emit_output.json";
  emit(rep, "json", path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents == rep.payload.dump(2) + "\n");
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS(emit(rep, "json", "/nonexistent-dir/report.json"), Error);
  CHECK_THROWS_AS(emit(rep, "yaml", ""), Error);
}

TEST_CASE("exit code classes") {
  CHECK(exit_code_for(Errc::ConfigError) == kExitConfig);
  CHECK(exit_code_for(Errc::CapExceeded) == kExitConfig);
  CHECK(exit_code_for(Errc::BadCharacteristic) == kExitConfig);
  CHECK(exit_code_for(Errc::InfiniteField) == kExitConfig);
  CHECK(exit_code_for(Errc::IoError) == kExitIo);
  CHECK(exit_code_for(Errc::NoGeneratorFound) == kExitConstruction);
  CHECK(exit_code_for(Errc::PoleMismatch) == kExitConstruction);
  CHECK(exit_code_for(Errc::FitFailed) == kExitConstruction);
}

TEST_CASE("elliptic scenario pins its headline facts in JSON") {
  RunReport rep = run_scenario(builtin_scenario("elliptic-fermat"));
  CHECK(rep.payload["certificate"]["deg_D"] == 4);
  CHECK(rep.payload["certificate"]["Q"] == json::array({"1", "4", "5"}));
  CHECK(rep.payload["certificate"]["sigma_fixed_points"] == 3);
  CHECK(rep.payload["certificate"]["tau_fixed_points"] == 3);
  CHECK(rep.payload["model"]["quartic_degree"] == 4);
  CHECK(rep.payload["point_count"] == 27);
}

TEST_CASE("round-trip of field descriptors through JSON") {
  for (const char* text :
       {R"({"kind":"rationals"})", R"({"kind":"prime","p":19})",
        R"({"kind":"extension","minpoly":[-1,1,1]})"}) {
    FieldPtr f = field_from_json(json::parse(text));
    FieldPtr g = field_from_json(field_to_json(f));
    CHECK(f->equals(*g));
  }
}
