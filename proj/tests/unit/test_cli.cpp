#include "doctest.h"
#include "runner.hpp"

using namespace twistmod;
using namespace twistmod::cli;

namespace {
const std::string kDir = TWISTMOD_CONFIG_DIR;

Json minimal() {
    return Json::parse(R"({
      "schemaVersion": 1,
      "algebra": {"type": "A", "rank": 1},
      "level": "2",
      "module": {"lambda": [0], "cutoff": "3"},
      "twistChain": [{"kind": "innerSemisimple", "element": {"h": "1/2"}}],
      "checks": ["delta"]
    })");
}
}  // namespace

TEST_CASE("config round trip is canonical") {
    const RunConfig c = parse_config(minimal());
    const Json j = to_json(c);
    CHECK(to_json(parse_config(j)) == j);
    CHECK(c.cutoff == Rational(3));
    REQUIRE(c.chain.size() == 1);
    CHECK(c.chain[0].kind == ChainStep::Kind::InnerSemisimple);
}

TEST_CASE("config validation") {
    Json j = minimal();
    j["unexpected"] = 1;
    CHECK_THROWS_AS(parse_config(j), TwistError);
    j = minimal();
    j["schemaVersion"] = 99;
    CHECK_THROWS_AS(parse_config(j), TwistError);
    j = minimal();
    j["checks"] = Json::array({"noSuchCheck"});
    CHECK_THROWS_AS(parse_config(j), TwistError);
    j = minimal();
    j["level"] = "x";
    CHECK_THROWS_AS(parse_config(j), TwistError);
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorCode::InvalidConfig) == 1);
    CHECK(exit_code_for(ErrorCode::CriticalLevel) == 10);
    CHECK(exit_code_for(ErrorCode::NotFixed) == 11);
    CHECK(exit_code_for(ErrorCode::NeedsFieldExtension) == 12);
    CHECK(exit_code_for(ErrorCode::Unsupported) == 13);
    CHECK(exit_code_for(ErrorCode::TruncationOverflow) == 20);
}

TEST_CASE("execute reports errors as structured output") {
    const auto out = execute(load_config(kDir + "/critical_level.json"), RunMode::Run);
    CHECK(out.exit_code == 10);
    CHECK(out.report["error"]["code"] == "CriticalLevel");
}

TEST_CASE("execute and render a small run") {
    const auto cfg = parse_config(minimal());
    const auto a = execute(cfg, RunMode::Run);
    const auto b = execute(cfg, RunMode::Run);
    CHECK(a.exit_code == 0);
    CHECK(render(a.report, "json") == render(b.report, "json"));
    CHECK_FALSE(a.report.contains("timing"));
    const std::string csv = render(a.report, "csv");
    CHECK(csv.rfind("section,path,value\n", 0) == 0);
    const auto t = execute(cfg, RunMode::Tables);
    CHECK(t.report.contains("modeTables"));
    CHECK(execute(cfg, RunMode::Run, true).report.contains("timing"));
}
