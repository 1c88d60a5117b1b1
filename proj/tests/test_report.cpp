#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "kothe/report.hpp"

using namespace kothe;
using namespace kothe::report;

namespace {

Report sample_report() {
    la::Rng rng(0xC0FFEE);
    qv::Quiver q = qv::parse_quiver(
        "quiver B2 { vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4; }");
    Report r;
    r.command = "analyze";
    r.tool_version = "1.0.0";
    r.input_path = "data/b2.quiver";
    r.input_digest = "fnv1a64:" + fnv1a64_hex("example");
    r.field = "GF(5)";
    r.seed = "0xc0ffee";
    r.verdict = decide::verdict_for_quiver(q, la::Field::gfp(5), 2, rng, false);
    r.representation =
        RepFacts{"(2,1,1,1)", "(2,0,0,0)", "(2,1,1,1)", "(0,1,1,1)", true, 2};
    r.matrix_degree = decide::MatrixDegree{2, 5};
    return r;
}

}  // namespace

TEST_CASE("fnv digest is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
}

TEST_CASE("report JSON round-trips exactly") {
    Report r = sample_report();
    std::string bytes = dump_json(r);
    Report r2 = from_json(nlohmann::json::parse(bytes));
    CHECK(r == r2);
    CHECK(dump_json(r2) == bytes);
}

TEST_CASE("identical inputs and seed produce byte-identical JSON") {
    std::string b1 = dump_json(sample_report());
    std::string b2 = dump_json(sample_report());
    CHECK(b1 == b2);
}

TEST_CASE("reports validate against the shipped schema") {
    nlohmann::json schema = nlohmann::json::parse(schema_v1_text());
    Report r = sample_report();
    auto errors = validate_against_schema(to_json(r), schema);
    for (const auto& e : errors) INFO(e);
    CHECK(errors.empty());

    // a verdict-less report (indec listing) also validates
    Report l;
    l.command = "indec";
    l.tool_version = "1.0.0";
    l.field = "QQ";
    l.seed = "0x1";
    l.indecomposables.push_back({"(1,1)", "(1,0)", "(0,1)"});
    auto errors2 = validate_against_schema(to_json(l), schema);
    CHECK(errors2.empty());

    // the validator rejects structural damage
    nlohmann::json broken = to_json(r);
    broken.erase("seed");
    CHECK(!validate_against_schema(broken, schema).empty());
    broken = to_json(r);
    broken["verdict"]["profile"]["m"] = "four";
    CHECK(!validate_against_schema(broken, schema).empty());
}

TEST_CASE("the schema file on disk matches the embedded text") {
    std::ifstream in(std::string(KOTHE_SOURCE_DIR) + "/data/report-v1.schema.json",
                     std::ios::binary);
    REQUIRE(in.good());
    std::string disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(disk == schema_v1_text());
}
