#include <doctest.h>

#include "hypcap/io.hpp"
#include "hypcap/polarize.hpp"

using namespace hypcap;

TEST_CASE("hedgehog descriptions round-trip exactly") {
    const json j = json::parse(R"({
        "type": "hedgehog",
        "core_radius": 0.3,
        "spikes": [
            {"angle": 0.0, "intervals": [[0.3, 0.5], [0.6, 0.7]]},
            {"angle": 1.5707963267948966, "intervals": [[0.4, 0.8]]}
        ]})");
    const AnySet s = parse_set(j);
    REQUIRE(std::holds_alternative<Hedgehog>(s));
    const json out = emit_set(s);
    // parse(emit) is the identity on normalized sets
    const AnySet s2 = parse_set(out);
    CHECK(emit_set(s2) == out);
    CHECK(out["core_radius"].get<double>() == 0.3);
    CHECK(out["radii_hyperbolic"].get<bool>() == false);
}

TEST_CASE("hyperbolic radii are converted on parse") {
    const json j = json::parse(R"({
        "type": "diameter", "radii_hyperbolic": true,
        "intervals": [[0.0, 1.0986122886681098]]})");
    const AnySet s = parse_set(j);
    const auto& d = std::get<DiameterSet>(s);
    CHECK(d.euclidean_intervals()[0].second == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("diameter descriptions round-trip") {
    const json j = json::parse(R"({"type":"diameter","intervals":[[-0.5,-0.2],[0.1,0.4]]})");
    const json out = emit_set(parse_set(j));
    const json out2 = emit_set(parse_set(out));
    CHECK(out == out2);
}

TEST_CASE("grid RLE encoding round-trips exactly") {
    GridSet g(8, 16, 0.9);
    g.set(0, 0);
    g.set(3, 7);
    g.set(3, 8);
    g.set(7, 15);
    const json out = emit_set(AnySet(g));
    const AnySet back = parse_set(out);
    const auto& g2 = std::get<GridSet>(back);
    CHECK(g2 == g);
    // runs must cover the grid exactly
    json bad = out;
    bad["cells"].push_back(4);
    CHECK_THROWS_AS(parse_set(bad), std::invalid_argument);
}

TEST_CASE("malformed descriptions are rejected") {
    CHECK_THROWS_AS(parse_set(json::parse(R"({"no_type": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_set(json::parse(R"({"type":"sphere"})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_set(json::parse(R"({"type":"diameter","intervals":[[0.1]]})")),
                    std::invalid_argument);
    // invariant violations surface as domain errors
    CHECK_THROWS_AS(parse_set(json::parse(
                        R"({"type":"hedgehog","core_radius":0.5,"spikes":[{"angle":0,"intervals":[[0.5,1.0]]}]})")),
                    domain_error);
}

TEST_CASE("capacity and estimate records serialize with stable keys") {
    const CapacityValue v = capacity_of(Hedgehog::disk(0.5));
    const json j = emit_capacity(v);
    CHECK(j["provenance"] == "closed_form");
    CHECK(j["closed_form"]["formula"] == "disk");
    CHECK(j.begin().key() == "cap"); // ordered_json preserves insertion order

    FeketeConfig cfg;
    cfg.n_sequence = {8, 16};
    cfg.restarts = 2;
    const auto est = estimate_capacity(DiameterSet::from_euclidean({{0.1, 0.3}, {0.5, 0.6}}), cfg);
    const json ej = emit_estimate(est);
    CHECK(ej["n"].size() == 2);
    CHECK(ej["cap_upper_bounds"].size() == 2);
    CHECK(ej["fekete_points"].size() == 16);
    // identical runs serialize to identical bytes
    const auto est2 = estimate_capacity(DiameterSet::from_euclidean({{0.1, 0.3}, {0.5, 0.6}}), cfg);
    CHECK(emit_estimate(est2).dump() == ej.dump());
}

TEST_CASE("transform reports serialize") {
    TransformReport rep;
    const DiameterSet e = DiameterSet::from_euclidean({{-0.4, 0.2}});
    polarize_diameter(e, 0.1, true, &rep);
    const json j = emit_transform_report(rep);
    CHECK(j["transform"] == "polarize_diameter");
    CHECK(j["preserved"].contains("hyp_length"));
}

TEST_CASE("CSV writer emits header and LF rows") {
    CsvWriter csv({"alpha", "t", "cap"});
    csv.row({CsvWriter::num(0.5), CsvWriter::num(0.1), CsvWriter::num(3.14159)});
    const std::string s = csv.str();
    CHECK(s.substr(0, 12) == "alpha,t,cap\n");
    CHECK(s.find("\r") == std::string::npos);
    CHECK(s.back() == '\n');
}
