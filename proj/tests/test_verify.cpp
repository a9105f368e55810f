#include <doctest.h>

#include "hypcap/verify.hpp"

using namespace hypcap;

TEST_CASE("theorem id parsing round-trips") {
    for (const char* name : {"L3.1", "T3.35", "T4.8", "C4.10", "P2.12", "L5.30"}) {
        const auto id = parse_theorem(name);
        REQUIRE(id.has_value());
        CHECK(std::string(theorem_name(*id)) == name);
    }
    CHECK(!parse_theorem("T9.99").has_value());
}

TEST_CASE("closed-form monotonicity checks pass") {
    const CheckReport a = run_check(CheckSpec::defaults(TheoremId::T4_8));
    CHECK(a.verdict == "pass");
    const CheckReport b = run_check(CheckSpec::defaults(TheoremId::T4_1));
    CHECK(b.verdict == "pass");
    const CheckReport c = run_check(CheckSpec::defaults(TheoremId::C4_10));
    CHECK(c.verdict == "pass");
}

TEST_CASE("the inverted fixture fails as designed") {
    const CheckReport rep = run_check(CheckSpec::defaults(TheoremId::SELFTEST_INVERT));
    CHECK(rep.verdict == "fail");
    CHECK(rep.failed());
}

TEST_CASE("reports are reproducible from spec and seed") {
    CheckSpec spec = CheckSpec::defaults(TheoremId::L3_4);
    spec.scalars["configs"] = 2;
    spec.fekete.n_sequence = {8, 16};
    spec.fekete.restarts = 2;
    const CheckReport a = run_check(spec);
    const CheckReport b = run_check(spec);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
        CHECK(a.rows[k].lhs == b.rows[k].lhs);
        CHECK(a.rows[k].rhs == b.rows[k].rhs);
        CHECK(a.rows[k].margin == b.rows[k].margin);
        CHECK(a.rows[k].status == b.rows[k].status);
    }
}

TEST_CASE("open-problem sweep rows are observed-only below pi/2") {
    FeketeConfig cfg;
    cfg.n_sequence = {8, 16};
    cfg.restarts = 2;
    const SweepResult sweep =
        sweep_two_intervals({pi / 4.0}, {0.1, 0.3, 0.5}, 0.3, 0.8, cfg);
    CHECK(sweep.verdict == "observed-only");
    for (const auto& row : sweep.rows) CHECK(row.status == "observed");
}

TEST_CASE("sweep asserts monotonicity at and above pi/2") {
    FeketeConfig cfg;
    cfg.n_sequence = {16, 32};
    cfg.restarts = 3;
    const SweepResult sweep =
        sweep_two_intervals({pi / 2.0}, {0.1, 0.3, 0.5}, 0.3, 0.8, cfg);
    CHECK(sweep.verdict == "pass");
}

TEST_CASE("polarization rows pass at the default estimator scale") {
    // n below ~16 leaves too much finite-n bias for cross-set comparisons;
    // the default check scale resolves it
    CheckSpec spec = CheckSpec::defaults(TheoremId::P2_5);
    spec.scalars["configs"] = 3;
    spec.fekete.restarts = 3;
    const CheckReport rep = run_check(spec);
    CHECK(rep.verdict != "fail");
    // fixed-point configurations surface as equality candidates
    bool any_equality = false;
    for (const auto& row : rep.rows) any_equality = any_equality || row.equality_candidate;
    CHECK(any_equality);
}

TEST_CASE("unsupported scalars raise, unknown ids cannot be built") {
    CheckSpec spec = CheckSpec::defaults(TheoremId::T4_8);
    spec.scalars.erase("n");
    CHECK_THROWS(run_check(spec));
}
