#include <doctest.h>

#include "hypcap/boundary_chart.hpp"
#include "hypcap/diameter_set.hpp"
#include "hypcap/geodesic.hpp"
#include "hypcap/grid_set.hpp"
#include "hypcap/hedgehog.hpp"

using namespace hypcap;

TEST_CASE("hedgehog normalization") {
    // touching intervals merge; intervals under the core attach to it
    Hedgehog h(0.3, {Spike{0.0, {{0.5, 0.6}, {0.6, 0.7}}},
                     Spike{0.0, {{0.1, 0.45}}},
                     Spike{2.0 * pi + 1e-12, {{0.8, 0.8}}}}); // degenerate, dropped
    REQUIRE(h.spikes().size() == 1);
    const auto& iv = h.spikes()[0].intervals;
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].first == doctest::Approx(0.3));
    CHECK(iv[0].second == doctest::Approx(0.45));
    CHECK(iv[1].first == doctest::Approx(0.5));
    CHECK(iv[1].second == doctest::Approx(0.7));

    // idempotent
    const Hedgehog again(h.core_radius(), h.spikes());
    CHECK(again.spikes().size() == h.spikes().size());
    CHECK(again.spikes()[0].intervals == h.spikes()[0].intervals);

    CHECK_THROWS_AS(Hedgehog(0.0, {Spike{0.0, {{0.5, 1.0}}}}), domain_error);
}

TEST_CASE("ray lengths and spike lengths") {
    Hedgehog h(0.2, {Spike{1.0, {{0.3, 0.5}, {0.6, 0.7}}}});
    const double expect =
        (tau_of_r(0.5) - tau_of_r(0.3)) + (tau_of_r(0.7) - tau_of_r(0.6));
    CHECK(Hedgehog::spike_hyp_length(h.spikes()[0]) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(h.ray_hyp_length(1.0) == doctest::Approx(tau_of_r(0.2) + expect).epsilon(1e-14));
    CHECK(h.ray_hyp_length(2.0) == doctest::Approx(tau_of_r(0.2)).epsilon(1e-14));
}

TEST_CASE("diameter set length and normalization") {
    const DiameterSet half = DiameterSet::from_euclidean({{0.0, 0.5}});
    CHECK(half.hyp_length() == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    const double r = 0.37;
    const DiameterSet sym = DiameterSet::from_euclidean({{-r, r}});
    CHECK(sym.hyp_length() == doctest::Approx(2.0 * tau_of_r(r)).epsilon(1e-14));

    // overlapping pieces merge; singletons vanish
    const DiameterSet m = DiameterSet::from_euclidean({{0.1, 0.3}, {0.2, 0.4}, {0.6, 0.6}});
    CHECK(m.intervals().size() == 1);

    // interval algebra round trip
    const auto eu = m.euclidean_intervals();
    CHECK(eu[0].first == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(eu[0].second == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("length is preserved when endpoints ride a reflection") {
    // reflect interval endpoints across a geodesic orthogonal to the
    // diameter: the image interval has the same hyperbolic length
    const Geodesic g = Geodesic::orthogonal_at(0.35, 0.0);
    for (auto [a, b] : {std::pair{-0.2, 0.1}, {0.4, 0.62}, {-0.8, -0.5}}) {
        const HypPoint ia = g.reflect(HypPoint(a, 0.0));
        const HypPoint ib = g.reflect(HypPoint(b, 0.0));
        const double before = std::abs(u_of_x(b) - u_of_x(a));
        const double after = std::abs(u_of_x(ib.re()) - u_of_x(ia.re()));
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
        CHECK(std::abs(ia.im()) < 1e-12); // reflection keeps the diameter
    }
}

TEST_CASE("hyp_length is additive over disjoint unions") {
    const DiameterSet a = DiameterSet::from_euclidean({{-0.5, -0.3}});
    const DiameterSet b = DiameterSet::from_euclidean({{0.1, 0.4}});
    CHECK(set_union(a, b).hyp_length() ==
          doctest::Approx(a.hyp_length() + b.hyp_length()).epsilon(1e-14));
}

TEST_CASE("grid area of a disk converges to the closed form") {
    const double r = 0.6;
    const double exact = hyp_area_disk(r);
    const GridSet coarse = GridSet::disk(64, 128, 0.95, r);
    const GridSet fine = GridSet::disk(128, 256, 0.95, r);
    const double err_coarse = std::abs(coarse.hyp_area() - exact);
    const double err_fine = std::abs(fine.hyp_area() - exact);
    // one ring of cells at the boundary bounds the rasterization error
    const int ring = int(r / coarse.dr());
    CHECK(err_coarse <= coarse.cell_hyp_area(ring) * coarse.n_theta());
    CHECK(err_fine * 2.0 <= err_coarse * 1.05);

    CHECK(GridSet(32, 64, 0.9).hyp_area() == 0.0);
}

TEST_CASE("half disk has exactly half the cells and half the area") {
    const int n_r = 48, n_t = 96;
    const GridSet full = GridSet::disk(n_r, n_t, 0.9, 0.6);
    const GridSet half = GridSet::rasterize(n_r, n_t, 0.9, [](std::complex<double> z) {
        return std::abs(z) <= 0.6 && z.imag() >= 0.0;
    });
    CHECK(half.occupied_count() * 2 == full.occupied_count());
    CHECK(half.hyp_area() == doctest::Approx(full.hyp_area() / 2.0).epsilon(1e-12));
}

TEST_CASE("boundary charts of hedgehogs") {
    // pure disk: one full circle
    const BoundaryChart disk = boundary_chart(Hedgehog::disk(0.5));
    REQUIRE(disk.pieces.size() == 1);
    CHECK(disk.pieces[0].kind == ChartPiece::Kind::circle_arc);
    CHECK(disk.pieces[0].periodic);

    // single spike, no core: one radial segment
    const BoundaryChart spike = boundary_chart(Hedgehog::single_spike(0.0, 0.0, 0.5));
    REQUIRE(spike.pieces.size() == 1);
    CHECK(spike.pieces[0].kind == ChartPiece::Kind::radial_segment);
    CHECK(spike.pieces[0].hyp_length() == doctest::Approx(std::log(3.0)).epsilon(1e-14));

    // core with an attached spike: circle plus segment, attached
    const BoundaryChart both = boundary_chart(Hedgehog(0.3, {Spike{0.0, {{0.3, 0.6}}}}));
    REQUIRE(both.pieces.size() == 2);
    CHECK(both.pieces[0].kind == ChartPiece::Kind::circle_arc);
    CHECK(both.pieces[1].kind == ChartPiece::Kind::radial_segment);
    CHECK(both.pieces[1].a == doctest::Approx(0.3));

    CHECK_THROWS_AS(boundary_chart(Hedgehog(0.0, {})), domain_error);
}

TEST_CASE("chart parametrization is by hyperbolic arc length") {
    const ChartPiece seg = ChartPiece::segment(0.3, 0.2, 0.8);
    const double len = seg.hyp_length();
    CHECK(len == doctest::Approx(tau_of_r(0.8) - tau_of_r(0.2)).epsilon(1e-14));
    // uniform steps in s are uniform in hyperbolic distance
    const HypPoint p0(seg.at(0.25 * len)), p1(seg.at(0.5 * len)), p2(seg.at(0.75 * len));
    CHECK(hyp_dist(p0, p1) == doctest::Approx(hyp_dist(p1, p2)).epsilon(1e-12));

    const ChartPiece arc = ChartPiece::circle(0.5, 0.0, 1.2);
    CHECK(arc.hyp_length() == doctest::Approx(2.0 * 0.5 * 1.2 / (1.0 - 0.25)).epsilon(1e-14));
}

TEST_CASE("hausdorff distance on samples") {
    const std::vector<HypPoint> a = {HypPoint(0.0, 0.0), HypPoint(0.2, 0.0)};
    CHECK(hausdorff_distance(a, a) == 0.0);
    const std::vector<HypPoint> b = {HypPoint(0.3, 0.0)};
    const std::vector<HypPoint> o = {HypPoint(0.0, 0.0)};
    CHECK(hausdorff_distance(o, b) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(hausdorff_distance(b, o) == hausdorff_distance(o, b));
    CHECK_THROWS_AS(hausdorff_distance({}, b), domain_error);
}
