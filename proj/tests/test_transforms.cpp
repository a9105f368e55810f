#include <doctest.h>

#include <random>

#include "hypcap/motion.hpp"
#include "hypcap/polarize.hpp"
#include "hypcap/symmetrize.hpp"

using namespace hypcap;

// Brute-force oracle for diameter polarization: pointwise membership of
// ((E u RE) n H+) u ((E n RE) n H-) on a fine u grid.
static bool oracle_member(const std::vector<std::pair<double, double>>& e, double u, double u0,
                          bool origin_positive) {
    auto in = [&](double x) {
        for (auto [lo, hi] : e)
            if (x >= lo - 1e-12 && x <= hi + 1e-12) return true;
        return false;
    };
    const double refl = 2.0 * u0 - u;
    const bool in_e = in(u), in_re = in(refl);
    const bool plus_side = origin_positive ? (u <= u0) : (u >= u0);
    return plus_side ? (in_e || in_re) : (in_e && in_re);
}

TEST_CASE("diameter polarization: symmetric sets are fixed") {
    const DiameterSet e = DiameterSet::from_u_intervals({{-1.0, -0.2}, {0.6, 1.4}});
    // symmetric about u0 = 0.2? reflection of [0.6,1.4] is [-1.0,-0.2]: yes
    const DiameterSet p = polarize_diameter(e, x_of_u(0.2));
    CHECK(p.approx_equal(e, 1e-12));
}

TEST_CASE("diameter polarization reproduces the interval-merge configuration") {
    // E = E0 u [b2, c(b2)] with E0 left of the geodesic; polarizing across
    // the midpoint of [b1, c(b2)] yields E0 u [b1, c(b1)].
    const double tau = 0.9;
    const double ub1 = 0.4, ub2 = 1.3;
    const std::vector<std::pair<double, double>> e0 = {{-1.5, -0.8}, {-0.4, 0.1}};
    std::vector<DiameterSet::Interval> iv;
    for (auto [lo, hi] : e0) iv.push_back({lo, hi});
    iv.push_back({ub2, ub2 + tau});
    const DiameterSet e = DiameterSet::from_u_intervals(iv);
    const double mid = 0.5 * (ub1 + ub2 + tau);
    TransformReport rep;
    const DiameterSet p = polarize_diameter(e, x_of_u(mid), true, &rep);
    std::vector<DiameterSet::Interval> expect_iv;
    for (auto [lo, hi] : e0) expect_iv.push_back({lo, hi});
    expect_iv.push_back({ub1, ub1 + tau});
    CHECK(p.approx_equal(DiameterSet::from_u_intervals(expect_iv), 1e-12));
    CHECK(rep.preserved.at("hyp_length").before ==
          doctest::Approx(rep.preserved.at("hyp_length").after).epsilon(1e-13));
}

TEST_CASE("diameter polarization matches the brute-force oracle") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<double, double>> e;
        std::vector<DiameterSet::Interval> iv;
        double u = -2.0 + unit(rng);
        const int parts = 1 + int(unit(rng) * 3);
        for (int k = 0; k < parts; ++k) {
            const double len = 0.1 + unit(rng);
            e.emplace_back(u, u + len);
            iv.push_back({u, u + len});
            u += len + 0.1 + unit(rng);
        }
        const DiameterSet in = DiameterSet::from_u_intervals(iv);
        const double u0 = -1.5 + 3.0 * unit(rng);
        const bool orient = unit(rng) < 0.5;
        const DiameterSet out = polarize_diameter(in, x_of_u(u0), orient);
        CHECK(out.hyp_length() == doctest::Approx(in.hyp_length()).epsilon(1e-12));
        auto member_out = [&](double uu) {
            for (const auto& i : out.intervals())
                if (uu >= i.lo - 1e-12 && uu <= i.hi + 1e-12) return true;
            return false;
        };
        for (double uu = -4.0; uu <= 4.0; uu += 0.008) {
            if (std::abs(uu - u0) < 2e-2) continue; // boundary cells are ambiguous
            bool near_edge = false;
            for (const auto& i : out.intervals())
                if (std::abs(uu - i.lo) < 2e-2 || std::abs(uu - i.hi) < 2e-2) near_edge = true;
            for (auto [lo, hi] : e)
                if (std::abs(uu - lo) < 2e-2 || std::abs(uu - hi) < 2e-2 ||
                    std::abs(uu - (2 * u0 - lo)) < 2e-2 || std::abs(uu - (2 * u0 - hi)) < 2e-2)
                    near_edge = true;
            if (near_edge) continue;
            CHECK(member_out(uu) == oracle_member(e, uu, u0, orient));
        }
    }
}

TEST_CASE("grid polarization conserves cells and fixes symmetric sets") {
    const Geodesic g = Geodesic::diameter(0.0); // real axis, H+ = upper half
    const GridSet disk = GridSet::disk(40, 80, 0.9, 0.5);
    TransformReport rep;
    const GridSet p = polarize_grid(disk, g, &rep);
    CHECK(p.occupied_count() == disk.occupied_count());
    CHECK(p == disk); // symmetric under the reflection

    // asymmetric set: occupancy moves to H+, count conserved
    const GridSet blob = GridSet::rasterize(40, 80, 0.9, [](std::complex<double> z) {
        return std::abs(z - std::complex<double>(0.2, -0.3)) < 0.2;
    });
    const GridSet pb = polarize_grid(blob, g);
    CHECK(pb.occupied_count() == blob.occupied_count());
    double upper = 0, lower = 0;
    for (int i = 0; i < pb.n_r(); ++i)
        for (int j = 0; j < pb.n_theta(); ++j)
            if (pb.occupied(i, j)) (pb.cell_center(i, j).imag() > 0 ? upper : lower) += 1;
    CHECK(upper > lower);
}

TEST_CASE("grid polarization agrees with the exact diameter algebra") {
    // raster a diameter set, polarize both ways, compare up to one cell
    const DiameterSet e = DiameterSet::from_euclidean({{-0.55, -0.25}, {0.05, 0.45}});
    const double c = 0.3;
    const DiameterSet exact = polarize_diameter(e, c);
    const int n_r = 160, n_t = 320;
    const GridSet raster = GridSet::rasterize(n_r, n_t, 0.95, [&](std::complex<double> z) {
        if (std::abs(z.imag()) > 0.01) return false;
        for (auto [a, b] : e.euclidean_intervals())
            if ((z.real() >= a && z.real() <= b)) return true;
        return false;
    });
    const GridSet pg = polarize_grid(raster, Geodesic::orthogonal_at(c, 0.0));
    // compare occupancy along the positive real axis with the exact result
    const auto exact_iv = exact.euclidean_intervals();
    auto exact_member = [&](double x) {
        for (auto [a, b] : exact_iv)
            if (x >= a && x <= b) return true;
        return false;
    };
    int disagreements = 0, checked = 0;
    for (int i = 0; i < n_r; ++i) {
        const double x = (i + 0.5) * pg.dr();
        bool cell = pg.occupied(i, 0);
        bool want = exact_member(x);
        ++checked;
        if (cell != want) ++disagreements;
    }
    CHECK(checked > 0);
    CHECK(disagreements <= 10); // cells at interval edges may flip
}

TEST_CASE("steiner symmetrization fixes centered disks and preserves area") {
    const int n_r = 96, n_t = 192;
    const GridSet disk = rasterized_hyperbolic_disk(HypPoint(0, 0), 1.0, n_r, n_t, 0.99);
    TransformReport rep;
    const GridSet sym = steiner_hyperbolic(disk, Geodesic::diameter(0.3), HypPoint(0, 0), &rep);
    std::size_t diff = 0;
    for (std::size_t k = 0; k < disk.cells().size(); ++k)
        if (disk.cells()[k] != sym.cells()[k]) ++diff;
    CHECK(diff <= std::size_t(2 * n_t));
    const auto area = rep.preserved.at("hyp_area");
    CHECK(std::abs(area.after - area.before) <= 0.02 * area.before + 0.5);
}

TEST_CASE("steiner symmetrization of an off-axis blob") {
    const int n_r = 96, n_t = 192;
    const GridSet blob = rasterized_hyperbolic_disk(HypPoint(0.35, 0.3), 0.8, n_r, n_t, 0.99);
    TransformReport rep;
    const Geodesic axis = Geodesic::diameter(0.0);
    const GridSet sym = steiner_hyperbolic(blob, axis, HypPoint(0, 0), &rep);
    // output is symmetric across the axis
    std::size_t asym = 0;
    for (int i = 0; i < n_r; ++i)
        for (int j = 0; j < n_t; ++j) {
            const auto z = sym.cell_center(i, j);
            if (sym.occupied(i, j) != sym.contains(std::conj(z))) ++asym;
        }
    CHECK(asym <= std::size_t(4 * n_t));
    const auto area = rep.preserved.at("hyp_area");
    CHECK(std::abs(area.after - area.before) <= 0.03 * area.before + 0.5);
    CHECK_THROWS_AS(steiner_hyperbolic(blob, axis, HypPoint(0.1, 0.1)), domain_error);
}

TEST_CASE("schwarz symmetrization returns the equal-area radius") {
    const GridSet disk = GridSet::disk(128, 256, 0.95, 0.5);
    TransformReport rep;
    const double tau = schwarz_hyperbolic(disk, HypPoint(0, 0), &rep);
    CHECK(tau == doctest::Approx(tau_of_r(0.5)).epsilon(0.02));
    const auto area = rep.preserved.at("hyp_area");
    CHECK(area.after == doctest::Approx(area.before).epsilon(1e-12));
    CHECK(schwarz_hyperbolic(GridSet(16, 32, 0.9), HypPoint(0, 0)) == 0.0);
}

TEST_CASE("circular symmetrization recenters rings and keeps counts") {
    const int n_r = 24, n_t = 48;
    // a centered arc ring is unchanged
    GridSet arc(n_r, n_t, 0.9);
    const std::vector<int> order = centered_column_order(arc);
    for (int k = 0; k < 10; ++k) arc.set(12, order[k]);
    CHECK(circular_symmetrize(arc) == arc);

    // full ring unchanged
    GridSet ring(n_r, n_t, 0.9);
    for (int j = 0; j < n_t; ++j) ring.set(7, j);
    CHECK(circular_symmetrize(ring) == ring);

    // arbitrary set: counts preserved per ring
    std::mt19937_64 rng(22);
    GridSet rnd(n_r, n_t, 0.9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n_r; ++i)
        for (int j = 0; j < n_t; ++j)
            if (unit(rng) < 0.3) rnd.set(i, j);
    TransformReport rep;
    const GridSet sym = circular_symmetrize(rnd, &rep);
    for (int i = 0; i < n_r; ++i) {
        int before = 0, after = 0;
        for (int j = 0; j < n_t; ++j) {
            before += rnd.occupied(i, j);
            after += sym.occupied(i, j);
        }
        CHECK(before == after);
    }
    CHECK(rep.preserved.at("hyp_area").before ==
          doctest::Approx(rep.preserved.at("hyp_area").after).epsilon(1e-12));
}

TEST_CASE("szego radial symmetrization preserves log measure per column") {
    const int n_r = 64, n_t = 32;
    const double core = 0.2;
    GridSet e = GridSet::rasterize(n_r, n_t, 0.9, [&](std::complex<double> z) {
        if (std::abs(z) <= core + 0.01) return true;
        const double th = std::arg(z);
        return std::abs(z) < 0.8 && std::abs(z) > 0.4 && th > 0.3 && th < 2.0;
    });
    TransformReport rep;
    const GridSet sym = szego_radial(e, core, &rep);
    const auto lm = rep.preserved.at("log_measure");
    CHECK(std::abs(lm.after - lm.before) <= n_t * std::log((0.9) / (0.9 - e.dr())) * 1.0);
    // every column is a single interval from the core
    for (int j = 0; j < n_t; ++j) {
        bool in_run = true;
        for (int i = 0; i < n_r; ++i) {
            const bool occ = sym.occupied(i, j);
            if (!in_run) CHECK(!occ);
            if (!occ) in_run = false;
        }
    }
    // rotationally symmetric input gives rotationally symmetric output
    GridSet annulus = GridSet::rasterize(n_r, n_t, 0.9, [&](std::complex<double> z) {
        return std::abs(z) <= core + 0.01 || (std::abs(z) > 0.5 && std::abs(z) < 0.7);
    });
    const GridSet sann = szego_radial(annulus, core);
    for (int i = 0; i < n_r; ++i)
        for (int j = 1; j < n_t; ++j) CHECK(sann.occupied(i, j) == sann.occupied(i, 0));

    // missing core triggers the precondition error
    GridSet hollow(n_r, n_t, 0.9);
    hollow.set(40, 3);
    CHECK_THROWS_AS(szego_radial(hollow, core), precondition_error);
}

TEST_CASE("szego column already an interval from the core is unchanged within a cell") {
    const int n_r = 64, n_t = 16;
    const double core = 0.2;
    GridSet e = GridSet::rasterize(n_r, n_t, 0.9, [&](std::complex<double> z) {
        return std::abs(z) <= 0.55;
    });
    const GridSet sym = szego_radial(e, core);
    int differing = 0;
    for (std::size_t k = 0; k < e.cells().size(); ++k)
        if (e.cells()[k] != sym.cells()[k]) ++differing;
    CHECK(differing <= n_t); // at most the edge cell per column
}

TEST_CASE("hyperbolic radial symmetrization of hedgehogs is exact") {
    // single interval per spike is unchanged
    const Hedgehog single = Hedgehog::single_spike(0.4, 0.0, 0.55);
    const Hedgehog s1 = radial_hyperbolic(single);
    REQUIRE(s1.spikes().size() == 1);
    CHECK(s1.spikes()[0].intervals[0].second == doctest::Approx(0.55).epsilon(1e-13));

    // [0,r] u [s,t] becomes [0, r(tau(r)+tau(t)-tau(s))]
    const double r = 0.25, s = 0.5, t = 0.7;
    const Hedgehog two(0.0, {Spike{0.0, {{0.0, r}, {s, t}}}});
    TransformReport rep;
    const Hedgehog sym = radial_hyperbolic(two, &rep);
    REQUIRE(sym.spikes().size() == 1);
    REQUIRE(sym.spikes()[0].intervals.size() == 1);
    CHECK(sym.spikes()[0].intervals[0].first == doctest::Approx(0.0));
    CHECK(sym.spikes()[0].intervals[0].second ==
          doctest::Approx(r_of_tau(tau_of_r(r) + tau_of_r(t) - tau_of_r(s))).epsilon(1e-13));
    CHECK(rep.preserved.at("spike_hyp_length").before ==
          doctest::Approx(rep.preserved.at("spike_hyp_length").after).epsilon(1e-13));

    // per-angle length preserved with a core present
    const Hedgehog with_core(0.3, {Spike{1.0, {{0.4, 0.5}, {0.6, 0.8}}}});
    const Hedgehog symc = radial_hyperbolic(with_core);
    CHECK(symc.ray_hyp_length(1.0) == doctest::Approx(with_core.ray_hyp_length(1.0)).epsilon(1e-13));
    CHECK(symc.core_radius() == with_core.core_radius());
}

TEST_CASE("annulus contraction endpoints and contraction property") {
    const double r0 = 0.5;
    const Hedgehog e(0.0, {Spike{0.3, {{r0, 0.7}}}, Spike{2.1, {{0.55, 0.8}}}});
    // identity at r = r0
    const Hedgehog same = contraction_phi(e, r0, r0);
    CHECK(same.spikes()[0].intervals[0].first == doctest::Approx(r0).epsilon(1e-13));
    // full collapse start: [r0, b] -> [0, r(tau(b)-tau(r0))]
    const Hedgehog zero = contraction_phi(e, r0, 0.0);
    CHECK(zero.spikes()[0].intervals[0].first == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(zero.spikes()[0].intervals[0].second ==
          doctest::Approx(r_of_tau(tau_of_r(0.7) - tau_of_r(r0))).epsilon(1e-13));

    // pairwise distances between transported sample points never increase
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const double th1 = 2.0 * pi * unit(rng), th2 = 2.0 * pi * unit(rng);
        const double s1 = r0 + (0.95 - r0) * unit(rng), s2 = r0 + (0.95 - r0) * unit(rng);
        const double r = r0 * unit(rng);
        const double shift = tau_of_r(r) - tau_of_r(r0);
        const HypPoint a(std::polar(s1, th1)), b(std::polar(s2, th2));
        const HypPoint ca(std::polar(r_of_tau(tau_of_r(s1) + shift), th1));
        const HypPoint cb(std::polar(r_of_tau(tau_of_r(s2) + shift), th2));
        CHECK(hyp_dist(ca, cb) <= hyp_dist(a, b) + 1e-12);
    }

    CHECK_THROWS_AS(contraction_phi(e, r0, 0.6), domain_error);
    const Hedgehog low(0.0, {Spike{0.0, {{0.3, 0.6}}}});
    CHECK_THROWS_AS(contraction_phi(low, r0, 0.2), precondition_error);
}

TEST_CASE("radial projection contracts onto the circle") {
    const double r = 0.4;
    const std::vector<HypPoint> pts = {HypPoint(std::polar(r, 0.3)),
                                       HypPoint(std::polar(0.7, 0.3)),
                                       HypPoint(std::polar(0.8, 2.0))};
    const auto proj = radial_project(pts, r);
    CHECK(std::abs(proj[0].value() - pts[0].value()) < 1e-13); // already on C_r
    CHECK(std::abs(proj[1].value() - proj[0].value()) < 1e-13); // same angle collapses
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const HypPoint a(std::polar(r + (0.95 - r) * unit(rng), 2 * pi * unit(rng)));
        const HypPoint b(std::polar(r + (0.95 - r) * unit(rng), 2 * pi * unit(rng)));
        const auto p = radial_project({a, b}, r);
        CHECK(hyp_dist(p[0], p[1]) <= hyp_dist(a, b) + 1e-12);
    }
    CHECK_THROWS_AS(radial_project({HypPoint(0.1, 0.0)}, r), precondition_error);
}

TEST_CASE("dispersion schedules") {
    Spike s1; s1.angle = 0.0; s1.intervals = {{0.2, 0.4}};
    Spike s2; s2.angle = pi / 2.0; s2.intervals = {{0.3, 0.5}};
    const DispersionSchedule sched({s1, s2}, {1.0, 0.5});

    // t = 0 is the identity
    const Hedgehog h0 = disperse(sched, 0.0);
    CHECK(h0.spikes()[0].intervals[0].first == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(h0.spikes()[0].intervals[0].second == doctest::Approx(0.4).epsilon(1e-13));

    // part lengths constant in t
    TransformReport rep;
    const Hedgehog h3 = disperse(sched, 3.0, &rep);
    CHECK(rep.preserved.at("spike_hyp_length").before ==
          doctest::Approx(rep.preserved.at("spike_hyp_length").after).epsilon(1e-12));

    // distances non-decreasing
    CHECK(min_part_distance(sched, 5.0) >= min_part_distance(sched, 1.0) - 1e-12);

    CHECK_THROWS_AS(DispersionSchedule({s1, s2}, {1.0, -0.2}), schedule_error);
    Spike s3 = s2; s3.angle = 0.0;
    CHECK_THROWS_AS(DispersionSchedule({s1, s3}, {1.0, 1.0}), schedule_error);
    CHECK_THROWS_AS(disperse(sched, -1.0), schedule_error);
}

TEST_CASE("recentered circular symmetrization keeps hyperbolic area roughly") {
    const int n_r = 64, n_t = 128;
    const GridSet blob = rasterized_hyperbolic_disk(HypPoint(0.3, 0.2), 0.7, n_r, n_t, 0.98);
    TransformReport rep;
    const GridSet sym = circular_symmetrize_ray(blob, HypPoint(0.2, 0.0), 0.8, &rep);
    const auto area = rep.preserved.at("hyp_area");
    CHECK(std::abs(area.after - area.before) <= 0.08 * area.before + 0.2);
}
