#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "hypcap/diameter_set.hpp"
#include "hypcap/disk.hpp"
#include "hypcap/hedgehog.hpp"

namespace hypcap {

// One-dimensional parametrization of the boundary of a compact set: full or
// partial circles centered at 0 and radial segments, each parametrized by
// hyperbolic arc length.  The equilibrium measure of a condenser plate lives
// on its boundary, so Fekete optimization runs on these pieces.
struct ChartPiece {
    enum class Kind { circle_arc, radial_segment };

    Kind kind = Kind::radial_segment;
    // circle_arc: radius and theta range [theta0, theta1] (full circle when
    // theta1 - theta0 == 2 pi; then the parameter wraps).
    // radial_segment: angle and Euclidean radius range [a, b].
    double radius = 0.0;
    double theta0 = 0.0, theta1 = 0.0;
    double angle = 0.0;
    double a = 0.0, b = 0.0;

    bool periodic = false;

    double hyp_length() const {
        if (kind == Kind::circle_arc)
            return 2.0 * radius * (theta1 - theta0) / (1.0 - radius * radius);
        return tau_of_r(b) - tau_of_r(a);
    }

    std::complex<double> at(double s) const {
        if (kind == Kind::circle_arc) {
            const double th = theta0 + s * (1.0 - radius * radius) / (2.0 * radius);
            return std::polar(radius, th);
        }
        const double rho = r_of_tau(tau_of_r(a) + s);
        return std::polar(rho, angle);
    }

    // d(at(s))/ds, unit hyperbolic speed.
    std::complex<double> tangent(double s) const {
        const std::complex<double> z = at(s);
        if (kind == Kind::circle_arc)
            return std::complex<double>(0.0, 1.0) * z * (1.0 - radius * radius) / (2.0 * radius);
        const double rho = std::abs(z);
        return std::polar((1.0 - rho * rho) / 2.0, angle);
    }

    static ChartPiece circle(double radius, double theta0, double theta1) {
        ChartPiece p;
        p.kind = Kind::circle_arc;
        p.radius = radius;
        p.theta0 = theta0;
        p.theta1 = theta1;
        p.periodic = std::abs((theta1 - theta0) - 2.0 * pi) < 1e-12;
        return p;
    }

    static ChartPiece segment(double angle, double a, double b) {
        ChartPiece p;
        p.kind = Kind::radial_segment;
        p.angle = angle;
        p.a = a;
        p.b = b;
        return p;
    }
};

struct BoundaryChart {
    std::vector<ChartPiece> pieces;

    double total_hyp_length() const {
        double t = 0.0;
        for (const auto& p : pieces) t += p.hyp_length();
        return t;
    }

    bool degenerate() const { return total_hyp_length() <= 0.0; }

    std::vector<HypPoint> sample(int per_piece) const {
        std::vector<HypPoint> pts;
        for (const auto& p : pieces) {
            const double len = p.hyp_length();
            for (int k = 0; k < per_piece; ++k)
                pts.emplace_back(p.at(len * (k + 0.5) / per_piece));
        }
        return pts;
    }
};

// Boundary of a hedgehog: the core circle (when present) plus one radial
// segment per spike interval.  Spike attachment points on the circle have
// zero measure and are not excised.
inline BoundaryChart boundary_chart(const Hedgehog& h) {
    if (h.empty())
        throw domain_error("boundary_chart: empty hedgehog");
    BoundaryChart chart;
    if (h.core_radius() > 0.0)
        chart.pieces.push_back(ChartPiece::circle(h.core_radius(), 0.0, 2.0 * pi));
    for (const auto& s : h.spikes())
        for (auto [a, b] : s.intervals)
            chart.pieces.push_back(ChartPiece::segment(s.angle, a, b));
    return chart;
}

inline BoundaryChart boundary_chart(const DiameterSet& d) {
    if (d.empty())
        throw domain_error("boundary_chart: empty diameter set");
    BoundaryChart chart;
    for (auto [x1, x2] : d.euclidean_intervals()) {
        if (x2 <= 0.0) {
            chart.pieces.push_back(ChartPiece::segment(pi, -x2, -x1));
        } else if (x1 >= 0.0) {
            chart.pieces.push_back(ChartPiece::segment(0.0, x1, x2));
        } else {
            chart.pieces.push_back(ChartPiece::segment(pi, 0.0, -x1));
            chart.pieces.push_back(ChartPiece::segment(0.0, 0.0, x2));
        }
    }
    return chart;
}

// Arc of the circle C_r spanning angles [theta0, theta1] (a Jordan arc, and
// the central body C_r(alpha) of arc-plus-interval hedgehogs).
inline BoundaryChart arc_chart(double r, double theta0, double theta1) {
    if (!(r > 0.0 && r < 1.0))
        throw domain_error("arc_chart: radius must lie in (0,1)");
    BoundaryChart chart;
    chart.pieces.push_back(ChartPiece::circle(r, theta0, theta1));
    return chart;
}

// Hausdorff distance between finite point samples (Euclidean).
inline double hausdorff_distance(const std::vector<HypPoint>& a,
                                 const std::vector<HypPoint>& b) {
    if (a.empty() || b.empty())
        throw domain_error("hausdorff_distance: empty sample");
    auto one_sided = [](const std::vector<HypPoint>& from, const std::vector<HypPoint>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to)
                best = std::min(best, std::abs(p.value() - q.value()));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

} // namespace hypcap
