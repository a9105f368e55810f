#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "hypcap/geodesic.hpp"
#include "hypcap/grid_set.hpp"
#include "hypcap/hedgehog.hpp"
#include "hypcap/mobius.hpp"
#include "hypcap/transform_report.hpp"

namespace hypcap {

// The four symmetrizations, all area-exact at the granularity their
// representation allows:
//   steiner_hyperbolic    strip-coordinate Steiner symmetrization
//   schwarz_hyperbolic    equal-hyperbolic-area disk
//   circular_symmetrize   per-ring recentering (classical circular)
//   szego_radial          per-ray logarithmic-measure rearrangement
//   radial_hyperbolic     per-ray hyperbolic-length rearrangement

// phi0 maps the disk onto the strip |Im w| < pi/2; the geodesic (-1,1) goes
// to the real axis and equidistant curves to horizontal lines.
inline std::complex<double> strip_of_disk(std::complex<double> z) {
    return std::log((1.0 + z) / (1.0 - z));
}

inline std::complex<double> disk_of_strip(std::complex<double> w) {
    return std::tanh(w / 2.0);
}

// Moebius automorphism sending the geodesic `gamma` to the vertical diameter
// (-i,i) with `a` (a point of gamma) landing at the origin.
inline MobiusMap align_geodesic(const Geodesic& gamma, const HypPoint& a) {
    if (std::abs(gamma.side_value(a)) > 1e-9)
        throw domain_error("align_geodesic: center point must lie on the geodesic");
    const MobiusMap shift = MobiusMap::to_origin(a);
    // The image of gamma is a diameter; find its direction from the image of
    // a nearby geodesic point obtained by reflecting a slightly off itself.
    std::complex<double> probe;
    if (gamma.kind() == Geodesic::Kind::diameter) {
        probe = a.value() + 1e-4 * std::polar(1.0, gamma.diameter_angle());
        if (std::abs(probe) > 0.999) probe = a.value() - 1e-4 * std::polar(1.0, gamma.diameter_angle());
    } else {
        // Step along the carrying circle and reproject onto it so the probe
        // stays on the geodesic to machine precision.
        const std::complex<double> radial = a.value() - gamma.center();
        const std::complex<double> tang = std::complex<double>(0, 1) * radial / std::abs(radial);
        probe = a.value() + 1e-4 * tang;
        probe = gamma.center() + gamma.radius() * (probe - gamma.center()) / std::abs(probe - gamma.center());
        if (std::abs(probe) > 0.999) {
            probe = a.value() - 1e-4 * tang;
            probe = gamma.center() + gamma.radius() * (probe - gamma.center()) / std::abs(probe - gamma.center());
        }
    }
    const double dir = std::arg(shift.apply_complex(probe));
    MobiusMap rot = MobiusMap::rotation(pi / 2.0 - dir);
    return rot * shift;
}

struct StripBox {
    double x_max;  // strip extent [-x_max, x_max]
    int n_x, n_y;
    double dx() const { return 2.0 * x_max / n_x; }
    double dy() const { return pi / n_y; }
    double x_of(int i) const { return -x_max + (i + 0.5) * dx(); }
    double y_of(int j) const { return -pi / 2.0 + (j + 0.5) * dy(); }
};

// Hyperbolic Steiner symmetrization of a grid set with respect to the
// geodesic gamma, centered at a point a on gamma.  Per horizontal strip line
// the section is replaced by the centered interval of equal Lebesgue
// measure, which preserves hyperbolic area line by line.
inline GridSet steiner_hyperbolic(const GridSet& e, const Geodesic& gamma, const HypPoint& a,
                                  TransformReport* report = nullptr) {
    const MobiusMap psi = align_geodesic(gamma, a);
    const MobiusMap psi_inv = psi.inverse();

    StripBox box;
    box.x_max = tau_of_r(e.r_max()); // phi0 image of the grid lives inside this
    box.n_y = std::max(64, std::max(e.n_r(), e.n_theta()));
    box.n_x = std::max(64, int(std::ceil(2.0 * box.x_max / (pi / box.n_y))));

    auto member = [&](double x, double y) {
        const std::complex<double> z = psi_inv.apply_complex(disk_of_strip({x, y}));
        return std::abs(z) < 1.0 && e.contains(z);
    };

    // Row-wise Lebesgue measure of the transported set.
    std::vector<double> half_width(box.n_y, 0.0);
    int active_rows = 0;
    for (int j = 0; j < box.n_y; ++j) {
        int count = 0;
        for (int i = 0; i < box.n_x; ++i)
            if (member(box.x_of(i), box.y_of(j))) ++count;
        if (count > 0) ++active_rows;
        half_width[j] = 0.5 * count * box.dx();
    }
    if (active_rows < 16 && e.occupied_count() > 0)
        throw resolution_error("steiner_hyperbolic: fewer than 16 strip lines meet the set; "
                               "refine the grid");

    GridSet out = GridSet::rasterize(e.n_r(), e.n_theta(), e.r_max(),
        [&](std::complex<double> z) {
            const std::complex<double> w = strip_of_disk(psi.apply_complex(z));
            const double y = w.imag();
            if (!(std::abs(y) < pi / 2.0)) return false;
            const int j = std::min(int((y + pi / 2.0) / box.dy()), box.n_y - 1);
            return std::abs(w.real()) <= half_width[j];
        });

    if (report) {
        report->transform = "steiner_hyperbolic";
        report->parameters = {{"n_strip_x", double(box.n_x)}, {"n_strip_y", double(box.n_y)}};
        report->record("hyp_area", e.hyp_area(), out.hyp_area());
        // Section on the orthogonal geodesic through a = the y ~ 0 strip row,
        // where the strip metric equals the Euclidean one.
        const int j0 = std::min(int((pi / 2.0) / box.dy()), box.n_y - 1);
        int count_after = 0;
        for (int i = 0; i < box.n_x; ++i)
            if (std::abs(box.x_of(i)) <= half_width[j0]) ++count_after;
        report->record("orthogonal_section_length", 2.0 * half_width[j0], count_after * box.dx());
    }
    return out;
}

// Hyperbolic Schwarz symmetrization: the hyperbolic radius tau of the disk
// with the same hyperbolic area as E (centered at the given point).
inline double schwarz_hyperbolic(const GridSet& e, const HypPoint& a,
                                 TransformReport* report = nullptr) {
    const double area = e.hyp_area();
    const double tau = disk_tau_of_area(area);
    if (report) {
        report->transform = "schwarz_hyperbolic";
        report->parameters = {{"center_re", a.re()}, {"center_im", a.im()}, {"tau", tau}};
        report->record("hyp_area", area, 4.0 * pi * std::pow(std::sinh(tau / 2.0), 2));
    }
    return tau;
}

inline GridSet rasterized_hyperbolic_disk(const HypPoint& center, double tau,
                                          int n_r, int n_theta, double r_max) {
    return GridSet::rasterize(n_r, n_theta, r_max, [&](std::complex<double> z) {
        return hyp_dist(HypPoint(z), center) <= tau;
    });
}

// Column order used to recenter a ring at angle 0: by distance of the cell
// center to the positive real axis, positive side first on ties.
inline std::vector<int> centered_column_order(const GridSet& g) {
    std::vector<int> order(g.n_theta());
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int j) {
        double w = (j + 0.5) * g.dtheta();
        if (w > pi) w -= 2.0 * pi;
        return std::make_pair(std::abs(w), w < 0.0 ? 1 : 0);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key(a) < key(b); });
    return order;
}

// Classical circular symmetrization (= the hyperbolic one for rays from the
// origin): every ring keeps its occupied-cell count, recentered at angle 0.
inline GridSet circular_symmetrize(const GridSet& e, TransformReport* report = nullptr) {
    GridSet out(e.n_r(), e.n_theta(), e.r_max());
    const std::vector<int> order = centered_column_order(e);
    for (int i = 0; i < e.n_r(); ++i) {
        int count = 0;
        for (int j = 0; j < e.n_theta(); ++j)
            if (e.occupied(i, j)) ++count;
        for (int k = 0; k < count; ++k) out.set(i, order[k]);
    }
    if (report) {
        report->transform = "circular_symmetrize";
        report->record("occupied_cells", double(e.occupied_count()), double(out.occupied_count()));
        report->record("hyp_area", e.hyp_area(), out.hyp_area());
    }
    return out;
}

// Hyperbolic circular symmetrization with respect to the ray [a, e^{i alpha})_h:
// conjugate by the Moebius map taking the ray to [0,1), symmetrize, map back.
// Cell-center re-rasterization on both trips; the resolution is recorded.
inline GridSet circular_symmetrize_ray(const GridSet& e, const HypPoint& a, double alpha,
                                       TransformReport* report = nullptr) {
    const MobiusMap shift = MobiusMap::to_origin(a);
    const double beta = std::arg(shift.apply_complex(std::polar(1.0, alpha)));
    const MobiusMap phi = MobiusMap::rotation(-beta) * shift;
    const MobiusMap phi_inv = phi.inverse();

    const GridSet moved = GridSet::rasterize(e.n_r(), e.n_theta(), e.r_max(),
        [&](std::complex<double> z) {
            const std::complex<double> w = phi_inv.apply_complex(z);
            return std::abs(w) < 1.0 && e.contains(w);
        });
    const GridSet sym = circular_symmetrize(moved);
    GridSet out = GridSet::rasterize(e.n_r(), e.n_theta(), e.r_max(),
        [&](std::complex<double> z) {
            const std::complex<double> w = phi.apply_complex(z);
            return std::abs(w) < 1.0 && sym.contains(w);
        });
    if (report) {
        report->transform = "circular_symmetrize_ray";
        report->parameters = {{"a_re", a.re()}, {"a_im", a.im()}, {"alpha", alpha},
                              {"n_r", double(e.n_r())}, {"n_theta", double(e.n_theta())}};
        report->record("hyp_area", e.hyp_area(), out.hyp_area());
    }
    return out;
}

// Szego radial symmetrization with respect to the core disk of radius r
// (which must be contained in E): each angular column outside r becomes the
// single radial interval from r of equal logarithmic measure int |dz|/|z|.
inline GridSet szego_radial(const GridSet& e, double r, TransformReport* report = nullptr) {
    if (!(r > 0.0 && r < e.r_max()))
        throw domain_error("szego_radial: core radius must lie in (0, r_max)");
    const double dr = e.dr();
    for (int i = 0; i * dr < r - 1e-15 && i < e.n_r(); ++i)
        for (int j = 0; j < e.n_theta(); ++j)
            if (!e.occupied(i, j))
                throw precondition_error("szego_radial: core disk not contained in the set");

    GridSet out(e.n_r(), e.n_theta(), e.r_max());
    double before = 0.0, after = 0.0;
    for (int j = 0; j < e.n_theta(); ++j) {
        // Column log-measure above radius r.
        double target = 0.0;
        for (int i = 0; i < e.n_r(); ++i) {
            const double r0 = i * dr, r1 = (i + 1) * dr;
            if (r1 <= r || !e.occupied(i, j)) continue;
            target += std::log(r1 / std::max(r0, r));
        }
        before += target;
        // Keep the core, then fill outward to the target measure.
        double acc = 0.0;
        for (int i = 0; i < e.n_r(); ++i) {
            const double r0 = i * dr, r1 = (i + 1) * dr;
            if (r0 < r - 1e-15) {
                // Core cell: always kept; its sliver above r opens the interval.
                out.set(i, j);
                if (r1 > r) acc += std::log(r1 / r);
                continue;
            }
            const double piece = std::log(r1 / r0);
            if (acc + piece * 0.5 <= target) {
                out.set(i, j);
                acc += piece;
            } else {
                break;
            }
        }
        after += acc;
    }
    if (report) {
        report->transform = "szego_radial";
        report->parameters = {{"r", r}};
        report->record("log_measure", before, after);
    }
    return out;
}

// Hyperbolic radial symmetrization of a hedgehog: exact.  Every ray section
// (core segment plus spike intervals) becomes the single interval from 0 of
// the same hyperbolic length; the core disk itself is unchanged.
inline Hedgehog radial_hyperbolic(const Hedgehog& e, TransformReport* report = nullptr) {
    const double core = e.core_radius();
    const double tau_core = tau_of_r(core);
    std::vector<Spike> spikes;
    double before = 0.0, after = 0.0;
    for (const auto& s : e.spikes()) {
        const double len = Hedgehog::spike_hyp_length(s);
        before += len;
        const double outer = r_of_tau(tau_core + len);
        Spike ns;
        ns.angle = s.angle;
        ns.intervals = {{core, outer}};
        after += tau_of_r(outer) - tau_core;
        spikes.push_back(std::move(ns));
    }
    Hedgehog out(core, std::move(spikes));
    if (report) {
        report->transform = "radial_hyperbolic";
        report->record("spike_hyp_length", before, after);
    }
    return out;
}

// Cell-granularity version for grid sets (used for the area comparison).
inline GridSet radial_hyperbolic_grid(const GridSet& e, TransformReport* report = nullptr) {
    GridSet out(e.n_r(), e.n_theta(), e.r_max());
    const double dr = e.dr();
    for (int j = 0; j < e.n_theta(); ++j) {
        double target = 0.0;
        for (int i = 0; i < e.n_r(); ++i)
            if (e.occupied(i, j))
                target += tau_of_r((i + 1) * dr) - tau_of_r(i * dr);
        double acc = 0.0;
        for (int i = 0; i < e.n_r(); ++i) {
            const double piece = tau_of_r((i + 1) * dr) - tau_of_r(i * dr);
            if (acc + piece * 0.5 <= target) {
                out.set(i, j);
                acc += piece;
            } else {
                break;
            }
        }
    }
    if (report) {
        report->transform = "radial_hyperbolic_grid";
        report->record("hyp_area", e.hyp_area(), out.hyp_area());
    }
    return out;
}

// Euclidean area of the image of a grid set under a Moebius automorphism,
// by per-cell quadrature of |m'(z)|^2 (2x2 subsamples per cell).
inline double euclidean_area_of_mapped(const GridSet& e, const MobiusMap& m) {
    const double one_minus_a2 = 1.0 - std::norm(m.a);
    double area = 0.0;
    for (int i = 0; i < e.n_r(); ++i) {
        const double r0 = i * e.dr(), r1 = (i + 1) * e.dr();
        for (int j = 0; j < e.n_theta(); ++j) {
            if (!e.occupied(i, j)) continue;
            const double t0 = j * e.dtheta(), t1 = (j + 1) * e.dtheta();
            for (int si = 0; si < 2; ++si) {
                const double ra = r0 + (r1 - r0) * si / 2.0, rb = r0 + (r1 - r0) * (si + 1) / 2.0;
                const double rmid = 0.5 * (ra + rb);
                const double sub_area = 0.5 * (rb * rb - ra * ra) * (t1 - t0) / 2.0;
                for (int sj = 0; sj < 2; ++sj) {
                    const double tmid = t0 + (t1 - t0) * (sj + 0.5) / 2.0;
                    const std::complex<double> z = std::polar(rmid, tmid);
                    const double den = std::norm(1.0 - std::conj(m.a) * z);
                    const double jac = (one_minus_a2 * one_minus_a2) / (den * den);
                    area += jac * sub_area;
                }
            }
        }
    }
    return area;
}

} // namespace hypcap
