#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "hypcap/disk.hpp"
#include "hypcap/hedgehog.hpp"
#include "hypcap/transform_report.hpp"

namespace hypcap {

// Hyperbolic contractions and rigid motions along rays: the annulus
// contraction phi_r, radial projection onto a circle, and dispersion
// schedules moving hedgehog parts outward.

// phi_r maps the annulus {r0 <= |z| < 1} ray by ray so that the hyperbolic
// distance to the ray's base point is preserved:
//   d(r e^{i th}, phi_r(z)) = d(r0 e^{i th}, z),  arg phi_r(z) = arg z.
// For r <= r0 this is a hyperbolic contraction; on hedgehog spikes it acts
// exactly on interval endpoints.
inline Hedgehog contraction_phi(const Hedgehog& e, double r0, double r,
                                TransformReport* report = nullptr) {
    if (!(0.0 <= r && r <= r0 && r0 < 1.0))
        throw domain_error("contraction_phi: need 0 <= r <= r0 < 1");
    if (e.core_radius() > 0.0)
        throw precondition_error("contraction_phi: set must have no central body");
    const double shift = tau_of_r(r) - tau_of_r(r0); // <= 0
    std::vector<Spike> spikes;
    double before = 0.0, after = 0.0;
    for (const auto& s : e.spikes()) {
        Spike ns;
        ns.angle = s.angle;
        for (auto [a, b] : s.intervals) {
            if (a < r0 - 1e-14)
                throw precondition_error("contraction_phi: interval starts below r0");
            const double na = r_of_tau(std::max(0.0, tau_of_r(a) + shift));
            const double nb = r_of_tau(tau_of_r(b) + shift);
            ns.intervals.emplace_back(na, nb);
            before += tau_of_r(b) - tau_of_r(a);
            after += tau_of_r(nb) - tau_of_r(na);
        }
        spikes.push_back(std::move(ns));
    }
    Hedgehog out(0.0, std::move(spikes));
    if (report) {
        report->transform = "contraction_phi";
        report->parameters = {{"r0", r0}, {"r", r}};
        report->record("spike_hyp_length", before, after);
    }
    return out;
}

// z -> r z/|z| for |z| >= r: projection onto the circle C_r, a hyperbolic
// contraction on its domain.
inline std::vector<HypPoint> radial_project(const std::vector<HypPoint>& pts, double r,
                                            TransformReport* report = nullptr) {
    if (!(r > 0.0 && r < 1.0))
        throw domain_error("radial_project: radius must lie in (0,1)");
    std::vector<HypPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        if (p.abs() < r - 1e-14)
            throw precondition_error("radial_project: point inside the circle");
        out.emplace_back(std::polar(r, std::arg(p.value())));
    }
    if (report) {
        report->transform = "radial_project";
        report->parameters = {{"r", r}};
        report->record("point_count", double(pts.size()), double(out.size()));
    }
    return out;
}

// Dispersion schedule: hedgehog parts on pairwise distinct rays, each moved
// outward along its ray with its own hyperbolic speed.  Parts on a common
// ray are rejected (not every family admits dispersion; radially separated
// ones always do).
struct DispersionSchedule {
    std::vector<Spike> parts;
    std::vector<double> speeds; // hyperbolic length per unit t, >= 0

    DispersionSchedule(std::vector<Spike> parts_, std::vector<double> speeds_)
        : parts(std::move(parts_)), speeds(std::move(speeds_)) {
        if (parts.empty() || parts.size() != speeds.size())
            throw schedule_error("DispersionSchedule: need one speed per part");
        for (double s : speeds)
            if (!(s >= 0.0))
                throw schedule_error("DispersionSchedule: inward motion not allowed");
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (Hedgehog::same_angle(parts[i].angle, parts[j].angle))
                    throw schedule_error("DispersionSchedule: parts share a ray");
    }
};

inline Hedgehog disperse(const DispersionSchedule& schedule, double t,
                         TransformReport* report = nullptr) {
    if (!(t >= 0.0))
        throw schedule_error("disperse: t must be >= 0");
    std::vector<Spike> spikes;
    double before = 0.0, after = 0.0;
    for (std::size_t k = 0; k < schedule.parts.size(); ++k) {
        const double shift = schedule.speeds[k] * t;
        Spike ns;
        ns.angle = schedule.parts[k].angle;
        for (auto [a, b] : schedule.parts[k].intervals) {
            const double na = r_of_tau(tau_of_r(a) + shift);
            const double nb = r_of_tau(tau_of_r(b) + shift);
            ns.intervals.emplace_back(na, nb);
            before += tau_of_r(b) - tau_of_r(a);
            after += tau_of_r(nb) - tau_of_r(na);
        }
        spikes.push_back(std::move(ns));
    }
    Hedgehog out(0.0, std::move(spikes));
    if (report) {
        report->transform = "disperse";
        report->parameters = {{"t", t}};
        report->record("spike_hyp_length", before, after);
    }
    return out;
}

// Minimum pairwise hyperbolic distance between the parts of a dispersed
// hedgehog, estimated on interval-endpoint and midpoint samples.
inline double min_part_distance(const DispersionSchedule& schedule, double t) {
    const Hedgehog h = disperse(schedule, t);
    std::vector<std::vector<HypPoint>> samples;
    for (const auto& s : h.spikes()) {
        std::vector<HypPoint> pts;
        for (auto [a, b] : s.intervals) {
            pts.emplace_back(std::polar(a, s.angle));
            pts.emplace_back(std::polar(0.5 * (a + b), s.angle));
            pts.emplace_back(std::polar(b, s.angle));
        }
        samples.push_back(std::move(pts));
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            for (const auto& p : samples[i])
                for (const auto& q : samples[j])
                    best = std::min(best, hyp_dist(p, q));
    return best;
}

} // namespace hypcap
