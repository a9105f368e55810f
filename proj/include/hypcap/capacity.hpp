#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>

#include "hypcap/closed_forms.hpp"
#include "hypcap/fekete.hpp"
#include "hypcap/fekete_grid.hpp"

namespace hypcap {

// Capacity dispatcher: route to a closed form when the set matches one of
// the exactly solvable patterns, otherwise to the Fekete estimator.

enum class Provenance { closed_form, fekete };

struct CapacityValue {
    double value = 0.0;
    Provenance provenance = Provenance::fekete;
    bool degenerate = false;
    std::optional<ClosedFormCapacity> closed_form;
    std::optional<CapacityEstimate> estimate;
};

namespace detail {

inline constexpr double pattern_tol = 1e-9;

inline CapacityValue from_closed(ClosedFormCapacity cf) {
    CapacityValue v;
    v.value = cf.value;
    v.provenance = Provenance::closed_form;
    v.closed_form = std::move(cf);
    return v;
}

inline CapacityValue from_estimate(CapacityEstimate est) {
    CapacityValue v;
    v.value = est.cap_extrapolated;
    v.provenance = Provenance::fekete;
    v.degenerate = est.degenerate;
    v.estimate = std::move(est);
    return v;
}

// n congruent single-interval spikes on evenly spaced rays (common rotation
// allowed: capacity is rotation invariant).  Covers [0,b] intervals (r = 0)
// and the rotated-star family.
inline std::optional<ClosedFormCapacity> match_rotated_star(const Hedgehog& h) {
    if (h.core_radius() > 0.0 || h.spikes().empty()) return std::nullopt;
    const auto& spikes = h.spikes();
    const int n = int(spikes.size());
    const double a0 = spikes.front().intervals.front().first;
    const double b0 = spikes.front().intervals.front().second;
    for (const auto& s : spikes) {
        if (s.intervals.size() != 1) return std::nullopt;
        if (std::abs(s.intervals[0].first - a0) > pattern_tol ||
            std::abs(s.intervals[0].second - b0) > pattern_tol)
            return std::nullopt;
    }
    const double gap = 2.0 * pi / n;
    for (int k = 1; k < n; ++k)
        if (std::abs((spikes[k].angle - spikes[0].angle) - k * gap) > pattern_tol)
            return std::nullopt;
    const double tau = tau_of_r(b0) - tau_of_r(a0);
    if (a0 <= pattern_tol) {
        if (n == 1) return cap_zero_interval(b0);
        return cap_rotated_star(n, 0.0, tau);
    }
    return cap_rotated_star(n, a0, tau);
}

// 4n spikes alternating half-lengths r1, r2 on rays spaced pi/(2n), all
// intervals anchored at the origin: the two-star family E_n(r1, r2).
inline std::optional<ClosedFormCapacity> match_two_star(const Hedgehog& h) {
    if (h.core_radius() > 0.0) return std::nullopt;
    const auto& spikes = h.spikes();
    const int total = int(spikes.size());
    if (total < 4 || total % 4 != 0) return std::nullopt;
    const int n = total / 4;
    const double gap = pi / (2.0 * n);
    for (const auto& s : spikes)
        if (s.intervals.size() != 1 || s.intervals[0].first > pattern_tol)
            return std::nullopt;
    for (int k = 1; k < total; ++k)
        if (std::abs((spikes[k].angle - spikes[0].angle) - k * gap) > pattern_tol)
            return std::nullopt;
    const double r1 = spikes[0].intervals[0].second;
    const double r2 = spikes[1].intervals[0].second;
    for (int k = 0; k < total; ++k) {
        const double want = (k % 2 == 0) ? r1 : r2;
        if (std::abs(spikes[k].intervals[0].second - want) > pattern_tol) return std::nullopt;
    }
    // The family is anchored with an r1-ray at angle 0 up to rotation, which
    // capacity ignores.
    return cap_two_star_families(n, r1, r2);
}

} // namespace detail

inline CapacityValue capacity_of(const Hedgehog& h, const FeketeConfig& cfg = {}) {
    if (h.empty()) {
        CapacityValue v;
        v.degenerate = true;
        return v;
    }
    if (h.spikes().empty())
        return detail::from_closed(cap_disk(h.core_radius()));
    if (h.core_radius() == 0.0) {
        if (auto cf = detail::match_two_star(h)) return detail::from_closed(*cf);
        if (auto cf = detail::match_rotated_star(h)) return detail::from_closed(*cf);
    }
    return detail::from_estimate(estimate_capacity(h, cfg));
}

inline CapacityValue capacity_of(const DiameterSet& d, const FeketeConfig& cfg = {}) {
    if (d.empty()) {
        CapacityValue v;
        v.degenerate = true;
        return v;
    }
    const auto& iv = d.intervals();
    if (iv.size() == 1) {
        // Any single interval is a rigid motion of [0, r'], tau(r') = u-length.
        const double rp = r_of_tau(iv[0].hi - iv[0].lo);
        auto cf = cap_zero_interval(rp);
        cf.parameters["u_lo"] = iv[0].lo;
        cf.parameters["u_hi"] = iv[0].hi;
        return detail::from_closed(cf);
    }
    return detail::from_estimate(estimate_capacity(d, cfg));
}

inline CapacityValue capacity_of(const GridSet& g, const FeketeConfig& cfg = {}) {
    if (g.occupied_count() == 0) {
        CapacityValue v;
        v.degenerate = true;
        return v;
    }
    return detail::from_estimate(estimate_capacity(g, cfg));
}

} // namespace hypcap
