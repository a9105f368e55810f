#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "hypcap/disk.hpp"

namespace hypcap {

// Compact "hedgehog": optional central closed disk of Euclidean radius
// core_radius plus, on finitely many rays, disjoint closed radial intervals
// [a,b] with core_radius <= a <= b < 1 (Euclidean radii).
struct Spike {
    double angle = 0.0;                            // radians
    std::vector<std::pair<double, double>> intervals; // sorted disjoint [a,b]
};

class Hedgehog {
public:
    Hedgehog() = default;

    Hedgehog(double core_radius, std::vector<Spike> spikes)
        : core_(core_radius), spikes_(std::move(spikes)) {
        if (!(core_ >= 0.0 && core_ < 1.0))
            throw domain_error("Hedgehog: core radius must lie in [0,1)");
        normalize();
    }

    static Hedgehog disk(double r) { return Hedgehog(r, {}); }

    static Hedgehog single_spike(double angle, double a, double b) {
        return Hedgehog(0.0, {Spike{angle, {{a, b}}}});
    }

    double core_radius() const { return core_; }
    const std::vector<Spike>& spikes() const { return spikes_; }

    bool empty() const { return core_ == 0.0 && spikes_.empty(); }

    // Hyperbolic length of one spike's interval union.
    static double spike_hyp_length(const Spike& s) {
        double len = 0.0;
        for (auto [a, b] : s.intervals) len += tau_of_r(b) - tau_of_r(a);
        return len;
    }

    // Hyperbolic length of E intersected with the ray [0, e^{i angle}):
    // the core contributes tau(core), plus the spike intervals on that ray.
    double ray_hyp_length(double angle) const {
        double len = tau_of_r(core_);
        for (const auto& s : spikes_)
            if (same_angle(s.angle, angle)) len += spike_hyp_length(s);
        return len;
    }

    double max_radius() const {
        double m = core_;
        for (const auto& s : spikes_)
            for (auto [a, b] : s.intervals) m = std::max(m, b);
        return m;
    }

    // Interval endpoints plus sampled core-circle points; carries the extremal
    // pairs of the hedgehog, so hyp_diameter of this sample is the hyperbolic
    // diameter of the set (core samples cover the antipodal core case).
    std::vector<HypPoint> diameter_sample(int core_samples = 64) const {
        std::vector<HypPoint> pts;
        if (core_ > 0.0) {
            for (int k = 0; k < core_samples; ++k)
                pts.emplace_back(std::polar(core_, 2.0 * pi * k / core_samples));
        } else if (spikes_.empty()) {
            pts.emplace_back(0.0, 0.0);
        }
        for (const auto& s : spikes_) {
            for (auto [a, b] : s.intervals) {
                pts.emplace_back(std::polar(a, s.angle));
                pts.emplace_back(std::polar(b, s.angle));
            }
        }
        return pts;
    }

    static bool same_angle(double a, double b, double tol = 1e-9) {
        double d = std::fmod(a - b, 2.0 * pi);
        if (d < 0) d += 2.0 * pi;
        return d < tol || 2.0 * pi - d < tol;
    }

private:
    // Canonical form: angles wrapped to [0, 2pi) and sorted, same-angle spikes
    // merged; per spike the intervals are clamped to [core, 1), sorted, with
    // degenerate pieces dropped and touching pieces merged.
    void normalize() {
        for (auto& s : spikes_) {
            s.angle = std::fmod(s.angle, 2.0 * pi);
            if (s.angle < 0) s.angle += 2.0 * pi;
        }
        std::sort(spikes_.begin(), spikes_.end(),
                  [](const Spike& a, const Spike& b) { return a.angle < b.angle; });
        std::vector<Spike> merged;
        for (auto& s : spikes_) {
            if (!merged.empty() && same_angle(merged.back().angle, s.angle)) {
                auto& dst = merged.back().intervals;
                dst.insert(dst.end(), s.intervals.begin(), s.intervals.end());
            } else {
                merged.push_back(std::move(s));
            }
        }
        spikes_.clear();
        for (auto& s : merged) {
            std::vector<std::pair<double, double>> iv;
            for (auto [a, b] : s.intervals) {
                if (b < a) std::swap(a, b);
                a = std::max(a, core_); // the part inside the core is absorbed by it
                if (!(b > a)) continue;
                if (!(b < 1.0))
                    throw domain_error("Hedgehog: spike interval reaches the unit circle");
                if (!(a >= 0.0))
                    throw domain_error("Hedgehog: negative radius in spike interval");
                iv.emplace_back(a, b);
            }
            std::sort(iv.begin(), iv.end());
            std::vector<std::pair<double, double>> out;
            for (auto [a, b] : iv) {
                if (!out.empty() && a <= out.back().second + 1e-14) {
                    if (a < out.back().second - 1e-14 && b > out.back().second)
                        throw domain_error("Hedgehog: overlapping intervals on one ray");
                    out.back().second = std::max(out.back().second, b);
                } else {
                    out.emplace_back(a, b);
                }
            }
            if (!out.empty()) {
                s.intervals = std::move(out);
                spikes_.push_back(std::move(s));
            }
        }
    }

    double core_ = 0.0;
    std::vector<Spike> spikes_;
};

} // namespace hypcap
