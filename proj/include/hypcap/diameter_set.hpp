#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hypcap/disk.hpp"

namespace hypcap {

// Finite union of closed intervals on the diameter (-1,1), stored in the
// hyperbolic-length coordinate u(x) = sign(x) tau(|x|).  In u the set algebra
// of polarization is exact: reflection across the geodesic orthogonal to the
// diameter at foot u0 is the affine map u -> 2 u0 - u.
class DiameterSet {
public:
    struct Interval {
        double lo, hi; // u coordinates, lo <= hi
    };

    DiameterSet() = default;

    static DiameterSet from_u_intervals(std::vector<Interval> iv) {
        DiameterSet s;
        s.intervals_ = std::move(iv);
        s.normalize();
        return s;
    }

    static DiameterSet from_euclidean(const std::vector<std::pair<double, double>>& xs) {
        std::vector<Interval> iv;
        iv.reserve(xs.size());
        for (auto [a, b] : xs) {
            if (b < a) std::swap(a, b);
            iv.push_back({u_of_x(a), u_of_x(b)});
        }
        return from_u_intervals(std::move(iv));
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }

    std::vector<std::pair<double, double>> euclidean_intervals() const {
        std::vector<std::pair<double, double>> out;
        out.reserve(intervals_.size());
        for (const auto& iv : intervals_) out.emplace_back(x_of_u(iv.lo), x_of_u(iv.hi));
        return out;
    }

    double hyp_length() const {
        double len = 0.0;
        for (const auto& iv : intervals_) len += iv.hi - iv.lo;
        return len;
    }

    DiameterSet reflected(double u0) const {
        std::vector<Interval> iv;
        iv.reserve(intervals_.size());
        for (const auto& i : intervals_) iv.push_back({2.0 * u0 - i.hi, 2.0 * u0 - i.lo});
        return from_u_intervals(std::move(iv));
    }

    DiameterSet clipped_below(double u0) const { // intersection with {u <= u0}
        std::vector<Interval> iv;
        for (const auto& i : intervals_) {
            if (i.lo > u0) continue;
            iv.push_back({i.lo, std::min(i.hi, u0)});
        }
        return from_u_intervals(std::move(iv));
    }

    DiameterSet clipped_above(double u0) const { // intersection with {u >= u0}
        std::vector<Interval> iv;
        for (const auto& i : intervals_) {
            if (i.hi < u0) continue;
            iv.push_back({std::max(i.lo, u0), i.hi});
        }
        return from_u_intervals(std::move(iv));
    }

    friend DiameterSet set_union(const DiameterSet& a, const DiameterSet& b) {
        std::vector<Interval> iv = a.intervals_;
        iv.insert(iv.end(), b.intervals_.begin(), b.intervals_.end());
        return from_u_intervals(std::move(iv));
    }

    friend DiameterSet set_intersection(const DiameterSet& a, const DiameterSet& b) {
        std::vector<Interval> iv;
        std::size_t i = 0, j = 0;
        while (i < a.intervals_.size() && j < b.intervals_.size()) {
            const auto& p = a.intervals_[i];
            const auto& q = b.intervals_[j];
            const double lo = std::max(p.lo, q.lo), hi = std::min(p.hi, q.hi);
            if (lo <= hi) iv.push_back({lo, hi});
            (p.hi < q.hi) ? ++i : ++j;
        }
        return from_u_intervals(std::move(iv));
    }

    bool operator==(const DiameterSet& o) const = default;

    // Near-equality in u with endpoint slack (used for fixed-point checks).
    bool approx_equal(const DiameterSet& o, double tol) const {
        if (intervals_.size() != o.intervals_.size()) return false;
        for (std::size_t k = 0; k < intervals_.size(); ++k)
            if (std::abs(intervals_[k].lo - o.intervals_[k].lo) > tol ||
                std::abs(intervals_[k].hi - o.intervals_[k].hi) > tol)
                return false;
        return true;
    }

private:
    // Sort, drop degenerate intervals (isolated points carry no length or
    // capacity), merge overlaps and touching neighbours.
    void normalize() {
        std::sort(intervals_.begin(), intervals_.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        std::vector<Interval> out;
        for (const auto& iv : intervals_) {
            if (!(iv.hi > iv.lo)) continue;
            if (!out.empty() && iv.lo <= out.back().hi + merge_slack) {
                out.back().hi = std::max(out.back().hi, iv.hi);
            } else {
                out.push_back(iv);
            }
        }
        intervals_ = std::move(out);
    }

    static constexpr double merge_slack = 1e-13;

    std::vector<Interval> intervals_;
};

} // namespace hypcap
