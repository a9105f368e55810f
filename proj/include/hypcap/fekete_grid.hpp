#pragma once

#include <algorithm>
#include <complex>
#include <future>
#include <random>
#include <vector>

#include "hypcap/fekete.hpp"
#include "hypcap/grid_set.hpp"

namespace hypcap {

namespace detail {

// Boundary cells of a grid set: occupied cells with an unoccupied 4-neighbor
// (angular wrap; the outer rim counts as exposed).
inline std::vector<std::complex<double>> boundary_cell_centers(const GridSet& g) {
    std::vector<std::complex<double>> out;
    const int nr = g.n_r(), nt = g.n_theta();
    auto occ = [&](int i, int j) {
        if (i < 0) { // inward of ring 0: exposed only if the ring has gaps
            for (int jj = 0; jj < nt; ++jj)
                if (!g.occupied(0, jj)) return false;
            return true;
        }
        if (i >= nr) return false;
        return g.occupied(i, (j % nt + nt) % nt);
    };
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nt; ++j) {
            if (!g.occupied(i, j)) continue;
            if (!occ(i - 1, j) || !occ(i + 1, j) || !occ(i, j - 1) || !occ(i, j + 1))
                out.push_back(g.cell_center(i, j));
        }
    return out;
}

// Candidate-scan + in-cell pattern-search optimizer for grid sets.  Each
// point lives in some boundary cell and can move continuously inside it.
class GridOptimizer {
public:
    GridOptimizer(const GridSet& g, int n, double tol)
        : grid_(g), n_(n), tol_(tol), centers_(boundary_cell_centers(g)) {}

    bool viable() const { return !centers_.empty(); }

    ChartOptimizer::Result run(std::uint64_t seed, bool even_start) {
        std::mt19937_64 rng(seed);
        z_.assign(n_, {0, 0});
        const std::size_t C = centers_.size();
        for (int i = 0; i < n_; ++i) {
            std::size_t c = even_start ? (std::size_t(i) * C) / n_
                                       : std::uniform_int_distribution<std::size_t>(0, C - 1)(rng);
            z_[i] = centers_[c];
        }
        double obj = objective();
        bool converged = false;
        for (int outer = 0; outer < 40; ++outer) {
            for (int i = 0; i < n_; ++i) move_point(i);
            const double next = objective();
            if (std::isfinite(obj) && std::abs(next - obj) <= tol_ * std::abs(obj)) {
                converged = true;
                obj = next;
                break;
            }
            obj = next;
        }
        ChartOptimizer::Result res;
        res.objective = obj;
        res.points = z_;
        res.converged = converged;
        return res;
    }

private:
    double point_objective(int i, std::complex<double> zi) const {
        double f = 0.0;
        for (int k = 0; k < n_; ++k) {
            if (k == i) continue;
            const double t = pair_log(zi, z_[k]);
            if (!std::isfinite(t)) return t;
            f += t;
        }
        return f;
    }

    double objective() const {
        double f = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int k = i + 1; k < n_; ++k) {
                const double t = pair_log(z_[i], z_[k]);
                if (!std::isfinite(t)) return t;
                f += t;
            }
        return f;
    }

    void move_point(int i) {
        double best = point_objective(i, z_[i]);
        std::complex<double> best_z = z_[i];
        for (const auto& c : centers_) {
            const double f = point_objective(i, c);
            if (f > best) { best = f; best_z = c; }
        }
        // compass refinement inside the cell of the winning center
        int ci, cj;
        if (grid_.locate(best_z, ci, cj)) {
            const double r0 = ci * grid_.dr(), r1 = (ci + 1) * grid_.dr();
            const double t0 = cj * grid_.dtheta(), t1 = (cj + 1) * grid_.dtheta();
            double rho = std::abs(best_z), th = std::arg(best_z);
            if (th < 0) th += 2.0 * pi;
            double sr = (r1 - r0) / 2.0, st = (t1 - t0) / 2.0;
            for (int it = 0; it < 40 && (sr > 1e-12 || st > 1e-12); ++it) {
                bool moved = false;
                const double cand_r[2] = {std::min(rho + sr, r1 * (1 - 1e-12)), std::max(rho - sr, r0)};
                for (double rr : cand_r) {
                    const double f = point_objective(i, std::polar(rr, th));
                    if (f > best) { best = f; rho = rr; moved = true; }
                }
                const double cand_t[2] = {std::min(th + st, t1), std::max(th - st, t0)};
                for (double tt : cand_t) {
                    const double f = point_objective(i, std::polar(rho, tt));
                    if (f > best) { best = f; th = tt; moved = true; }
                }
                if (!moved) { sr *= 0.5; st *= 0.5; }
            }
            best_z = std::polar(rho, th);
        }
        z_[i] = best_z;
    }

    const GridSet& grid_;
    int n_;
    double tol_;
    std::vector<std::complex<double>> centers_;
    std::vector<std::complex<double>> z_;
};

} // namespace detail

inline CapacityEstimate estimate_capacity(const GridSet& g, const FeketeConfig& cfg = {}) {
    cfg.validate();
    CapacityEstimate est;
    if (g.occupied_count() == 0) {
        est.degenerate = true;
        return est;
    }
    for (int n : cfg.n_sequence) {
        auto one = [&](int restart) {
            detail::GridOptimizer opt(g, n, cfg.tolerance);
            return opt.run(detail::derive_seed(cfg.seed, std::uint64_t(n), std::uint64_t(restart)),
                           restart == 0);
        };
        std::vector<detail::ChartOptimizer::Result> results(cfg.restarts);
        if (cfg.parallel_restarts && cfg.restarts > 1) {
            std::vector<std::future<detail::ChartOptimizer::Result>> futs;
            for (int r = 0; r < cfg.restarts; ++r)
                futs.push_back(std::async(std::launch::async, one, r));
            for (int r = 0; r < cfg.restarts; ++r) results[r] = futs[r].get();
        } else {
            for (int r = 0; r < cfg.restarts; ++r) results[r] = one(r);
        }
        detail::BestOfRestarts best;
        for (int r = 0; r < cfg.restarts; ++r) {
            const auto& res = results[r];
            best.spread_obj_min = std::min(best.spread_obj_min, res.objective);
            best.spread_obj_max = std::max(best.spread_obj_max, res.objective);
            best.converged = best.converged && res.converged;
            if (res.objective > best.objective) {
                best.objective = res.objective;
                best.points = res.points;
            }
        }
        CapacityEstimate::PerN diag;
        diag.n = n;
        diag.objective = best.objective;
        diag.converged = best.converged;
        diag.spread = std::abs(detail::cap_of_objective(best.spread_obj_min, n) -
                               detail::cap_of_objective(best.spread_obj_max, n));
        est.diagnostics.push_back(diag);
        est.n_values.push_back(n);
        est.d_n.push_back(std::exp(2.0 * best.objective / (double(n) * double(n - 1))));
        est.cap_upper_bounds.push_back(detail::cap_of_objective(best.objective, n));
        if (n == cfg.n_sequence.back()) {
            est.fekete_points.clear();
            for (const auto& z : best.points) est.fekete_points.emplace_back(z);
        }
    }
    const std::size_t m = est.cap_upper_bounds.size();
    if (m >= 2) {
        const std::size_t k = std::min<std::size_t>(3, m);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = m - k; i < m; ++i) {
            const double x = 1.0 / est.n_values[i];
            sx += x; sy += est.cap_upper_bounds[i]; sxx += x * x; sxy += x * est.cap_upper_bounds[i];
        }
        const double den = k * sxx - sx * sx;
        const double c1 = (k * sxy - sx * sy) / den;
        est.cap_extrapolated = std::clamp((sy - c1 * sx) / k, 0.0, est.cap_upper_bounds.back());
    } else {
        est.cap_extrapolated = est.cap_upper_bounds.back();
    }
    return est;
}

} // namespace hypcap
