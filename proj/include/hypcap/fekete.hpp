#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <limits>
#include <random>
#include <vector>

#include "hypcap/boundary_chart.hpp"
#include "hypcap/diameter_set.hpp"
#include "hypcap/grid_set.hpp"
#include "hypcap/hedgehog.hpp"

namespace hypcap {

// Fekete estimation of the hyperbolic transfinite diameter
//   d_n(E) = max over n-tuples of ( prod_{j<k} p(z_j,z_k) )^{2/(n(n-1))}
// and of the conformal capacity through cap(E) = 2 pi / log(1/d_h(E)).
// Since d_n >= d_h, every cap_n is an upper bound (up to optimizer
// sub-optimality, which biases d_n low; restart spread tracks that noise).

struct FeketeConfig {
    std::vector<int> n_sequence{16, 32, 64, 128, 256};
    int restarts = 8;
    double tolerance = 1e-10; // relative objective change at convergence
    std::uint64_t seed = 0;

    // Model fitted to the last three cap_n values.  reciprocal_n is the
    // plain cap_n = cap + c/n fit; reciprocal_log_n adds a log(n)/n basis
    // term, which tracks the observed n-diameter error of smooth boundaries
    // much more closely (see the acceptance suite) and is the default.
    enum class Extrapolation { none, reciprocal_n, reciprocal_log_n };
    Extrapolation extrapolation = Extrapolation::reciprocal_log_n;

    bool parallel_restarts = true;

    void validate() const {
        if (n_sequence.empty())
            throw domain_error("FeketeConfig: empty n sequence");
        int prev = 2;
        for (int n : n_sequence) {
            if (n < 3 || n <= prev)
                throw domain_error("FeketeConfig: n sequence must be strictly increasing, each >= 3");
            prev = n;
        }
        if (restarts < 1)
            throw domain_error("FeketeConfig: restarts must be >= 1");
        if (!(tolerance > 0.0))
            throw domain_error("FeketeConfig: tolerance must be > 0");
    }
};

struct CapacityEstimate {
    double cap_extrapolated = 0.0;
    std::vector<int> n_values;
    std::vector<double> cap_upper_bounds; // one per n, non-increasing
    std::vector<double> d_n;              // one per n
    std::vector<HypPoint> fekete_points;  // optimizer output at the final n
    bool degenerate = false;              // zero-capacity input

    struct PerN {
        int n = 0;
        double objective = 0.0;  // best sum_{j<k} log p
        double spread = 0.0;     // max-min of cap_n across restarts
        bool converged = true;
    };
    std::vector<PerN> diagnostics;

    double final_spread() const {
        return diagnostics.empty() ? 0.0 : diagnostics.back().spread;
    }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t restart) {
    return splitmix64(splitmix64(seed ^ (n << 20)) ^ (restart + 1));
}

// Pairs closer than this pseudo-distance are rejected during line search.
inline constexpr double coincidence_guard = 1e-9;

inline double pair_log(const std::complex<double>& zi, const std::complex<double>& zk) {
    const double num = std::abs(zi - zk);
    const double den = std::abs(1.0 - zi * std::conj(zk));
    const double p = num / den;
    if (p < coincidence_guard) return -std::numeric_limits<double>::infinity();
    return std::log(p);
}

// Optimizer for points on a 1-D boundary chart.  Points carry a piece index
// and a hyperbolic arc-length coordinate inside the piece.  A sweep does,
// per point, a global candidate scan (all pieces) followed by golden-section
// refinement; a projected Barzilai-Borwein ascent with analytic gradient
// then polishes all coordinates simultaneously.
class ChartOptimizer {
public:
    ChartOptimizer(const BoundaryChart& chart, int n, double tol)
        : chart_(chart), n_(n), tol_(tol) {
        for (const auto& p : chart.pieces) {
            lengths_.push_back(p.hyp_length());
            offsets_.push_back(total_);
            total_ += lengths_.back();
        }
    }

    struct Result {
        double objective = -std::numeric_limits<double>::infinity();
        std::vector<std::complex<double>> points;
        bool converged = false;
    };

    Result run(std::uint64_t seed, bool equispaced_start) {
        std::mt19937_64 rng(seed);
        init(rng, equispaced_start);
        double obj = total_objective();
        bool converged = false;
        const int max_outer = 60;
        for (int outer = 0; outer < max_outer; ++outer) {
            // One global candidate scan up front; afterwards cheap local
            // refinement, with a final global scan gating convergence.
            sweep(outer, /*global=*/outer == 0);
            polish();
            double next = total_objective();
            if (std::isfinite(obj) && std::abs(next - obj) <= tol_ * std::abs(obj)) {
                if (outer > 0) {
                    sweep(outer, /*global=*/true);
                    polish();
                    next = total_objective();
                }
                if (std::abs(next - obj) <= tol_ * std::abs(obj)) {
                    obj = next;
                    converged = true;
                    break;
                }
            }
            obj = next;
        }
        Result res;
        res.objective = obj;
        res.points = z_;
        res.converged = converged;
        return res;
    }

private:
    void place(int i, int piece, double s) {
        piece_[i] = piece;
        s_[i] = s;
        z_[i] = chart_.pieces[piece].at(s);
    }

    void locate_global(double g, int& piece, double& s) const {
        g = std::clamp(g, 0.0, total_ * (1.0 - 1e-15));
        piece = int(offsets_.size()) - 1;
        for (std::size_t p = 0; p + 1 < offsets_.size(); ++p)
            if (g < offsets_[p + 1]) { piece = int(p); break; }
        s = g - offsets_[piece];
    }

    void init(std::mt19937_64& rng, bool equispaced) {
        piece_.assign(n_, 0);
        s_.assign(n_, 0.0);
        z_.assign(n_, {0.0, 0.0});
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double jitter_phase = equispaced ? 0.5 : unit(rng);
        for (int i = 0; i < n_; ++i) {
            double g = equispaced ? total_ * (i + 0.5) / n_
                                  : total_ * std::fmod((i + jitter_phase) / n_ + 0.31 * unit(rng), 1.0);
            int p; double s;
            locate_global(g, p, s);
            place(i, p, s);
        }
    }

    double point_objective(int i, const std::complex<double>& zi) const {
        double f = 0.0;
        for (int k = 0; k < n_; ++k) {
            if (k == i) continue;
            const double t = pair_log(zi, z_[k]);
            if (!std::isfinite(t)) return t;
            f += t;
        }
        return f;
    }

    double total_objective() const {
        double f = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int k = i + 1; k < n_; ++k) {
                const double t = pair_log(z_[i], z_[k]);
                if (!std::isfinite(t)) return t;
                f += t;
            }
        return f;
    }

    void sweep(int sweep_index, bool global) {
        const int K = std::clamp(2 * n_, 48, 192);
        // deterministic per-sweep offset so repeated scans see new positions
        const double phase = std::fmod(0.6180339887498949 * (sweep_index + 1), 1.0);
        for (int i = 0; i < n_; ++i) {
            double best_f = point_objective(i, z_[i]);
            int best_piece = piece_[i];
            double best_s = s_[i];
            if (global) {
                for (int c = 0; c < K; ++c) {
                    const double g = total_ * ((c + phase) / K);
                    int p; double s;
                    locate_global(g, p, s);
                    const double f = point_objective(i, chart_.pieces[p].at(s));
                    if (f > best_f) { best_f = f; best_piece = p; best_s = s; }
                }
            }
            // golden-section refinement inside the winning piece
            const double len = lengths_[best_piece];
            const double step = total_ / K;
            double lo = best_s - step, hi = best_s + step;
            if (!chart_.pieces[best_piece].periodic) {
                lo = std::max(lo, 0.0);
                hi = std::min(hi, len);
            }
            constexpr double gr = 0.6180339887498949;
            const double bracket_target = 1e-13 * total_;
            double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
            double f1 = point_objective(i, piece_at(best_piece, x1));
            double f2 = point_objective(i, piece_at(best_piece, x2));
            for (int it = 0; it < 72 && hi - lo > bracket_target; ++it) {
                if (f1 < f2) {
                    lo = x1; x1 = x2; f1 = f2;
                    x2 = lo + gr * (hi - lo);
                    f2 = point_objective(i, piece_at(best_piece, x2));
                } else {
                    hi = x2; x2 = x1; f2 = f1;
                    x1 = hi - gr * (hi - lo);
                    f1 = point_objective(i, piece_at(best_piece, x1));
                }
            }
            const double sx = (f1 > f2) ? x1 : x2;
            const double fx = std::max(f1, f2);
            if (fx >= best_f) { best_s = wrap(best_piece, sx); }
            place(i, best_piece, best_s);
        }
    }

    std::complex<double> piece_at(int piece, double s) const {
        return chart_.pieces[piece].at(wrap(piece, s));
    }

    double wrap(int piece, double s) const {
        const double len = lengths_[piece];
        if (chart_.pieces[piece].periodic) {
            s = std::fmod(s, len);
            if (s < 0) s += len;
            return s;
        }
        return std::clamp(s, 0.0, len);
    }

    // d/ds_i of sum_k log p(z_i, z_k):
    //   dlog p/ds = Re( conj(w) dw/dz zdot ) / |w|^2,
    //   w = (z_i - z_k)/(1 - z_i conj(z_k)),  dw/dz_i = (1-|z_k|^2)/(1 - z_i conj(z_k))^2.
    void gradient(std::vector<double>& g) const {
        g.assign(n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            const std::complex<double> zdot = chart_.pieces[piece_[i]].tangent(s_[i]);
            double gi = 0.0;
            for (int k = 0; k < n_; ++k) {
                if (k == i) continue;
                const std::complex<double> den = 1.0 - z_[i] * std::conj(z_[k]);
                const std::complex<double> w = (z_[i] - z_[k]) / den;
                const std::complex<double> dw = (1.0 - std::norm(z_[k])) / (den * den);
                gi += std::real(std::conj(w) * dw * zdot) / std::norm(w);
            }
            g[i] = gi;
        }
    }

    void polish() {
        std::vector<double> g(n_), g_prev(n_), ds(n_);
        double obj = total_objective();
        double step = 1e-3 * total_ / n_;
        gradient(g);
        for (int it = 0; it < 150; ++it) {
            // Barzilai-Borwein step length from the previous accepted move.
            if (it > 0) {
                double num = 0.0, den = 0.0;
                for (int i = 0; i < n_; ++i) {
                    const double dg = g[i] - g_prev[i];
                    num += ds[i] * ds[i];
                    den += -ds[i] * dg; // ascent: curvature along the move
                }
                if (den > 0) step = std::clamp(num / den, 1e-9 * total_, 0.2 * total_);
            }
            const std::vector<double> s_prev = s_;
            g_prev = g;
            double trial = step;
            bool accepted = false;
            for (int bt = 0; bt < 30; ++bt) {
                std::vector<double> qs(n_);
                for (int i = 0; i < n_; ++i) qs[i] = wrap(piece_[i], s_prev[i] + trial * g[i]);
                const double cand = objective_at(piece_, qs);
                if (cand > obj) {
                    for (int i = 0; i < n_; ++i) {
                        // true displacement: clamped moves show up in the
                        // coordinate, wrapped ones only in trial*g
                        ds[i] = chart_.pieces[piece_[i]].periodic ? trial * g[i]
                                                                  : qs[i] - s_prev[i];
                        place(i, piece_[i], qs[i]);
                    }
                    const double rel = (cand - obj) / std::max(std::abs(obj), 1e-300);
                    obj = cand;
                    accepted = true;
                    if (rel < tol_) return;
                    break;
                }
                trial *= 0.5;
            }
            if (!accepted) return;
            gradient(g);
        }
    }

    double objective_at(const std::vector<int>& pieces, const std::vector<double>& ss) const {
        std::vector<std::complex<double>> pts(n_);
        for (int i = 0; i < n_; ++i) pts[i] = chart_.pieces[pieces[i]].at(ss[i]);
        double f = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int k = i + 1; k < n_; ++k) {
                const double t = pair_log(pts[i], pts[k]);
                if (!std::isfinite(t)) return t;
                f += t;
            }
        return f;
    }

    const BoundaryChart& chart_;
    int n_;
    double tol_;
    std::vector<double> lengths_, offsets_;
    double total_ = 0.0;

    std::vector<int> piece_;
    std::vector<double> s_;
    std::vector<std::complex<double>> z_;
};

struct BestOfRestarts {
    double objective = -std::numeric_limits<double>::infinity();
    std::vector<std::complex<double>> points;
    double spread_obj_min = std::numeric_limits<double>::infinity();
    double spread_obj_max = -std::numeric_limits<double>::infinity();
    bool converged = true;
};

inline BestOfRestarts run_restarts(const BoundaryChart& chart, int n, const FeketeConfig& cfg) {
    auto one = [&](int restart) {
        ChartOptimizer opt(chart, n, cfg.tolerance);
        return opt.run(derive_seed(cfg.seed, std::uint64_t(n), std::uint64_t(restart)), restart == 0);
    };
    std::vector<ChartOptimizer::Result> results(cfg.restarts);
    if (cfg.parallel_restarts && cfg.restarts > 1) {
        std::vector<std::future<ChartOptimizer::Result>> futs;
        futs.reserve(cfg.restarts);
        for (int r = 0; r < cfg.restarts; ++r)
            futs.push_back(std::async(std::launch::async, one, r));
        for (int r = 0; r < cfg.restarts; ++r) results[r] = futs[r].get();
    } else {
        for (int r = 0; r < cfg.restarts; ++r) results[r] = one(r);
    }
    BestOfRestarts best;
    for (int r = 0; r < cfg.restarts; ++r) {
        const auto& res = results[r];
        best.spread_obj_min = std::min(best.spread_obj_min, res.objective);
        best.spread_obj_max = std::max(best.spread_obj_max, res.objective);
        if (res.objective > best.objective) { // ties keep the lowest restart index
            best.objective = res.objective;
            best.points = res.points;
            // the flag reports the restart that produced the returned value;
            // the spread records how far the others landed
            best.converged = res.converged;
        }
    }
    return best;
}

inline double cap_of_objective(double obj, int n) {
    // d_n = exp(2 obj/(n(n-1))),  cap_n = 2 pi/log(1/d_n) = -pi n(n-1)/obj.
    return -pi * double(n) * double(n - 1) / obj;
}

} // namespace detail

// Best found n-tuple on the chart and its normalized product d_n.
inline std::pair<std::vector<HypPoint>, double>
fekete_points(const BoundaryChart& chart, int n, const FeketeConfig& cfg = {}) {
    cfg.validate();
    if (n < 3) throw domain_error("fekete_points: n must be >= 3");
    if (chart.degenerate())
        return {{}, 0.0};
    const auto best = detail::run_restarts(chart, n, cfg);
    std::vector<HypPoint> pts;
    pts.reserve(best.points.size());
    for (const auto& z : best.points) pts.emplace_back(z);
    const double d_n = std::exp(2.0 * best.objective / (double(n) * double(n - 1)));
    return {std::move(pts), d_n};
}

inline CapacityEstimate estimate_capacity(const BoundaryChart& chart, const FeketeConfig& cfg = {}) {
    cfg.validate();
    CapacityEstimate est;
    if (chart.pieces.empty() || chart.degenerate()) {
        est.degenerate = true;
        return est;
    }
    for (int n : cfg.n_sequence) {
        const auto best = detail::run_restarts(chart, n, cfg);
        CapacityEstimate::PerN diag;
        diag.n = n;
        diag.objective = best.objective;
        diag.converged = best.converged;
        const double cap_hi = detail::cap_of_objective(best.spread_obj_min, n);
        const double cap_lo = detail::cap_of_objective(best.spread_obj_max, n);
        diag.spread = std::abs(cap_hi - cap_lo);
        est.diagnostics.push_back(diag);
        est.n_values.push_back(n);
        est.d_n.push_back(std::exp(2.0 * best.objective / (double(n) * double(n - 1))));
        est.cap_upper_bounds.push_back(detail::cap_of_objective(best.objective, n));
        if (n == cfg.n_sequence.back()) {
            est.fekete_points.clear();
            est.fekete_points.reserve(best.points.size());
            for (const auto& z : best.points) est.fekete_points.emplace_back(z);
        }
    }

    const auto& caps = est.cap_upper_bounds;
    const auto& ns = est.n_values;
    const std::size_t m = caps.size();
    using Ex = FeketeConfig::Extrapolation;
    if (cfg.extrapolation == Ex::none || m == 1) {
        est.cap_extrapolated = caps.back();
    } else if (cfg.extrapolation == Ex::reciprocal_n || m == 2) {
        const std::size_t k = std::min<std::size_t>(3, m);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = m - k; i < m; ++i) {
            const double x = 1.0 / ns[i];
            sx += x; sy += caps[i]; sxx += x * x; sxy += x * caps[i];
        }
        const double den = k * sxx - sx * sx;
        const double c1 = (k * sxy - sx * sy) / den;
        est.cap_extrapolated = (sy - c1 * sx) / k;
    } else {
        // exact 3-point solve of cap_n = c0 + c1/n + c2 log(n)/n
        const std::size_t i0 = m - 3;
        double A[3][4];
        for (int r = 0; r < 3; ++r) {
            const double n = ns[i0 + r];
            A[r][0] = 1.0;
            A[r][1] = 1.0 / n;
            A[r][2] = std::log(n) / n;
            A[r][3] = caps[i0 + r];
        }
        for (int c = 0; c < 3; ++c) { // Gaussian elimination with partial pivot
            int piv = c;
            for (int r = c + 1; r < 3; ++r)
                if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
            std::swap(A[c], A[piv]);
            for (int r = 0; r < 3; ++r) {
                if (r == c) continue;
                const double f = A[r][c] / A[c][c];
                for (int cc = c; cc < 4; ++cc) A[r][cc] -= f * A[c][cc];
            }
        }
        est.cap_extrapolated = A[0][3] / A[0][0];
    }
    // The extrapolated value must stay below the final (smallest) upper bound.
    est.cap_extrapolated = std::clamp(est.cap_extrapolated, 0.0, caps.back());
    return est;
}

inline CapacityEstimate estimate_capacity(const Hedgehog& h, const FeketeConfig& cfg = {}) {
    if (h.empty()) {
        CapacityEstimate est;
        est.degenerate = true;
        return est;
    }
    return estimate_capacity(boundary_chart(h), cfg);
}

inline CapacityEstimate estimate_capacity(const DiameterSet& d, const FeketeConfig& cfg = {}) {
    if (d.empty()) {
        CapacityEstimate est;
        est.degenerate = true;
        return est;
    }
    return estimate_capacity(boundary_chart(d), cfg);
}

} // namespace hypcap
