#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "hypcap/disk.hpp"
#include "hypcap/hedgehog.hpp"

namespace hypcap {

// Polar-grid occupancy model of a general compact set.  Rings are
// [i dr, (i+1) dr) with dr = r_max/n_r, columns [j dth, (j+1) dth) with
// dth = 2 pi/n_theta; cells are closed on their lower edges so that
// symmetrizations behave deterministically.
class GridSet {
public:
    GridSet(int n_r, int n_theta, double r_max)
        : n_r_(n_r), n_theta_(n_theta), r_max_(r_max),
          occ_(std::size_t(n_r) * std::size_t(n_theta), 0) {
        if (n_r < 1 || n_theta < 1)
            throw domain_error("GridSet: cell counts must be positive");
        if (!(r_max > 0.0 && r_max < 1.0))
            throw domain_error("GridSet: r_max must lie in (0,1)");
    }

    int n_r() const { return n_r_; }
    int n_theta() const { return n_theta_; }
    double r_max() const { return r_max_; }
    double dr() const { return r_max_ / n_r_; }
    double dtheta() const { return 2.0 * pi / n_theta_; }

    bool occupied(int i, int j) const { return occ_[index(i, j)] != 0; }
    void set(int i, int j, bool v = true) { occ_[index(i, j)] = v ? 1 : 0; }

    const std::vector<std::uint8_t>& cells() const { return occ_; }
    std::vector<std::uint8_t>& cells() { return occ_; }

    std::size_t occupied_count() const {
        std::size_t n = 0;
        for (auto c : occ_) n += c;
        return n;
    }

    std::complex<double> cell_center(int i, int j) const {
        return std::polar((i + 0.5) * dr(), (j + 0.5) * dtheta());
    }

    // Cell containing z, honoring closed-on-lower-edge; false if outside.
    bool locate(std::complex<double> z, int& i, int& j) const {
        const double rho = std::abs(z);
        if (rho >= r_max_) return false;
        double th = std::arg(z);
        if (th < 0) th += 2.0 * pi;
        i = int(rho / dr());
        j = int(th / dtheta());
        if (i >= n_r_) i = n_r_ - 1;
        if (j >= n_theta_) j = n_theta_ - 1;
        return true;
    }

    bool contains(std::complex<double> z) const {
        int i, j;
        return locate(z, i, j) && occupied(i, j);
    }

    // Exact hyperbolic area of one ring cell:
    //   int int 4 rho/(1-rho^2)^2 drho dth = dth [2/(1-rho^2)]_{rho0}^{rho1}.
    double cell_hyp_area(int i) const {
        const double r0 = i * dr(), r1 = (i + 1) * dr();
        return dtheta() * (2.0 / (1.0 - r1 * r1) - 2.0 / (1.0 - r0 * r0));
    }

    double cell_euclidean_area(int i) const {
        const double r0 = i * dr(), r1 = (i + 1) * dr();
        return dtheta() * 0.5 * (r1 * r1 - r0 * r0);
    }

    double hyp_area() const {
        double a = 0.0;
        for (int i = 0; i < n_r_; ++i) {
            const double cell = cell_hyp_area(i);
            for (int j = 0; j < n_theta_; ++j)
                if (occupied(i, j)) a += cell;
        }
        return a;
    }

    double euclidean_area() const {
        double a = 0.0;
        for (int i = 0; i < n_r_; ++i) {
            const double cell = cell_euclidean_area(i);
            for (int j = 0; j < n_theta_; ++j)
                if (occupied(i, j)) a += cell;
        }
        return a;
    }

    // Rasterize a membership predicate by cell-center sampling.
    template <typename Pred>
    static GridSet rasterize(int n_r, int n_theta, double r_max, Pred&& inside) {
        GridSet g(n_r, n_theta, r_max);
        for (int i = 0; i < n_r; ++i)
            for (int j = 0; j < n_theta; ++j)
                if (inside(g.cell_center(i, j))) g.set(i, j);
        return g;
    }

    static GridSet disk(int n_r, int n_theta, double r_max, double radius) {
        return rasterize(n_r, n_theta, r_max,
                         [radius](std::complex<double> z) { return std::abs(z) <= radius; });
    }

    // Hedgehog rasterization: a spike interval occupies the cells its ray
    // passes through; the core disk occupies every cell it covers.
    static GridSet from_hedgehog(const Hedgehog& h, int n_r, int n_theta, double r_max) {
        GridSet g(n_r, n_theta, r_max);
        const double core = h.core_radius();
        for (int i = 0; i < n_r; ++i)
            for (int j = 0; j < n_theta; ++j)
                if (std::abs(g.cell_center(i, j)) <= core) g.set(i, j);
        for (const auto& s : h.spikes()) {
            double th = std::fmod(s.angle, 2.0 * pi);
            if (th < 0) th += 2.0 * pi;
            const int j = std::min(int(th / g.dtheta()), n_theta - 1);
            for (auto [a, b] : s.intervals) {
                const int i0 = std::min(int(a / g.dr()), n_r - 1);
                const int i1 = std::min(int(b / g.dr()), n_r - 1);
                for (int i = i0; i <= i1; ++i) g.set(i, j);
            }
        }
        return g;
    }

    bool operator==(const GridSet& o) const = default;

private:
    std::size_t index(int i, int j) const {
        return std::size_t(i) * std::size_t(n_theta_) + std::size_t(j);
    }

    int n_r_, n_theta_;
    double r_max_;
    std::vector<std::uint8_t> occ_;
};

} // namespace hypcap
