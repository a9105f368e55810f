#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hypcap/errors.hpp"

// Primitives of the Poincaré disk model: points, the tau <-> r radius
// conversions, pseudo-hyperbolic and hyperbolic distances, areas.
//
// Conventions used throughout the library:
//   tau(r) = log((1+r)/(1-r))        hyperbolic length of [0,r]
//   r(tau) = (e^tau - 1)/(e^tau + 1) = tanh(tau/2)
//   p(z1,z2) = |z1-z2| / |1 - z1 conj(z2)|
//   d(z1,z2) = log((1+p)/(1-p)) = 2 atanh(p)

namespace hypcap {

inline constexpr double pi = std::numbers::pi;

// Points are kept strictly inside the disk so every hyperbolic quantity
// stays finite; 1 - 1e-12 is the admission boundary.
inline constexpr double boundary_margin = 1e-12;

class HypPoint {
public:
    HypPoint() : z_(0.0, 0.0) {}
    explicit HypPoint(std::complex<double> z) : z_(z) { validate(); }
    HypPoint(double re, double im) : z_(re, im) { validate(); }

    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    std::complex<double> value() const { return z_; }
    double abs() const { return std::abs(z_); }

private:
    void validate() const {
        const double a = std::abs(z_);
        if (!std::isfinite(a) || a > 1.0 - boundary_margin)
            throw domain_error("HypPoint: |z| = " + std::to_string(a) +
                               " is not inside the open unit disk");
    }

    std::complex<double> z_;
};

inline double tau_of_r(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw domain_error("tau_of_r: radius must lie in [0,1)");
    return 2.0 * std::atanh(r);
}

inline double r_of_tau(double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw domain_error("r_of_tau: length must be finite and >= 0");
    return std::tanh(tau / 2.0);
}

// Signed coordinate on the diameter (-1,1): u(x) = sign(x) tau(|x|).
// Hyperbolic reflections orthogonal to the diameter are affine in u.
inline double u_of_x(double x) {
    if (!(x > -1.0 && x < 1.0))
        throw domain_error("u_of_x: point must lie on the open diameter (-1,1)");
    return 2.0 * std::atanh(x);
}

inline double x_of_u(double u) { return std::tanh(u / 2.0); }

inline double pseudo_dist(const HypPoint& z1, const HypPoint& z2) {
    const std::complex<double> num = z1.value() - z2.value();
    const std::complex<double> den = 1.0 - z1.value() * std::conj(z2.value());
    return std::abs(num) / std::abs(den);
}

inline double hyp_dist(const HypPoint& z1, const HypPoint& z2) {
    return 2.0 * std::atanh(pseudo_dist(z1, z2));
}

// Hyperbolic area of the disk of Euclidean radius r: 4 pi r^2/(1-r^2),
// equivalently 4 pi sinh^2(tau/2).
inline double hyp_area_disk(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw domain_error("hyp_area_disk: radius must lie in [0,1)");
    return 4.0 * pi * r * r / (1.0 - r * r);
}

// Hyperbolic radius of the disk with hyperbolic area A: solves 4 pi sinh^2(tau/2) = A.
inline double disk_tau_of_area(double area) {
    if (!(area >= 0.0))
        throw domain_error("disk_tau_of_area: area must be >= 0");
    return 2.0 * std::asinh(std::sqrt(area / (4.0 * pi)));
}

inline double hyp_diameter(std::span<const HypPoint> points) {
    if (points.empty())
        throw domain_error("hyp_diameter: empty point list");
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::max(best, hyp_dist(points[i], points[j]));
    return best;
}

inline double hyp_diameter(const std::vector<HypPoint>& points) {
    return hyp_diameter(std::span<const HypPoint>(points));
}

} // namespace hypcap
