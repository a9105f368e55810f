#pragma once

#include <complex>
#include <random>

#include "hypcap/disk.hpp"

namespace hypcap {

// Automorphism of the unit disk z -> e^{i theta} (z - a)/(1 - conj(a) z),
// optionally preceded by complex conjugation (anti-Moebius; reflections
// across geodesics are of this form).  Both kinds preserve the
// pseudo-hyperbolic metric.
struct MobiusMap {
    std::complex<double> a{0.0, 0.0}; // |a| < 1
    double theta = 0.0;
    bool conjugate_first = false;

    static MobiusMap identity() { return {}; }

    // Sends p to the origin (and keeps the ideal boundary orientation).
    static MobiusMap to_origin(const HypPoint& p) { return {p.value(), 0.0, false}; }

    static MobiusMap rotation(double angle) { return {{0.0, 0.0}, angle, false}; }

    // Translation by hyperbolic length t along the ray of direction `angle`,
    // i.e. the rigid motion with axis through the origin in that direction.
    static MobiusMap translation_along_ray(double angle, double t) {
        const double d = r_of_tau(std::abs(t));
        const std::complex<double> dir = std::polar(std::signbit(t) ? -1.0 : 1.0, angle);
        // z -> e^{i angle} (w + d)/(1 + d w), w = e^{-i angle} z
        MobiusMap m;
        m.a = -d * dir;
        m.theta = 0.0;
        return m;
    }

    std::complex<double> apply_complex(std::complex<double> z) const {
        if (conjugate_first) z = std::conj(z);
        const std::complex<double> w = (z - a) / (1.0 - std::conj(a) * z);
        return std::polar(1.0, theta) * w;
    }

    HypPoint operator()(const HypPoint& p) const {
        std::complex<double> w = apply_complex(p.value());
        // Guard against rounding pushing a near-boundary image out of the disk.
        const double aw = std::abs(w);
        if (aw > 1.0 - boundary_margin) w *= (1.0 - boundary_margin) / aw;
        return HypPoint(w);
    }

    MobiusMap inverse() const {
        // For g(z) = e^{i t}(z-a)/(1-conj(a) z):
        //   g^{-1}(w) = e^{-i t}(w - a')/(1 - conj(a') w),  a' = -a e^{i t}.
        MobiusMap inv;
        inv.a = -a * std::polar(1.0, theta);
        inv.theta = -theta;
        if (!conjugate_first) return inv;
        // (M o C)^{-1} = C o M^{-1} = conj(M^{-1}(conj(.)))  which is again
        // conjugation followed by a Moebius map with conjugated parameters.
        MobiusMap r;
        r.conjugate_first = true;
        r.a = std::conj(inv.a);
        r.theta = -inv.theta;
        return r;
    }
};

// Composition: (m2 * m1)(z) = m2(m1(z)).
inline MobiusMap operator*(const MobiusMap& m2, const MobiusMap& m1) {
    // Compose numerically through three boundary-independent sample points is
    // fragile; instead derive parameters algebraically from the matrix form.
    // g(z) = e^{i t}(z-a)/(1-conj(a)z)  <->  matrix [e^{it/2}, -a e^{it/2}; -conj(a) e^{-it/2}, e^{-it/2}]
    using C = std::complex<double>;
    auto matrix = [](const MobiusMap& m, C& A, C& B, C& Cc, C& D) {
        const C h = std::polar(1.0, m.theta / 2.0);
        A = h; B = -m.a * h; Cc = -std::conj(m.a) / h; D = 1.0 / h;
    };
    C A1, B1, C1, D1, A2, B2, C2, D2;
    matrix(m1, A1, B1, C1, D1);
    matrix(m2, A2, B2, C2, D2);
    if (m2.conjugate_first) { A1 = std::conj(A1); B1 = std::conj(B1); C1 = std::conj(C1); D1 = std::conj(D1); }
    const C A = A2 * A1 + B2 * C1, B = A2 * B1 + B2 * D1;
    const C Cc = C2 * A1 + D2 * C1, D = C2 * B1 + D2 * D1;
    // Back to canonical parameters: g(z) = (Az+B)/(Cz+D) with |a|<1.
    MobiusMap out;
    out.conjugate_first = m1.conjugate_first != m2.conjugate_first;
    out.a = -B / A;
    out.theta = std::arg(A / D);
    return out;
}

inline MobiusMap random_automorphism(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double rho = std::sqrt(unit(rng)) * 0.93; // keep images comfortably inside
    const double phi = 2.0 * pi * unit(rng);
    MobiusMap m;
    m.a = std::polar(rho, phi);
    m.theta = 2.0 * pi * unit(rng);
    return m;
}

} // namespace hypcap
