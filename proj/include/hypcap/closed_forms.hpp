#pragma once

#include <cmath>
#include <map>
#include <string>

#include "hypcap/elliptic.hpp"

namespace hypcap {

// Exact conformal-capacity formulas for the symmetric families that admit
// them.  All other sets go through the Fekete estimator (fekete.hpp).

enum class ClosedForm {
    disk,             // closure of the disk of Euclidean radius r
    sym_interval,     // [-r, r]
    zero_interval,    // [0, r]
    rotated_star,     // n rotated copies of an interval [r, rho] on even rays
    two_star_families // n-fold family of two interleaved diameter stars
};

inline const char* closed_form_name(ClosedForm f) {
    switch (f) {
        case ClosedForm::disk: return "disk";
        case ClosedForm::sym_interval: return "sym_interval";
        case ClosedForm::zero_interval: return "zero_interval";
        case ClosedForm::rotated_star: return "rotated_star";
        case ClosedForm::two_star_families: return "two_star_families";
    }
    return "?";
}

struct ClosedFormCapacity {
    double value = 0.0;
    ClosedForm formula_id = ClosedForm::disk;
    std::map<std::string, double> parameters;
};

// Moduli this close to 0 or 1 make K/K' degenerate; reject rather than clamp.
inline constexpr double modulus_guard = 1e-14;

inline double checked_modulus(double kappa, const char* who) {
    if (!(kappa > modulus_guard && kappa < 1.0 - modulus_guard))
        throw domain_error(std::string(who) + ": modulus " + std::to_string(kappa) +
                           " is degenerate (too close to 0 or 1)");
    return kappa;
}

// cap(closure of D_r) = 2 pi / log(1/r).
inline ClosedFormCapacity cap_disk(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw domain_error("cap_disk: radius must lie in (0,1)");
    ClosedFormCapacity c;
    c.formula_id = ClosedForm::disk;
    c.value = 2.0 * pi / std::log(1.0 / r);
    c.parameters = {{"r", r}};
    return c;
}

// cap([-r,r]) = 8 K(r^2)/K'(r^2).
inline ClosedFormCapacity cap_sym_interval(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw domain_error("cap_sym_interval: half-length must lie in (0,1)");
    ClosedFormCapacity c;
    c.formula_id = ClosedForm::sym_interval;
    c.value = 8.0 * elliptic_ratio(checked_modulus(r * r, "cap_sym_interval"));
    c.parameters = {{"r", r}};
    return c;
}

// cap([0,r]) = 4 K(r)/K'(r).
inline ClosedFormCapacity cap_zero_interval(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw domain_error("cap_zero_interval: length must lie in (0,1)");
    ClosedFormCapacity c;
    c.formula_id = ClosedForm::zero_interval;
    c.value = 4.0 * elliptic_ratio(checked_modulus(r, "cap_zero_interval"));
    c.parameters = {{"r", r}};
    return c;
}

// n congruent intervals of hyperbolic length tau starting at radius r on the
// evenly distributed rays exp(2 pi i k/n) [0,1):
//   rho   = outer Euclidean radius = r(tau(r) + tau)
//   kappa = (rho^n - r^n)/(1 - r^n rho^n)
//   cap   = 4 n K(kappa)/K'(kappa)
inline ClosedFormCapacity cap_rotated_star(int n, double r, double tau) {
    if (n < 1) throw domain_error("cap_rotated_star: n must be >= 1");
    if (!(r >= 0.0 && r < 1.0)) throw domain_error("cap_rotated_star: r must lie in [0,1)");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw domain_error("cap_rotated_star: tau must be > 0");
    const double et = std::exp(tau);
    const double rho = (et * (1.0 + r) - (1.0 - r)) / (et * (1.0 + r) + (1.0 - r));
    if (!(rho < 1.0)) throw domain_error("cap_rotated_star: spike leaves the disk");
    const double rn = std::pow(r, n), rhon = std::pow(rho, n);
    const double kappa = checked_modulus((rhon - rn) / (1.0 - rn * rhon), "cap_rotated_star");
    ClosedFormCapacity c;
    c.formula_id = ClosedForm::rotated_star;
    c.value = 4.0 * n * elliptic_ratio(kappa);
    c.parameters = {{"n", double(n)}, {"r", r}, {"tau", tau}, {"rho", rho}, {"kappa", kappa}};
    return c;
}

// Two interleaved families of n diameter segments each, half-lengths r1 and
// r2 (rays spaced pi/2n):
//   kappa = (r1^{2n} + r2^{2n})/(1 + r1^{2n} r2^{2n}),  cap = 8 n K(kappa)/K'(kappa)
inline ClosedFormCapacity cap_two_star_families(int n, double r1, double r2) {
    if (n < 1) throw domain_error("cap_two_star_families: n must be >= 1");
    if (!(r1 >= 0.0 && r1 < 1.0 && r2 >= 0.0 && r2 < 1.0))
        throw domain_error("cap_two_star_families: radii must lie in [0,1)");
    if (r1 == 0.0 && r2 == 0.0)
        throw domain_error("cap_two_star_families: both radii zero (capacity 0, no modulus)");
    const double p1 = std::pow(r1, 2 * n), p2 = std::pow(r2, 2 * n);
    const double kappa = checked_modulus((p1 + p2) / (1.0 + p1 * p2), "cap_two_star_families");
    ClosedFormCapacity c;
    c.formula_id = ClosedForm::two_star_families;
    c.value = 8.0 * n * elliptic_ratio(kappa);
    c.parameters = {{"n", double(n)}, {"r1", r1}, {"r2", r2}, {"kappa", kappa}};
    return c;
}

} // namespace hypcap
