#pragma once

#include <cmath>
#include <complex>

#include "hypcap/disk.hpp"
#include "hypcap/mobius.hpp"

namespace hypcap {

// Tolerance for deciding that a point lies on a geodesic rather than in one
// of its open halfplanes.
inline constexpr double side_tolerance = 1e-12;

enum class Side { negative = -1, on = 0, positive = 1 };

// Oriented hyperbolic geodesic: either a diameter of the disk or a circular
// arc orthogonal to the unit circle, stored by its ideal endpoints.  The
// orientation sign marks the halfplane H+.
//
// Sign conventions for sign = +1:
//   diameter(alpha):  H+ = { z : Im(e^{-i alpha} z) > 0 }
//   arc(t1,t2):       H+ = the side containing the origin (the origin is
//                     always outside the carrying circle).
class Geodesic {
public:
    enum class Kind { diameter, arc };

    static Geodesic diameter(double alpha, int sign = +1) {
        Geodesic g;
        g.kind_ = Kind::diameter;
        g.alpha_ = alpha;
        g.sign_ = sign >= 0 ? 1 : -1;
        return g;
    }

    static Geodesic arc(double theta1, double theta2, int sign = +1) {
        const std::complex<double> e1 = std::polar(1.0, theta1);
        const std::complex<double> e2 = std::polar(1.0, theta2);
        const double chord = std::abs(e1 - e2);
        if (chord < 1e-9)
            throw domain_error("Geodesic::arc: endpoints coincide");
        if (std::abs(e1 + e2) < 1e-9) {
            // Antipodal ideal points: the geodesic is a diameter.
            return diameter(theta1, sign);
        }
        Geodesic g;
        g.kind_ = Kind::arc;
        g.theta1_ = theta1;
        g.theta2_ = theta2;
        g.sign_ = sign >= 0 ? 1 : -1;
        const std::complex<double> s = e1 + e2;
        g.center_ = 2.0 * s / std::norm(s);
        g.radius_ = std::sqrt(std::norm(g.center_) - 1.0);
        return g;
    }

    // Geodesic crossing the diameter of direction `alpha` perpendicularly at
    // the point c e^{i alpha}, c in (-1,1).  With origin_positive, H+ is the
    // halfplane containing the origin (for c = 0 the halfplane containing
    // the -e^{i alpha} direction).
    static Geodesic orthogonal_at(double c, double alpha, bool origin_positive = true) {
        if (!(std::abs(c) < 1.0))
            throw domain_error("Geodesic::orthogonal_at: |c| must be < 1");
        const int sign = origin_positive ? +1 : -1;
        if (std::abs(c) < 1e-14) {
            // Perpendicular diameter; raw side value -Re(e^{-i alpha} z) puts
            // the positive ray of the alpha-diameter in H- when sign = +1.
            return diameter(alpha + pi / 2.0, sign);
        }
        // Ideal endpoints e^{i(alpha +- beta)} with cos(beta) = 2c/(1+c^2).
        const double beta = std::acos(2.0 * c / (1.0 + c * c));
        return arc(alpha + beta, alpha - beta, sign);
    }

    Kind kind() const { return kind_; }
    int sign() const { return sign_; }
    double diameter_angle() const { return alpha_; }
    double arc_theta1() const { return theta1_; }
    double arc_theta2() const { return theta2_; }
    std::complex<double> center() const { return center_; }
    double radius() const { return radius_; }

    // Signed side value: positive in H+, negative in H-, ~0 on the geodesic.
    double side_value(const HypPoint& z) const {
        if (kind_ == Kind::diameter)
            return sign_ * std::imag(std::polar(1.0, -alpha_) * z.value());
        return sign_ * (std::abs(z.value() - center_) - radius_);
    }

    Side classify(const HypPoint& z, double tol = side_tolerance) const {
        const double s = side_value(z);
        if (s > tol) return Side::positive;
        if (s < -tol) return Side::negative;
        return Side::on;
    }

    // Hyperbolic reflection (inversion in the carrying circle or line).
    HypPoint reflect(const HypPoint& z) const {
        std::complex<double> w;
        if (kind_ == Kind::diameter) {
            const std::complex<double> rot = std::polar(1.0, alpha_);
            w = rot * std::conj(std::conj(rot) * z.value());
        } else {
            w = center_ + radius_ * radius_ / std::conj(z.value() - center_);
        }
        const double aw = std::abs(w);
        if (aw > 1.0 - boundary_margin) w *= (1.0 - boundary_margin) / aw;
        return HypPoint(w);
    }

    Geodesic flipped() const {
        Geodesic g = *this;
        g.sign_ = -g.sign_;
        return g;
    }

private:
    Kind kind_ = Kind::diameter;
    double alpha_ = 0.0;          // diameter direction
    double theta1_ = 0.0, theta2_ = 0.0; // arc ideal endpoints
    int sign_ = 1;
    std::complex<double> center_{0.0, 0.0};
    double radius_ = 0.0;
};

} // namespace hypcap
