// This file is part of holocap, a toolkit for the Holevo capacity of
// qubit channels.
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <cmath>
#include <ostream>

#include "holocap/errors.hpp"

namespace holocap {

inline constexpr double kBallTol = 1e-12;  ///< construction tolerance on |r| <= 1

/// A point of the closed unit ball in R^3 standing for a qubit density
/// matrix; the sphere |r| = 1 carries the pure states.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    bool in_ball(double eps = kBallTol) const { return norm2() <= 1.0 + eps; }
    bool is_pure(double eps = kBallTol) const { return std::abs(norm2() - 1.0) <= eps; }

    BlochVector reflected_y() const { return {x, -y, z}; }

    BlochVector& operator+=(const BlochVector& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    BlochVector& operator-=(const BlochVector& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    BlochVector& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend BlochVector operator+(BlochVector l, const BlochVector& r) { return l += r; }
    friend BlochVector operator-(BlochVector l, const BlochVector& r) { return l -= r; }
    friend BlochVector operator*(double s, BlochVector v) { return v *= s; }

    friend std::ostream& operator<<(std::ostream& os, const BlochVector& v) {
        return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
    }
};

inline double dot(const BlochVector& a, const BlochVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline BlochVector cross(const BlochVector& a, const BlochVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline BlochVector normalized(const BlochVector& v) {
    const double n = v.norm();
    if (n < 1e-300) return {0.0, 0.0, 1.0};
    return {v.x / n, v.y / n, v.z / n};
}

inline void require_in_ball(const BlochVector& r, double eps = kBallTol) {
    if (!r.in_ball(eps))
        throw invalid_state_error("Bloch vector outside the unit ball: |r|^2 = " +
                                  std::to_string(r.norm2()));
}

/// Angular (geodesic) distance between two directions.
inline double angular_distance(const BlochVector& a, const BlochVector& b) {
    const double c = dot(normalized(a), normalized(b));
    return std::acos(std::min(1.0, std::max(-1.0, c)));
}

/// Pure state from the half-polar chart used for reporting ensembles:
/// r(phi, theta) = (sin 2phi cos theta, sin 2phi sin theta, cos 2phi),
/// phi in [0, pi/2], theta in (-pi, pi].
inline BlochVector bloch_from_angles(double phi, double theta) {
    const double s = std::sin(2.0 * phi);
    return {s * std::cos(theta), s * std::sin(theta), std::cos(2.0 * phi)};
}

struct SphereAngles {
    double phi;
    double theta;
};

inline SphereAngles angles_of(const BlochVector& r) {
    const double z = std::min(1.0, std::max(-1.0, normalized(r).z));
    const double phi = 0.5 * std::acos(z);
    const double rho = std::hypot(r.x, r.y);
    const double theta = rho > 1e-15 ? std::atan2(r.y, r.x) : 0.0;
    return {phi, theta};
}

}  // namespace holocap
