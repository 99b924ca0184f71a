// This file is part of holocap, a toolkit for the Holevo capacity of
// qubit channels.
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <cmath>
#include <limits>

#include "holocap/bloch.hpp"
#include "holocap/errors.hpp"
#include "holocap/linalg.hpp"

namespace holocap {

inline constexpr double kLn2 = 0.6931471805599453;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigClampTol = 1e-10;  ///< eigenvalues in [-tol, 0] clamp to 0

inline const Mat2 kPauliX = [] {
    Mat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}();
inline const Mat2 kPauliY = [] {
    Mat2 m;
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}();
inline const Mat2 kPauliZ = [] {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}();

/// Binary entropy in bits, with the 0 log 0 = 0 convention.
inline double binary_entropy(double q) {
    double s = 0.0;
    if (q > 0.0 && q < 1.0) s = -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
    return s;
}

/// rho = (I + r . sigma) / 2
inline Mat2 bloch_to_density(const BlochVector& r) {
    require_in_ball(r);
    Mat2 m;
    m(0, 0) = 0.5 * (1.0 + r.z);
    m(1, 1) = 0.5 * (1.0 - r.z);
    m(0, 1) = 0.5 * cplx(r.x, -r.y);
    m(1, 0) = 0.5 * cplx(r.x, r.y);
    return m;
}

inline BlochVector density_to_bloch(const Mat2& m) {
    return {2.0 * std::real(m(1, 0)), 2.0 * std::imag(m(1, 0)),
            std::real(m(0, 0)) - std::real(m(1, 1))};
}

/// Von Neumann entropy in bits of the state with Bloch vector r.
inline double entropy(const BlochVector& r) {
    require_in_ball(r);
    const double m = std::min(r.norm(), 1.0);
    return binary_entropy(0.5 * (1.0 + m));
}

template <int N>
void require_density(const CMat<N>& m) {
    if (hermiticity_defect(m) > kHermTol)
        throw invalid_state_error("matrix is not Hermitian within tolerance");
    if (std::abs(std::real(m.trace()) - 1.0) > kTraceTol || std::abs(std::imag(m.trace())) > kTraceTol)
        throw invalid_state_error("matrix trace differs from 1");
    const auto eig = hermitian_eig(m);
    if (eig.values[0] < -kEigClampTol)
        throw invalid_state_error("matrix has eigenvalue below -1e-10: " +
                                  std::to_string(eig.values[0]));
}

/// Von Neumann entropy in bits from the eigenvalues of a density matrix.
/// Eigen-solver noise in [-1e-10, 0] is clamped to zero.
template <int N>
double entropy_matrix(const CMat<N>& m) {
    require_density(m);
    const auto eig = hermitian_eig(m);
    double s = 0.0;
    for (double v : eig.values) {
        if (v <= 0.0) continue;
        s -= v * std::log2(v);
    }
    return s;
}

/// Relative entropy H(w, s) = Tr w (log w - log s) in bits. When the
/// support of w is not contained in the support of s the value is +inf;
/// landscape scans rely on the sentinel rather than an exception.
template <int N>
double relative_entropy(const CMat<N>& w, const CMat<N>& s) {
    require_density(w);
    require_density(s);
    const auto ew = hermitian_eig(w);
    const auto es = hermitian_eig(s);

    double tr_w_log_w = 0.0;
    for (double v : ew.values)
        if (v > 0.0) tr_w_log_w += v * std::log2(v);

    double tr_w_log_s = 0.0;
    for (int k = 0; k < N; ++k) {
        // overlap <v_k| w |v_k>
        cplx acc = 0.0;
        for (int i = 0; i < N; ++i) {
            cplx row = 0.0;
            for (int j = 0; j < N; ++j) row += w(i, j) * es.vectors(j, k);
            acc += std::conj(es.vectors(i, k)) * row;
        }
        const double overlap = std::max(0.0, std::real(acc));
        const double mu = es.values[k];
        if (mu <= 1e-15) {
            if (overlap > 1e-10) return std::numeric_limits<double>::infinity();
            continue;
        }
        tr_w_log_s += overlap * std::log2(mu);
    }
    return std::max(0.0, tr_w_log_w - tr_w_log_s);
}

/// Pauli expansion of the base-2 matrix logarithm of a full-rank qubit
/// state: log2 rho = tau0 I + tau . sigma.
struct PauliLog {
    double tau0;
    BlochVector tau;
};

inline PauliLog pauli_log(const BlochVector& w) {
    const double m = w.norm();
    if (m >= 1.0 - 1e-13)
        throw invalid_state_error("pauli_log requires a full-rank state (|r| < 1)");
    const double lp = 0.5 * (1.0 + m);
    const double lm = 0.5 * (1.0 - m);
    const double tau0 = 0.5 * std::log2(lp * lm);
    // (1/m) * 0.5*log2((1+m)/(1-m)) -> 1/ln2 as m -> 0
    double scale;
    if (m > 1e-7) {
        scale = 0.5 * std::log2(lp / lm) / m;
    } else {
        const double m2 = m * m;
        scale = (1.0 + m2 / 3.0 + m2 * m2 / 5.0) / kLn2;
    }
    return {tau0, scale * w};
}

/// H(rho(w) || rho(s)) in bits via the Pauli closed form; requires the
/// reference state s to be full rank.
inline double relative_entropy_bloch(const BlochVector& w, const BlochVector& s) {
    const PauliLog ls = pauli_log(s);
    const double m = std::min(w.norm(), 1.0);
    return std::max(0.0, -binary_entropy(0.5 * (1.0 + m)) - ls.tau0 - dot(ls.tau, w));
}

/// Gradient of the output entropy S(w) with respect to the Bloch vector w.
/// Smooth continuation through w = 0; magnitude diverges as |w| -> 1, so the
/// radius is clamped just inside the sphere.
inline BlochVector entropy_gradient(const BlochVector& w) {
    double m = w.norm();
    if (m >= 1.0 - 1e-15) m = 1.0 - 1e-15;
    double scale;  // c(m)/m with c(m) = 0.5*log2((1-m)/(1+m))
    if (m > 1e-7) {
        scale = 0.5 * std::log2((1.0 - m) / (1.0 + m)) / m;
    } else {
        const double m2 = m * m;
        scale = -(1.0 + m2 / 3.0 + m2 * m2 / 5.0) / kLn2;
    }
    return scale * w;
}

/// Partial trace over the first factor of a two-qubit state (keeps factor 2).
inline Mat2 partial_trace_1(const Mat4& m) {
    Mat2 out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) out(a, b) = m(a, b) + m(2 + a, 2 + b);
    return out;
}

/// Partial trace over the second factor (keeps factor 1).
inline Mat2 partial_trace_2(const Mat4& m) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return out;
}

}  // namespace holocap
