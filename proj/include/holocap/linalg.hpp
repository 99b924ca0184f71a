// This file is part of holocap, a toolkit for the Holevo capacity of
// qubit channels.
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace holocap {

using cplx = std::complex<double>;

/// Dense complex N x N matrix in row-major order. Small fixed sizes only
/// (N = 2 for qubit states, N = 4 for two-qubit states and Choi matrices).
template <int N>
struct CMat {
    std::array<cplx, static_cast<std::size_t>(N) * N> a{};

    static constexpr int dim = N;

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
    const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

    static CMat identity() {
        CMat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat adjoint() const {
        CMat m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius() const {
        double s = 0.0;
        for (const cplx& v : a) s += std::norm(v);
        return std::sqrt(s);
    }

    CMat& operator+=(const CMat& o) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (cplx& v : a) v *= s;
        return *this;
    }

    friend CMat operator+(CMat l, const CMat& r) { return l += r; }
    friend CMat operator-(CMat l, const CMat& r) { return l -= r; }
    friend CMat operator*(cplx s, CMat m) { return m *= s; }

    friend CMat operator*(const CMat& l, const CMat& r) {
        CMat m;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const cplx lik = l(i, k);
                if (lik == cplx{}) continue;
                for (int j = 0; j < N; ++j) m(i, j) += lik * r(k, j);
            }
        return m;
    }
};

using Mat2 = CMat<2>;
using Mat4 = CMat<4>;

inline double max_abs_diff(const Mat2& x, const Mat2& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}
inline double max_abs_diff(const Mat4& x, const Mat4& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

/// Kronecker product with the first factor owning the slow index:
/// (A (x) B)[(2i+a),(2j+b)] = A(i,j) B(a,b).
inline Mat4 kron(const Mat2& A, const Mat2& B) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) m(2 * i + a, 2 * j + b) = A(i, j) * B(a, b);
    return m;
}

template <int N>
struct EigResult {
    std::array<double, N> values{};  // ascending
    CMat<N> vectors;                 // column k is the eigenvector of values[k]
};

inline double hermiticity_defect(const Mat2& m) { return max_abs_diff(m, m.adjoint()); }
inline double hermiticity_defect(const Mat4& m) { return max_abs_diff(m, m.adjoint()); }

/// Closed-form spectral decomposition of a Hermitian 2 x 2 matrix.
inline EigResult<2> hermitian_eig(const Mat2& m) {
    EigResult<2> r;
    const double a = std::real(m(0, 0));
    const double c = std::real(m(1, 1));
    const cplx b = m(0, 1);
    const double h = (a - c) / 2.0;
    const double disc = std::hypot(h, std::abs(b));
    const double mean = (a + c) / 2.0;
    r.values = {mean - disc, mean + disc};
    if (std::abs(b) < 1e-300) {
        if (a <= c) {
            r.vectors(0, 0) = 1.0;
            r.vectors(1, 1) = 1.0;
        } else {
            r.vectors(1, 0) = 1.0;
            r.vectors(0, 1) = 1.0;
        }
        return r;
    }
    // (m - lambda I) v = 0 with v = (b, lambda - a); pick the better-conditioned row.
    for (int k = 0; k < 2; ++k) {
        const double lam = r.values[k];
        cplx v0, v1;
        if (std::abs(lam - a) > std::abs(lam - c)) {
            v0 = b;
            v1 = lam - a;
        } else {
            v0 = lam - c;
            v1 = std::conj(b);
        }
        const double n = std::sqrt(std::norm(v0) + std::norm(v1));
        r.vectors(0, k) = v0 / n;
        r.vectors(1, k) = v1 / n;
    }
    return r;
}

/// Cyclic Jacobi diagonalization for Hermitian matrices. Each rotation
/// annihilates one off-diagonal pair; sweeps repeat until the off-diagonal
/// mass is at rounding level, which leaves per-pair residuals
/// ||A v - lambda v|| near 1e-15 * ||A||.
template <int N>
EigResult<N> hermitian_eig(const CMat<N>& m) {
    CMat<N> A = m;
    CMat<N> V = CMat<N>::identity();
    const double scale = std::max(A.frobenius(), 1e-300);

    for (int sweep = 0; sweep < 80; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += std::norm(A(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) break;

        for (int p = 0; p < N; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const cplx beta = A(p, q);
                const double r = std::abs(beta);
                if (r <= 1e-18 * scale) continue;
                const cplx phase = beta / r;
                const double alpha = std::real(A(p, p));
                const double gamma = std::real(A(q, q));
                const double tau = (alpha - gamma) / (2.0 * r);
                double t;
                if (tau >= 0)
                    t = 1.0 / (tau + std::sqrt(tau * tau + 1.0));
                else
                    t = -1.0 / (-tau + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- U^† A U with U acting on columns (p,q):
                // U[p][p]=c, U[q][p]=s*conj(phase), U[p][q]=-s*phase, U[q][q]=c
                for (int k = 0; k < N; ++k) {
                    const cplx akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp + s * std::conj(phase) * akq;
                    A(k, q) = -s * phase * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const cplx apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk + s * phase * aqk;
                    A(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int k = 0; k < N; ++k) {
                    const cplx vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    V(k, q) = -s * phase * vkp + c * vkq;
                }
            }
        }
    }

    EigResult<N> res;
    std::array<int, N> order;
    for (int i = 0; i < N; ++i) order[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            if (std::real(A(order[j], order[j])) < std::real(A(order[i], order[i])))
                std::swap(order[i], order[j]);
    for (int k = 0; k < N; ++k) {
        res.values[k] = std::real(A(order[k], order[k]));
        for (int i = 0; i < N; ++i) res.vectors(i, k) = V(i, order[k]);
    }
    return res;
}

/// Max over eigenpairs of ||A v - lambda v||; diagnostic for the solver above.
template <int N>
double eig_residual(const CMat<N>& m, const EigResult<N>& e) {
    double worst = 0.0;
    for (int k = 0; k < N; ++k) {
        double s = 0.0;
        for (int i = 0; i < N; ++i) {
            cplx acc = 0.0;
            for (int j = 0; j < N; ++j) acc += m(i, j) * e.vectors(j, k);
            acc -= e.values[k] * e.vectors(i, k);
            s += std::norm(acc);
        }
        worst = std::max(worst, std::sqrt(s));
    }
    return worst;
}

/// In-place Gaussian elimination with partial pivoting for small dense real
/// systems. Throws std::runtime_error naming the failing pivot column when
/// the matrix is rank deficient.
inline std::vector<double> solve_dense(std::vector<double> A, std::vector<double> b) {
    const std::size_t n = b.size();
    if (A.size() != n * n) throw std::invalid_argument("solve_dense: shape mismatch");
    double scale = 1e-300;
    for (double v : A) scale = std::max(scale, std::abs(v));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
        if (std::abs(A[piv * n + col]) <= 1e-12 * scale)
            throw std::runtime_error("solve_dense: rank deficiency at column " + std::to_string(col));
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A[piv * n + j], A[col * n + j]);
            std::swap(b[piv], b[col]);
        }
        const double d = A[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A[r * n + col] / d;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A[i * n + j] * x[j];
        x[i] = acc / A[i * n + i];
    }
    return x;
}

}  // namespace holocap
