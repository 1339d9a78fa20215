#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quaternion.hpp"

namespace g2lts {

// Right H-module conventions throughout: vectors carry scalars on the right,
// inner products are conjugate-linear in the first slot,
//   <v c, w c'> = conj(c) <v, w> c'.

using QVector = std::vector<Quaternion>;

inline QVector qvec_zero(std::size_t n) { return QVector(n); }

inline QVector unit_qvec(std::size_t n, std::size_t k) {
    QVector v(n);
    v.at(k) = Quaternion::one();
    return v;
}

inline QVector operator+(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("qvector size mismatch");
    QVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

inline QVector operator-(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("qvector size mismatch");
    QVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

/// Right scalar action (v c)_k = v_k c.
inline QVector rmul(const QVector& v, const Quaternion& c) {
    QVector r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k] * c;
    return r;
}

inline QVector rmul(const QVector& v, double s) {
    QVector r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k] * s;
    return r;
}

/// Quaternionic inner product <v, w> = sum conj(v_k) w_k.
inline Quaternion qdot(const QVector& v, const QVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("qdot: length mismatch");
    Quaternion s;
    for (std::size_t k = 0; k < v.size(); ++k) s += conj(v[k]) * w[k];
    return s;
}

inline double qnorm_sq(const QVector& v) {
    double s = 0;
    for (const auto& q : v) s += q.norm_sq();
    return s;
}

inline double qnorm(const QVector& v) { return std::sqrt(qnorm_sq(v)); }

/// H-orthonormal spanning set of the right-H-span via modified Gram-Schmidt.
/// Columns whose post-projection norm falls at or below tol (relative to the
/// largest input norm) are dropped.
inline std::vector<QVector> gram_schmidt_H(const std::vector<QVector>& cols, double tol = 1e-8) {
    if (tol <= 0) throw std::invalid_argument("gram_schmidt_H: tol must be positive");
    double scale = 0;
    for (const auto& c : cols) scale = std::max(scale, qnorm(c));
    if (scale == 0) return {};
    std::vector<QVector> basis;
    for (const auto& c : cols) {
        QVector v = c;
        for (const auto& b : basis) v = v - rmul(b, qdot(b, v));
        const double nv = qnorm(v);
        if (nv > tol * scale) basis.push_back(rmul(v, 1.0 / nv));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Dense quaternionic matrices (H-right-linear maps between based modules).
// ---------------------------------------------------------------------------

struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Quaternion> a;  // row-major

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Quaternion& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Quaternion& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Quaternion::one();
        return m;
    }

    QVector col(std::size_t c) const {
        QVector v(rows);
        for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }
    void set_col(std::size_t c, const QVector& v) {
        for (std::size_t r = 0; r < rows; ++r) at(r, c) = v[r];
    }

    QMatrix operator+(const QMatrix& m) const {
        QMatrix r(rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + m.a[k];
        return r;
    }
    QMatrix operator-(const QMatrix& m) const {
        QMatrix r(rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - m.a[k];
        return r;
    }
    QMatrix operator-() const {
        QMatrix r(rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = -a[k];
        return r;
    }
    QMatrix operator*(double s) const {
        QMatrix r(rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
        return r;
    }

    double frob_norm() const {
        double s = 0;
        for (const auto& q : a) s += q.norm_sq();
        return std::sqrt(s);
    }
};

inline QMatrix matmul(const QMatrix& A, const QMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul: shape mismatch");
    QMatrix C(A.rows, B.cols);
    for (std::size_t r = 0; r < A.rows; ++r)
        for (std::size_t m = 0; m < A.cols; ++m) {
            const Quaternion& arm = A.at(r, m);
            if (arm.norm_sq() == 0) continue;
            for (std::size_t c = 0; c < B.cols; ++c) C.at(r, c) += arm * B.at(m, c);
        }
    return C;
}

/// Adjoint map: (M*)_{rc} = conj(M_{cr}); satisfies <Mv, w> = <v, M*w>.
inline QMatrix adjoint(const QMatrix& M) {
    QMatrix r(M.cols, M.rows);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) r.at(j, i) = conj(M.at(i, j));
    return r;
}

inline QVector apply(const QMatrix& M, const QVector& v) {
    if (M.cols != v.size()) throw std::invalid_argument("apply: shape mismatch");
    QVector r(M.rows);
    for (std::size_t i = 0; i < M.rows; ++i) {
        Quaternion s;
        for (std::size_t j = 0; j < M.cols; ++j) s += M.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

/// Entry-wise scalar actions relative to the standard real basis.
inline QMatrix rmul(const QMatrix& M, const Quaternion& c) {
    QMatrix r(M.rows, M.cols);
    for (std::size_t k = 0; k < M.a.size(); ++k) r.a[k] = M.a[k] * c;
    return r;
}
inline QMatrix lmul(const Quaternion& c, const QMatrix& M) {
    QMatrix r(M.rows, M.cols);
    for (std::size_t k = 0; k < M.a.size(); ++k) r.a[k] = c * M.a[k];
    return r;
}

/// Quaternionic column rank via pivoted modified Gram-Schmidt.
inline std::size_t rank_H(const QMatrix& M, double tol = 1e-8) {
    if (tol <= 0) throw std::invalid_argument("rank_H: tol must be positive");
    std::vector<QVector> cols(M.cols);
    for (std::size_t c = 0; c < M.cols; ++c) cols[c] = M.col(c);
    double scale = 0;
    for (const auto& c : cols) scale = std::max(scale, qnorm(c));
    if (scale == 0) return 0;
    std::size_t rank = 0;
    std::vector<bool> used(cols.size(), false);
    std::vector<QVector> basis;
    for (std::size_t step = 0; step < cols.size(); ++step) {
        std::size_t pivot = cols.size();
        double best = tol * scale;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (used[c]) continue;
            const double n = qnorm(cols[c]);
            if (n > best) {
                best = n;
                pivot = c;
            }
        }
        if (pivot == cols.size()) break;
        used[pivot] = true;
        QVector b = rmul(cols[pivot], 1.0 / qnorm(cols[pivot]));
        basis.push_back(b);
        ++rank;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!used[c]) cols[c] = cols[c] - rmul(b, qdot(b, cols[c]));
    }
    return rank;
}

/// Eigenvalues of the quaternionic Hermitian 2x2 [[a, c], [conj(c), b]],
/// descending: ((a+b) +- sqrt((a-b)^2 + 4|c|^2)) / 2.
inline std::pair<double, double> hermitian2_eigs(double a, double b, const Quaternion& c) {
    const double d = std::sqrt((a - b) * (a - b) + 4.0 * c.norm_sq());
    return {(a + b + d) / 2.0, (a + b - d) / 2.0};
}

}  // namespace g2lts
