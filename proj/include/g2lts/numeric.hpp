#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "qlinalg.hpp"

namespace g2lts {

// Bridge between quaternionic objects and real dense linear algebra.
// Real representation: a quaternion acting by left multiplication on
// coordinates (w, x, y, z) becomes the 4x4 block below; the representation
// is an algebra homomorphism, so exp and products commute with it.

inline Eigen::Matrix4d left_mult_block(const Quaternion& q) {
    Eigen::Matrix4d m;
    m << q.w, -q.x, -q.y, -q.z,
         q.x,  q.w, -q.z,  q.y,
         q.y,  q.z,  q.w, -q.x,
         q.z, -q.y,  q.x,  q.w;
    return m;
}

inline Eigen::MatrixXd real_rep(const QMatrix& M) {
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(4 * M.rows, 4 * M.cols);
    for (std::size_t r = 0; r < M.rows; ++r)
        for (std::size_t c = 0; c < M.cols; ++c)
            R.block<4, 4>(4 * r, 4 * c) = left_mult_block(M.at(r, c));
    return R;
}

inline Eigen::VectorXd real_coords(const QVector& v) {
    Eigen::VectorXd r(4 * v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        r[4 * k + 0] = v[k].w;
        r[4 * k + 1] = v[k].x;
        r[4 * k + 2] = v[k].y;
        r[4 * k + 3] = v[k].z;
    }
    return r;
}

inline QVector from_real_coords(const Eigen::VectorXd& r) {
    QVector v(r.size() / 4);
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = Quaternion(r[4 * k], r[4 * k + 1], r[4 * k + 2], r[4 * k + 3]);
    return v;
}

/// Rank of a real matrix with a relative singular-value threshold.
inline int real_rank(const Eigen::MatrixXd& M, double tol = 1e-8) {
    if (M.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0) return 0;
    int r = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv[k] > tol * sv[0]) ++r;
    return r;
}

/// Orthonormal basis of the nullspace of M (columns of the result).
inline Eigen::MatrixXd real_nullspace(const Eigen::MatrixXd& M, double tol = 1e-8) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double s0 = sv.size() ? sv[0] : 0.0;
    int r = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (s0 > 0 && sv[k] > tol * s0) ++r;
    return svd.matrixV().rightCols(M.cols() - r);
}

/// Eigenvalues clustered within merge_tol, returned with multiplicities,
/// ascending.
inline std::vector<std::pair<double, int>> clustered_spectrum(const Eigen::MatrixXd& S,
                                                              double merge_tol = 1e-6) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    std::vector<std::pair<double, int>> out;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        const double ev = es.eigenvalues()[k];
        if (!out.empty() && std::abs(ev - out.back().first) <= merge_tol)
            ++out.back().second;
        else
            out.emplace_back(ev, 1);
    }
    return out;
}

// Seeded Gaussian draws; RNG state is always passed explicitly.
struct Rng {
    std::mt19937_64 gen;
    std::normal_distribution<double> gauss{0.0, 1.0};

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double normal() { return gauss(gen); }
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen); }
    Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
    Quaternion unit_quaternion() {
        Quaternion q = quaternion();
        while (q.norm() < 1e-6) q = quaternion();
        return q * (1.0 / q.norm());
    }
    Quaternion imaginary() { return {0, normal(), normal(), normal()}; }
    Quaternion unit_imaginary() {
        Quaternion q = imaginary();
        while (q.norm() < 1e-6) q = imaginary();
        return q * (1.0 / q.norm());
    }
    QMatrix qmatrix(std::size_t r, std::size_t c) {
        QMatrix m(r, c);
        for (auto& q : m.a) q = quaternion();
        return m;
    }
};

}  // namespace g2lts
