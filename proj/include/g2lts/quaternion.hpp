#pragma once

#include <cmath>
#include <stdexcept>

namespace g2lts {

/// One scalar of H as four real components w + x i + y j + z k.
/// Hamilton conventions: ij = k, jk = i, ki = j.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    Quaternion() = default;
    Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    explicit Quaternion(double real) : w(real) {}

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Quaternion operator+(const Quaternion& q) const { return {w + q.w, x + q.x, y + q.y, z + q.z}; }
    Quaternion operator-(const Quaternion& q) const { return {w - q.w, x - q.x, y - q.y, z - q.z}; }
    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    Quaternion& operator+=(const Quaternion& q) {
        w += q.w; x += q.x; y += q.y; z += q.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& q) {
        w -= q.w; x -= q.x; y -= q.y; z -= q.z;
        return *this;
    }

    Quaternion operator*(const Quaternion& q) const {
        return {w * q.w - x * q.x - y * q.y - z * q.z,
                w * q.x + x * q.w + y * q.z - z * q.y,
                w * q.y - x * q.z + y * q.w + z * q.x,
                w * q.z + x * q.y - y * q.x + z * q.w};
    }
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    friend Quaternion operator*(double s, const Quaternion& q) { return q * s; }
    Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double re(const Quaternion& q) { return q.w; }
inline Quaternion im(const Quaternion& q) { return {0, q.x, q.y, q.z}; }
inline double abs(const Quaternion& q) { return q.norm(); }

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) throw std::domain_error("quaternion inverse of zero");
    return {q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2};
}

inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

inline bool approx_eq(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
    return dist(a, b) <= tol;
}

}  // namespace g2lts
