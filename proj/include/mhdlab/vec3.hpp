#pragma once

#include <cmath>
#include <array>

namespace mhdlab {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double& operator[](int i) { return (i == 0) ? x : (i == 1) ? y : z; }
    double operator[](int i) const { return (i == 0) ? x : (i == 1) ? y : z; }

    Vec3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }
    Vec3 operator-(const Vec3& v) const { return {x - v.x, y - v.y, z - v.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    Vec3& operator+=(const Vec3& v) { x += v.x; y += v.y; z += v.z; return *this; }
    Vec3& operator-=(const Vec3& v) { x -= v.x; y -= v.y; z -= v.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    double dot(const Vec3& v) const { return x * v.x + y * v.y + z * v.z; }
    Vec3 cross(const Vec3& v) const {
        return {y * v.z - z * v.y, z * v.x - x * v.z, x * v.y - y * v.x};
    }
    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

// Row-major 3x3 matrix; entry (i,j) accessed as m(i,j).
struct Mat3 {
    std::array<double, 9> a{};

    Mat3() = default;

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static Mat3 zero() { return Mat3{}; }

    double& operator()(int i, int j) { return a[3 * i + j]; }
    double operator()(int i, int j) const { return a[3 * i + j]; }

    Mat3 operator+(const Mat3& m) const {
        Mat3 r;
        for (int k = 0; k < 9; ++k) r.a[k] = a[k] + m.a[k];
        return r;
    }
    Mat3 operator-(const Mat3& m) const {
        Mat3 r;
        for (int k = 0; k < 9; ++k) r.a[k] = a[k] - m.a[k];
        return r;
    }
    Mat3 operator*(double s) const {
        Mat3 r;
        for (int k = 0; k < 9; ++k) r.a[k] = a[k] * s;
        return r;
    }
    Mat3& operator+=(const Mat3& m) {
        for (int k = 0; k < 9; ++k) a[k] += m.a[k];
        return *this;
    }

    Mat3 operator*(const Mat3& m) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * m(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    // max |entry|
    double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::max(m, std::abs(v));
        return m;
    }

    bool finite() const {
        for (double v : a)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline Mat3 operator*(double s, const Mat3& m) { return m * s; }

inline Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = a[i] * b[j];
    return m;
}

// Rodrigues rotation about unit axis by angle.
inline Mat3 rotation_about_axis(const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    const Vec3 n = axis;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = c * (i == j ? 1.0 : 0.0) + (1.0 - c) * n[i] * n[j];
    r(0, 1) += -s * n.z; r(0, 2) += s * n.y;
    r(1, 0) += s * n.z;  r(1, 2) += -s * n.x;
    r(2, 0) += -s * n.y; r(2, 1) += s * n.x;
    return r;
}

}  // namespace mhdlab
