#pragma once

#include <cmath>

#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Forward-mode scalar carrying value, gradient and Hessian with respect to
// the three Cartesian coordinates. Evaluating a closed-form field with Dual2
// inputs yields derivatives exact to roundoff, so residual checks are not
// limited by finite-difference truncation.
struct Dual2 {
    double v = 0.0;
    Vec3 g{};
    Mat3 h{};  // symmetric

    Dual2() = default;
    Dual2(double value) : v(value) {}
    Dual2(double value, const Vec3& grad, const Mat3& hess) : v(value), g(grad), h(hess) {}

    // Independent variable number `axis` seeded at x.
    static Dual2 variable(double x, int axis) {
        Dual2 d(x);
        d.g[axis] = 1.0;
        return d;
    }

    Dual2 operator-() const { return {-v, -g, h * -1.0}; }

    Dual2 operator+(const Dual2& o) const { return {v + o.v, g + o.g, h + o.h}; }
    Dual2 operator-(const Dual2& o) const { return {v - o.v, g - o.g, h - o.h}; }
    Dual2 operator*(const Dual2& o) const {
        Mat3 hh = h * o.v + o.h * v + outer(g, o.g) + outer(o.g, g);
        return {v * o.v, g * o.v + o.g * v, hh};
    }
    Dual2 operator/(const Dual2& o) const { return *this * o.reciprocal(); }

    Dual2 operator+(double c) const { return {v + c, g, h}; }
    Dual2 operator-(double c) const { return {v - c, g, h}; }
    Dual2 operator*(double c) const { return {v * c, g * c, h * c}; }
    Dual2 operator/(double c) const { return {v / c, g / c, h * (1.0 / c)}; }

    Dual2 reciprocal() const {
        const double iv = 1.0 / v;
        const double iv2 = iv * iv;
        Mat3 hh = (outer(g, g) * (2.0 * iv2 * iv)) - (h * iv2);
        return {iv, g * (-iv2), hh};
    }

    // Chain rule for a unary map with first/second derivative f1, f2 at v.
    Dual2 chain(double f0, double f1, double f2) const {
        return {f0, g * f1, h * f1 + outer(g, g) * f2};
    }
};

inline Dual2 operator+(double c, const Dual2& d) { return d + c; }
inline Dual2 operator-(double c, const Dual2& d) { return (-d) + c; }
inline Dual2 operator*(double c, const Dual2& d) { return d * c; }
inline Dual2 operator/(double c, const Dual2& d) { return d.reciprocal() * c; }

inline Dual2 sqrt(const Dual2& d) {
    const double r = std::sqrt(d.v);
    return d.chain(r, 0.5 / r, -0.25 / (r * d.v));
}
inline Dual2 exp(const Dual2& d) {
    const double e = std::exp(d.v);
    return d.chain(e, e, e);
}
inline Dual2 log(const Dual2& d) {
    return d.chain(std::log(d.v), 1.0 / d.v, -1.0 / (d.v * d.v));
}
inline Dual2 sin(const Dual2& d) {
    const double s = std::sin(d.v), c = std::cos(d.v);
    return d.chain(s, c, -s);
}
inline Dual2 cos(const Dual2& d) {
    const double s = std::sin(d.v), c = std::cos(d.v);
    return d.chain(c, -s, -c);
}
inline Dual2 pow(const Dual2& d, double p) {
    const double f = std::pow(d.v, p);
    return d.chain(f, p * f / d.v, p * (p - 1.0) * f / (d.v * d.v));
}

// Plain-double overloads so field formulas can be written once and
// instantiated for both evaluation and differentiation.
inline double reciprocal(double x) { return 1.0 / x; }
inline double value_of(double x) { return x; }
inline double value_of(const Dual2& d) { return d.v; }

}  // namespace mhdlab
