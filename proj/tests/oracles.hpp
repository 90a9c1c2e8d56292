#pragma once

// Independent oracles used by the test suites: plain central-difference
// operators on Cartesian closed forms, exact sphere moments, and random
// rotations. Deliberately kept free of the library's derivative machinery so
// they can cross-check it.

#include <cmath>
#include <functional>
#include <random>

#include "mhdlab/vec3.hpp"

namespace oracles {

using mhdlab::Mat3;
using mhdlab::Vec3;

using VecFn = std::function<Vec3(const Vec3&)>;
using ScalFn = std::function<double(const Vec3&)>;

inline double fd_divergence(const VecFn& f, const Vec3& x, double h) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        s += (f(xp)[j] - f(xm)[j]) / (2.0 * h);
    }
    return s;
}

inline Vec3 fd_curl(const VecFn& f, const Vec3& x, double h) {
    Mat3 g;  // g(i,j) = d_j f^i
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Vec3 fp = f(xp), fm = f(xm);
        for (int i = 0; i < 3; ++i) g(i, j) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return {g(2, 1) - g(1, 2), g(0, 2) - g(2, 0), g(1, 0) - g(0, 1)};
}

inline Vec3 fd_laplacian(const VecFn& f, const Vec3& x, double h) {
    const Vec3 c = f(x);
    Vec3 lap;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Vec3 fp = f(xp), fm = f(xm);
        for (int i = 0; i < 3; ++i) lap[i] += (fp[i] - 2.0 * c[i] + fm[i]) / (h * h);
    }
    return lap;
}

inline Mat3 fd_jacobian(const VecFn& f, const Vec3& x, double h) {
    Mat3 g;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Vec3 fp = f(xp), fm = f(xm);
        for (int i = 0; i < 3; ++i) g(i, j) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return g;
}

inline Vec3 fd_scalar_gradient(const ScalFn& f, const Vec3& x, double h) {
    Vec3 g;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        g[j] = (f(xp) - f(xm)) / (2.0 * h);
    }
    return g;
}

// Exact moment of n_x^a n_y^b n_z^c over the unit sphere:
// 4 pi (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!! when all even, 0 otherwise.
inline double sphere_monomial_moment(int a, int b, int c) {
    if (a % 2 || b % 2 || c % 2) return 0.0;
    auto dfact = [](int n) {
        double r = 1.0;
        for (int k = n; k > 1; k -= 2) r *= k;
        return r;
    };
    return 4.0 * M_PI * dfact(a - 1) * dfact(b - 1) * dfact(c - 1) / dfact(a + b + c + 1);
}

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec3 v{n(rng), n(rng), n(rng)};
    while (v.norm() < 1e-6) v = {n(rng), n(rng), n(rng)};
    return v / v.norm();
}

inline Mat3 random_rotation(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    return mhdlab::rotation_about_axis(random_unit(rng), ang(rng));
}

// Random point with norm in [lo, hi].
inline Vec3 random_point(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> rad(lo, hi);
    return random_unit(rng) * rad(rng);
}

}  // namespace oracles
