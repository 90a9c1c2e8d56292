#include "mhdlab/fields.hpp"

#include <cmath>

namespace mhdlab {

Mat3 VectorField::gradient(const Vec3& x) const {
    return fd_gradient([this](const Vec3& p) { return value(p); }, x);
}

Vec3 VectorField::laplacian(const Vec3& x) const {
    const double h = kFdHessStep * std::max(1.0, x.norm());
    const Vec3 c = value(x);
    Vec3 lap;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Vec3 fp = value(xp), fm = value(xm);
        for (int i = 0; i < 3; ++i) lap[i] += (fp[i] - 2.0 * c[i] + fm[i]) / (h * h);
    }
    return lap;
}

Vec3 ScalarField::gradient(const Vec3& x) const {
    const double h = 1e-5 * std::max(1.0, x.norm());
    Vec3 g;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        g[j] = (value(xp) - value(xm)) / (2.0 * h);
    }
    return g;
}

namespace {

// Quintic smoothstep on [0,1]: s(0)=0, s(1)=1, s'=s''=0 at both ends.
inline double smooth5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
inline double smooth5_d1(double t) { return 30.0 * t * t * (1.0 - t) * (1.0 - t); }
inline double smooth5_d2(double t) { return 60.0 * t * (1.0 - t) * (1.0 - 2.0 * t); }

}  // namespace

double RadialCutoff::value(double rho) const {
    if (rho <= r_on) return 1.0;
    if (rho >= r_off) return 0.0;
    const double t = (rho - r_on) / (r_off - r_on);
    return 1.0 - smooth5(t);
}

double RadialCutoff::d1(double rho) const {
    if (rho <= r_on || rho >= r_off) return 0.0;
    const double w = r_off - r_on;
    return -smooth5_d1((rho - r_on) / w) / w;
}

double RadialCutoff::d2(double rho) const {
    if (rho <= r_on || rho >= r_off) return 0.0;
    const double w = r_off - r_on;
    return -smooth5_d2((rho - r_on) / w) / (w * w);
}

}  // namespace mhdlab
