#pragma once

#include <array>
#include <random>
#include <string>

#include "mhdlab/fields.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// ---------------------------------------------------------------------------
// Pure-swirl axisymmetric fields B = B^theta(r, z) e_theta with B^theta = r psi,
// i.e. B(x) = psi(|x|^2, z) * (-y, x, 0). Smooth on the axis by construction.
//
// Profiles (rho2 = |x|^2):
//   gauss: psi = A exp(-rho2)
//   poly:  psi = A (1 - rho2/4)
//   bump:  psi = A (1 - (rho2/3.24)^2)^3 for rho2 < 3.24, else 0   (support |x| < 1.8)

enum class SwirlProfile { Gauss, Poly, Bump };

SwirlProfile swirl_profile_from_name(const std::string& name);

class SwirlField final : public AnalyticVectorField<SwirlField> {
public:
    SwirlField(SwirlProfile profile, double amplitude)
        : profile_(profile), amp_(amplitude) {}

    template <class T>
    std::array<T, 3> formula(const T& x, const T& y, const T& z) const {
        using std::exp;
        const T rho2 = x * x + y * y + z * z;
        T psi(0.0);
        switch (profile_) {
            case SwirlProfile::Gauss:
                psi = amp_ * exp(-1.0 * rho2);
                break;
            case SwirlProfile::Poly:
                psi = amp_ * (1.0 - rho2 * 0.25);
                break;
            case SwirlProfile::Bump: {
                constexpr double tau = 3.24;  // support |x| < 1.8
                if (value_of(rho2) >= tau) {
                    psi = T(0.0);
                } else {
                    const T s = rho2 * (1.0 / tau);
                    const T q = 1.0 - s * s;
                    psi = amp_ * (q * q * q);
                }
                break;
            }
        }
        return {psi * (-1.0 * y), psi * x, T(0.0)};
    }

private:
    SwirlProfile profile_;
    double amp_;
};

// psi = (c0 + c1 z + c2 z^2 + c3 rho2) exp(-rho2); coefficients drawn from
// the caller's generator. Used for randomized vanishing-condition checks.
class ModulatedSwirlField final : public AnalyticVectorField<ModulatedSwirlField> {
public:
    explicit ModulatedSwirlField(const std::array<double, 4>& c) : c_(c) {}

    template <class T>
    std::array<T, 3> formula(const T& x, const T& y, const T& z) const {
        using std::exp;
        const T rho2 = x * x + y * y + z * z;
        const T psi = (c_[0] + c_[1] * z + c_[2] * (z * z) + c_[3] * rho2) * exp(-1.0 * rho2);
        return {psi * (-1.0 * y), psi * x, T(0.0)};
    }

private:
    std::array<double, 4> c_;
};

ModulatedSwirlField random_swirl_field(std::mt19937_64& rng, double amplitude);

// ---------------------------------------------------------------------------
// Poloidal (axisymmetric swirl-free, divergence-free) velocity:
// u = curl( chi(|x|^2, z) (-y, x, 0) ) with chi = (d0 + d1 z) exp(-|x|^2).
// value/gradient are analytic; the Laplacian falls back to differences.

class PoloidalField final : public VectorField {
public:
    explicit PoloidalField(double d0, double d1) : d0_(d0), d1_(d1) {}

    Vec3 value(const Vec3& x) const override;
    Mat3 gradient(const Vec3& x) const override;

private:
    std::array<Dual2, 2> potential_jet(const Vec3& x) const;  // psi_x, psi_y
    double d0_, d1_;
};

// ---------------------------------------------------------------------------
// Not axisymmetric: B = (z, 0, 0) / |x|^2. The T2 flux against an
// axisymmetric background does not vanish for this field.
class AxisShearField final : public AnalyticVectorField<AxisShearField> {
public:
    template <class T>
    std::array<T, 3> formula(const T& x, const T& y, const T& z) const {
        const T inv = 1.0 / (x * x + y * y + z * z);
        return {z * inv, T(0.0), T(0.0)};
    }
};

}  // namespace mhdlab
