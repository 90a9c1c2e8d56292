#pragma once

#include <array>
#include <limits>
#include <utility>

#include "mhdlab/dual2.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/fields.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Sentinel for the a -> infinity limit of the Landau family (zero field).
inline constexpr double kLandauAInfinity = std::numeric_limits<double>::infinity();

// Momentum-flux magnitude as a function of the internal parameter a > 1.
// Strictly decreasing, beta(inf) = 0. Uses an asymptotic series for large a
// where the closed form cancels catastrophically.
double beta_of_a(double a);
double beta_of_a_derivative(double a);

// Inverse map; returns the infinity sentinel for beta below beta_of_a(1e8).
double a_of_beta(double beta);

// Closed-form axis-aligned solution (b along +z) in spherical components.
// The theta component is identically zero.
struct LandauAxisSample {
    double u_rho;
    double u_phi;
    double pressure;
};
LandauAxisSample landau_axis_eval(double a, double rho, double phi);

// The (-1)-homogeneous solution U^b, P^b of the stationary Navier-Stokes
// equations with point force b at the origin. General b is handled by the
// minimal rotation taking e_z to b/|b| (pi about e_x when b points to -e_z).
// Immutable after construction; all evaluations are pure.
class LandauSolution {
public:
    static LandauSolution from_b(const Vec3& b);
    static LandauSolution axis(double beta);  // b = (0, 0, beta)

    const Vec3& b() const { return b_; }
    double beta() const { return beta_; }
    double a() const { return a_; }
    const Mat3& rotation() const { return rot_; }
    bool is_zero() const { return beta_ == 0.0; }

    Vec3 velocity(const Vec3& x) const;
    double pressure(const Vec3& x) const;
    std::pair<Vec3, double> eval(const Vec3& x) const;

    // Analytic derivatives (second-order jets); exact to roundoff.
    std::array<Dual2, 3> velocity_dual(const Vec3& x) const;
    Dual2 pressure_dual(const Vec3& x) const;

    Mat3 velocity_gradient(const Vec3& x) const;
    Vec3 pressure_gradient(const Vec3& x) const;
    Vec3 velocity_laplacian(const Vec3& x) const;

    // -Delta U + (U . grad) U + grad P, away from the origin.
    Vec3 ns_residual(const Vec3& x) const;

private:
    LandauSolution(const Vec3& b, double beta, double a, const Mat3& rot)
        : b_(b), beta_(beta), a_(a), rot_(rot) {}

    Vec3 b_;
    double beta_;
    double a_;
    Mat3 rot_;  // maps e_z to b/|b|
};

class LandauVelocityField final : public VectorField {
public:
    explicit LandauVelocityField(LandauSolution sol) : sol_(std::move(sol)) {}
    Vec3 value(const Vec3& x) const override { return sol_.velocity(x); }
    Mat3 gradient(const Vec3& x) const override { return sol_.velocity_gradient(x); }
    Vec3 laplacian(const Vec3& x) const override { return sol_.velocity_laplacian(x); }

private:
    LandauSolution sol_;
};

class LandauPressureField final : public ScalarField {
public:
    explicit LandauPressureField(LandauSolution sol) : sol_(std::move(sol)) {}
    double value(const Vec3& x) const override { return sol_.pressure(x); }
    Vec3 gradient(const Vec3& x) const override { return sol_.pressure_gradient(x); }

private:
    LandauSolution sol_;
};

// (U^b, 0, P^b) with measured singularity constants in the metadata.
FieldTriple landau_triple(const Vec3& b);

}  // namespace mhdlab
