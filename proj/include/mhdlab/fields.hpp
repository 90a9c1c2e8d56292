#pragma once

#include <array>
#include <functional>
#include <limits>
#include <memory>

#include "mhdlab/dual2.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/spherical.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Step used by fallback second-difference Laplacians. Larger than the
// gradient step: the h^-2 roundoff amplification dominates sooner.
inline constexpr double kFdHessStep = 2e-4;

// A vector field on R^3 \ {0}. Derivatives default to central differences;
// analytic fields override them.
class VectorField {
public:
    virtual ~VectorField() = default;

    virtual Vec3 value(const Vec3& x) const = 0;

    // Entry (i,j) = d f^i / d x_j.
    virtual Mat3 gradient(const Vec3& x) const;

    virtual Vec3 laplacian(const Vec3& x) const;

    double divergence(const Vec3& x) const { return gradient(x).trace(); }
};

class ScalarField {
public:
    virtual ~ScalarField() = default;

    virtual double value(const Vec3& x) const = 0;
    virtual Vec3 gradient(const Vec3& x) const;
};

// (u, B, p) bundle. p may be absent for induction-only work. The starred
// constants advertise the singularity bounds |u| <= c1*/|x|, |B| <= c2*/|x|;
// they are metadata, carried but never enforced pointwise.
struct FieldTriple {
    std::shared_ptr<const VectorField> u;
    std::shared_ptr<const VectorField> B;
    std::shared_ptr<const ScalarField> p;

    double c1_star = 0.0;
    double c2_star = 0.0;
    double domain_radius = std::numeric_limits<double>::infinity();

    bool has_pressure() const { return static_cast<bool>(p); }
};

// ---------------------------------------------------------------------------
// Simple concrete fields

class ZeroVectorField final : public VectorField {
public:
    Vec3 value(const Vec3&) const override { return {}; }
    Mat3 gradient(const Vec3&) const override { return Mat3::zero(); }
    Vec3 laplacian(const Vec3&) const override { return {}; }
};

class ConstantScalarField final : public ScalarField {
public:
    explicit ConstantScalarField(double c) : c_(c) {}
    double value(const Vec3&) const override { return c_; }
    Vec3 gradient(const Vec3&) const override { return {}; }

private:
    double c_;
};

// Value-only closures; derivatives fall back to finite differences.
class LambdaVectorField final : public VectorField {
public:
    explicit LambdaVectorField(std::function<Vec3(const Vec3&)> f) : f_(std::move(f)) {}
    Vec3 value(const Vec3& x) const override { return f_(x); }

private:
    std::function<Vec3(const Vec3&)> f_;
};

class LambdaScalarField final : public ScalarField {
public:
    explicit LambdaScalarField(std::function<double(const Vec3&)> f) : f_(std::move(f)) {}
    double value(const Vec3& x) const override { return f_(x); }

private:
    std::function<double(const Vec3&)> f_;
};

// ---------------------------------------------------------------------------
// Analytic fields via Dual2
//
// Derived classes provide
//     template <class T> std::array<T, 3> formula(T x, T y, T z) const;
// and inherit exact gradients and Laplacians.

template <class Derived>
class AnalyticVectorField : public VectorField {
public:
    Vec3 value(const Vec3& p) const override {
        const auto r = self().template formula<double>(p.x, p.y, p.z);
        return {r[0], r[1], r[2]};
    }

    Mat3 gradient(const Vec3& p) const override {
        const auto r = eval_dual(p);
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = r[i].g[j];
        return m;
    }

    Vec3 laplacian(const Vec3& p) const override {
        const auto r = eval_dual(p);
        return {r[0].h.trace(), r[1].h.trace(), r[2].h.trace()};
    }

    std::array<Dual2, 3> eval_dual(const Vec3& p) const {
        return self().template formula<Dual2>(
            Dual2::variable(p.x, 0), Dual2::variable(p.y, 1), Dual2::variable(p.z, 2));
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

template <class Derived>
class AnalyticScalarField : public ScalarField {
public:
    double value(const Vec3& p) const override {
        return self().template formula<double>(p.x, p.y, p.z);
    }

    Vec3 gradient(const Vec3& p) const override { return eval_dual(p).g; }

    Dual2 eval_dual(const Vec3& p) const {
        return self().template formula<Dual2>(
            Dual2::variable(p.x, 0), Dual2::variable(p.y, 1), Dual2::variable(p.z, 2));
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

// ---------------------------------------------------------------------------
// C^2 radial cutoff: 1 for rho <= r_on, 0 for rho >= r_off, quintic
// smoothstep in between (first and second derivatives vanish at both ends).
struct RadialCutoff {
    double r_on = 4.0 / 3.0;
    double r_off = 5.0 / 3.0;

    double value(double rho) const;
    double d1(double rho) const;
    double d2(double rho) const;
};

}  // namespace mhdlab
