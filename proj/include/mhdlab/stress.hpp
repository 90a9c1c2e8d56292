#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mhdlab/fields.hpp"
#include "mhdlab/quadrature.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Momentum-flux tensor: T1_ij = -d_i u^j - d_j u^i + u^i u^j - B^i B^j + p delta_ij.
// Symmetric; requires the pressure component.
Mat3 stress_t1(const FieldTriple& t, const Vec3& x);

// Induction-flux tensor: T2_ij = -d_j B^i + u^j B^i - B^j u^i. Not symmetric.
Mat3 stress_t2(const FieldTriple& t, const Vec3& x);

enum class StressKind { T1, T2 };

struct FluxReport {
    double radius = 0.0;
    Vec3 value;  // component i = integral of T_ij n_j over |x| = R
    int n_phi = 0;
    int n_theta = 0;
    double quadrature_error = 0.0;  // difference against the next-higher order
};

// Surface flux of T1 or T2 over the sphere |x| = R. The rule's radius must
// match R. For exact solutions off the origin the T1 value is independent
// of R (it equals the point-force vector b).
FluxReport flux_integral(const FieldTriple& t, StressKind which, double R,
                         const QuadratureRule& quad);

struct VanishingCheckResult {
    Vec3 value;
    bool pass = false;
    double tol = 0.0;
};

// T2 flux with a quadrature-limited pass tolerance
// tol = 1e-8 * (1 + R^2 * max node |T2|).
VanishingCheckResult vanishing_check(const FieldTriple& t, double R, const QuadratureRule& quad);

// ---------------------------------------------------------------------------
// Weak form over the punctured ball

struct ShellQuadratureSpec {
    double inner_radius = 1e-3;  // the |x|^-1 singularity is integrable; this
    double outer_radius = 2.0;   // truncation contributes O(inner_radius)
    int n_shells = 48;
    int points_per_shell = 4;
    int n_phi = 32;
    int n_theta = 16;
};

struct WeakFormResult {
    double momentum = 0.0;   // integral of -u.Dz - u^j u^i d_j z^i + B^j B^i d_j z^i
    double induction = 0.0;  // integral of -B.Dz - u^j B^i d_j z^i + B^j u^i d_j z^i
    double momentum_error = 0.0;  // shell-refinement estimates
    double induction_error = 0.0;
};

// Tests (u, B) against a smooth divergence-free field zeta. Verifies
// div zeta = 0 by sampling and throws TestFieldNotDivergenceFree otherwise.
// For a solution with point force b and zeta(0) != 0 the momentum value
// converges to b . zeta(0).
WeakFormResult weak_form_residual(const FieldTriple& t, const VectorField& zeta,
                                  const ShellQuadratureSpec& spec = {});

// Divergence-free by construction: zeta = 2 g(t) (axis x (x - center)) with
// t = |x - center|^2 and g a C^3 bump supported on t in (t_lo, t_hi).
// Analytic gradient and Laplacian.
class BumpCrossField final : public VectorField {
public:
    BumpCrossField(const Vec3& axis, const Vec3& center, double t_lo, double t_hi,
                   double amplitude);

    Vec3 value(const Vec3& x) const override;
    Mat3 gradient(const Vec3& x) const override;
    Vec3 laplacian(const Vec3& x) const override;

private:
    // bump g and its first two derivatives in t
    double g(double t) const;
    double g1(double t) const;
    double g2(double t) const;

    Vec3 axis_;
    Vec3 center_;
    double t_lo_, t_hi_;
    double amp_;
};

// Test field with zeta(0) = v0, supported inside |x| < 1.3.
BumpCrossField divfree_test_field_through_origin(const Vec3& v0);

// ---------------------------------------------------------------------------
// Point-mass extraction and the profile identity

// Surface integrals of T1_ij * test * n_j over |x| = eps for each radius in
// eps_list; converges to b * test(0) at rate O(eps).
std::vector<Vec3> dirac_mass_limit(const FieldTriple& t, const ScalarField& test,
                                   const std::vector<double>& eps_list, int n_phi = 64,
                                   int n_theta = 32);

// integral over [0, pi] of  Bphi (cos^2 - sin^2) + Bphi' sin cos  dphi;
// zero for every C^1 profile (integration by parts, boundary terms vanish).
double swirl_profile_identity(const std::function<double(double)>& profile,
                               const std::function<double(double)>& profile_derivative,
                               int n_nodes = 128);
// Variant with a central-difference derivative (step 1e-6).
double swirl_profile_identity(const std::function<double(double)>& profile, int n_nodes = 128);

}  // namespace mhdlab
