#pragma once

#include <functional>
#include <vector>

#include "mhdlab/fields.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// (u, B, p) -> (l u(l x), l B(l x), l^2 p(l x)). Residuals pick up a factor
// l^3 and the momentum flux is invariant. Singularity metadata is preserved;
// the wrapped domain shrinks by 1/l.
FieldTriple scale_triple(const FieldTriple& t, double lambda);

struct DecayProfile {
    std::vector<double> radii;       // strictly decreasing
    std::vector<double> sup_values;  // M(r) = max over the sphere |x| = r of |field|
    double alpha = 0.0;              // least-squares fit of log M(r) vs -log r
    double fit_residual = 0.0;       // rms residual of the fit
};

// Sphere suprema use the shared quadrature node set; needs >= 4 radii
// spanning at least a decade. Throws NonPositiveValues if the field vanishes
// identically on one of the spheres.
DecayProfile decay_exponent_fit(const VectorField& field, std::vector<double> radii,
                                int n_phi = 32, int n_theta = 16);

// max over the sampled spheres of r^(3/q-1) M(r), for q in (1, 3).
double pointwise_bound_profile(const VectorField& field, double q,
                               const std::vector<double>& radii, int n_phi = 32,
                               int n_theta = 16);

// Discrete weak-L3 norm on the ball of the given radius:
// sup over thresholds t of t * measure(|f| >= t)^(1/3), the measure estimated
// from a fixed Halton point set. Requires n_samples >= 1e5.
double weak_l3_norm(const std::function<double(const Vec3&)>& magnitude, double ball_radius,
                    int n_samples);

// Halton sequence point (bases 2, 3, 5) mapped uniformly into the ball.
Vec3 halton_ball_point(int index, double radius);

}  // namespace mhdlab
