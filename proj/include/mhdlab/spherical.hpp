#pragma once

#include <functional>

#include "mhdlab/errors.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Convention: x = (rho sin(phi) cos(theta), rho sin(phi) sin(theta), rho cos(phi))
// with polar angle phi in [0, pi] and azimuth theta in [0, 2 pi).
struct SphericalCoords {
    double rho;    // > 0
    double phi;    // polar angle
    double theta;  // azimuth; normalized to 0 on the polar axis
};

// Differential operators refuse to evaluate closer to the axis than this:
// the chart is degenerate there and the 1/sin(phi) factors blow up.
inline constexpr double kAxisSinPhiThreshold = 1e-8;

SphericalCoords to_spherical(const Vec3& x);
Vec3 to_cartesian(const SphericalCoords& c);

struct SphericalBasis {
    Vec3 e_rho;
    Vec3 e_phi;
    Vec3 e_theta;
};

// e_rho = x/rho, e_theta = (-sin t, cos t, 0), e_phi = e_theta x e_rho.
SphericalBasis basis_vectors(const SphericalCoords& c);

// Components of a vector field in the orthonormal spherical basis.
struct SphericalComponents {
    double rho = 0.0;
    double phi = 0.0;
    double theta = 0.0;
};

using SphericalComponentField = std::function<SphericalComponents(const SphericalCoords&)>;

// Divergence and curl of a field given by spherical components, evaluated
// with central differences of step h in each coordinate. The curl is
// returned as a Cartesian vector.
double spherical_div(const SphericalComponentField& v, const SphericalCoords& c, double h = 1e-5);
Vec3 spherical_curl(const SphericalComponentField& v, const SphericalCoords& c, double h = 1e-5);

// Central-difference Jacobian, entry (i,j) = d f^i / d x_j.
// h = 0 selects the default step 1e-5 * max(1, |x|).
Mat3 fd_gradient(const std::function<Vec3(const Vec3&)>& f, const Vec3& x, double h = 0.0);

}  // namespace mhdlab
