#pragma once

#include <vector>

#include "mhdlab/errors.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

// Same rule mapped to [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

struct QuadratureNode {
    Vec3 point;
    Vec3 normal;  // outward unit normal = point / radius
    double weight;
};

// Product rule on the sphere |x| = R: Gauss-Legendre in cos(phi) times the
// periodic trapezoid in theta. Exact for spherical polynomials of degree
// < min(2 n_phi, n_theta); total weight is 4 pi R^2.
struct QuadratureRule {
    double radius = 1.0;
    int n_phi = 0;
    int n_theta = 0;
    std::vector<QuadratureNode> nodes;

    double total_weight() const {
        double s = 0.0;
        for (const auto& n : nodes) s += n.weight;
        return s;
    }

    template <class F>
    double integrate(const F& f) const {
        double s = 0.0;
        for (const auto& n : nodes) s += n.weight * f(n.point, n.normal);
        return s;
    }

    template <class F>
    Vec3 integrate_vec(const F& f) const {
        Vec3 s;
        for (const auto& n : nodes) s += f(n.point, n.normal) * n.weight;
        return s;
    }
};

QuadratureRule sphere_quadrature(double R, int n_phi, int n_theta);

}  // namespace mhdlab
