#include "mhdlab/quadrature.hpp"

#include <cmath>

namespace mhdlab {

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    // Newton iteration from the Chebyshev-like initial guess; symmetric pairs.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_n(x) and derivative by Bonnet recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    return gl;
}

GaussLegendre gauss_legendre(int n, double a, double b) {
    GaussLegendre gl = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        gl.nodes[i] = mid + half * gl.nodes[i];
        gl.weights[i] *= half;
    }
    return gl;
}

QuadratureRule sphere_quadrature(double R, int n_phi, int n_theta) {
    if (R <= 0.0) throw ZeroRadiusError("sphere_quadrature: R <= 0");
    if (n_phi < 2 || n_theta < 4)
        throw DomainError("sphere_quadrature: need n_phi >= 2 and n_theta >= 4");

    const GaussLegendre gl = gauss_legendre(n_phi);  // nodes are cos(phi)
    const double w_theta = 2.0 * M_PI / n_theta;

    QuadratureRule rule;
    rule.radius = R;
    rule.n_phi = n_phi;
    rule.n_theta = n_theta;
    rule.nodes.reserve(static_cast<size_t>(n_phi) * n_theta);
    for (int i = 0; i < n_phi; ++i) {
        const double c = gl.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < n_theta; ++j) {
            const double theta = w_theta * j;
            const Vec3 n{s * std::cos(theta), s * std::sin(theta), c};
            rule.nodes.push_back({n * R, n, gl.weights[i] * w_theta * R * R});
        }
    }
    return rule;
}

}  // namespace mhdlab
