#include "mhdlab/annulus.hpp"

#include <algorithm>
#include <cmath>

#include "mhdlab/spherical.hpp"

namespace mhdlab {

double GridScalar::max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double GridScalar::l2(const AnnulusGrid& g) const {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s * g.h_rho() * g.h_phi());
}

GridScalar operator-(const GridScalar& a, const GridScalar& b) {
    GridScalar r(a.n_rho, a.n_phi);
    for (size_t k = 0; k < a.v.size(); ++k) r.v[k] = a.v[k] - b.v[k];
    return r;
}

double grid_w1q_norm(const GridScalar& w, const AnnulusGrid& g, double q) {
    if (!(q >= 1.0)) throw DomainError("grid_w1q_norm: q must be >= 1");
    const double cell = g.h_rho() * g.h_phi();
    double s = 0.0;
    for (int i = 0; i < g.n_rho; ++i)
        for (int j = 0; j < g.n_phi; ++j) {
            s += std::pow(std::abs(w.at(i, j)), q) * cell;
            if (i + 1 < g.n_rho)
                s += std::pow(std::abs(w.at(i + 1, j) - w.at(i, j)) / g.h_rho(), q) * cell;
            if (j + 1 < g.n_phi)
                s += std::pow(std::abs(w.at(i, j + 1) - w.at(i, j)) /
                                  (g.rho(i) * g.h_phi()),
                              q) *
                     cell;
        }
    return std::pow(s, 1.0 / q);
}

GridSwirlField::GridSwirlField(AnnulusGrid grid, GridScalar values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.n_rho != grid_.n_rho || values_.n_phi != grid_.n_phi)
        throw DomainError("GridSwirlField: shape mismatch");
}

double GridSwirlField::interpolate(double rho, double phi) const {
    const double tol = 1e-12 * grid_.rho_max;
    if (rho < grid_.rho_min - tol || rho > grid_.rho_max + tol)
        throw DomainExceededError("GridSwirlField: rho outside the shell");
    phi = std::clamp(phi, 0.0, M_PI);
    const double fi = std::clamp((rho - grid_.rho_min) / grid_.h_rho(), 0.0,
                                 static_cast<double>(grid_.n_rho - 1));
    const double fj = std::clamp(phi / grid_.h_phi(), 0.0, static_cast<double>(grid_.n_phi - 1));
    const int i = std::min(static_cast<int>(fi), grid_.n_rho - 2);
    const int j = std::min(static_cast<int>(fj), grid_.n_phi - 2);
    const double a = fi - i, b = fj - j;
    return (1 - a) * (1 - b) * values_.at(i, j) + a * (1 - b) * values_.at(i + 1, j) +
           (1 - a) * b * values_.at(i, j + 1) + a * b * values_.at(i + 1, j + 1);
}

Vec3 GridSwirlField::value(const Vec3& x) const {
    const SphericalCoords c = to_spherical(x);
    const double w = interpolate(c.rho, c.phi);
    return basis_vectors(c).e_theta * w;
}

}  // namespace mhdlab
