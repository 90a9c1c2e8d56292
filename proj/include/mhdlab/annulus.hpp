#pragma once

#include <string>
#include <vector>

#include "mhdlab/errors.hpp"
#include "mhdlab/fields.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Tensor-product (rho, phi) grid over a spherical shell, uniform in both
// directions; phi covers the full [0, pi].
struct AnnulusGrid {
    double rho_min;
    double rho_max;
    int n_rho;
    int n_phi;

    AnnulusGrid(double rho_min_, double rho_max_, int n_rho_, int n_phi_)
        : rho_min(rho_min_), rho_max(rho_max_), n_rho(n_rho_), n_phi(n_phi_) {
        if (!(rho_min > 0.0 && rho_max > rho_min))
            throw DomainError("AnnulusGrid: need 0 < rho_min < rho_max");
        if (n_rho < 8 || n_phi < 8) throw DomainError("AnnulusGrid: need n_rho, n_phi >= 8");
    }

    double h_rho() const { return (rho_max - rho_min) / (n_rho - 1); }
    double h_phi() const { return M_PI / (n_phi - 1); }
    double rho(int i) const { return rho_min + i * h_rho(); }
    double phi(int j) const { return j * h_phi(); }
};

// Scalar samples on an AnnulusGrid (the swirl component of the localized
// magnetic field). Axis columns j = 0 and j = n_phi-1 are kept at zero.
struct GridScalar {
    int n_rho = 0;
    int n_phi = 0;
    std::vector<double> v;

    GridScalar() = default;
    GridScalar(int nr, int np) : n_rho(nr), n_phi(np), v(static_cast<size_t>(nr) * np, 0.0) {}
    static GridScalar zeros(const AnnulusGrid& g) { return GridScalar(g.n_rho, g.n_phi); }

    double& at(int i, int j) { return v[static_cast<size_t>(i) * n_phi + j]; }
    double at(int i, int j) const { return v[static_cast<size_t>(i) * n_phi + j]; }

    bool same_shape(const GridScalar& o) const {
        return n_rho == o.n_rho && n_phi == o.n_phi;
    }

    double max_abs() const;
    // Discrete L2 norm weighted by the cell area h_rho * h_phi.
    double l2(const AnnulusGrid& g) const;
};

GridScalar operator-(const GridScalar& a, const GridScalar& b);

// Grid l^q norm of values plus one-sided difference quotients; a discrete
// stand-in for the W^{1,q} norm used only as a diagnostic.
double grid_w1q_norm(const GridScalar& w, const AnnulusGrid& g, double q);

// Samples a closed-form function at the nodes (axis columns forced to 0).
template <class F>
GridScalar sample_grid(const AnnulusGrid& g, const F& f) {
    GridScalar out(g.n_rho, g.n_phi);
    for (int i = 0; i < g.n_rho; ++i)
        for (int j = 1; j < g.n_phi - 1; ++j) out.at(i, j) = f(g.rho(i), g.phi(j));
    return out;
}

// Swirl field w^theta(rho, phi) e_theta reconstructed from grid samples by
// bilinear interpolation; evaluation outside the shell throws DomainExceeded.
class GridSwirlField final : public VectorField {
public:
    GridSwirlField(AnnulusGrid grid, GridScalar values);

    Vec3 value(const Vec3& x) const override;
    double interpolate(double rho, double phi) const;
    const AnnulusGrid& grid() const { return grid_; }

private:
    AnnulusGrid grid_;
    GridScalar values_;
};

}  // namespace mhdlab
