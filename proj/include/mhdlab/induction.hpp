#pragma once

#include <memory>
#include <vector>

#include "mhdlab/annulus.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/fields.hpp"
#include "mhdlab/landau.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// ---------------------------------------------------------------------------
// Cutoff localization (field level)

struct LocalizedField {
    std::shared_ptr<const VectorField> w;  // cutoff * B
    std::shared_ptr<const VectorField> f;  // forcing, supported in the transition shell
};

// w = chi(|x|) B and
// f = -(D chi) B - 2 (grad chi . grad) B + (u . grad chi) B - (B . grad chi) u.
LocalizedField localize_cutoff(std::shared_ptr<const VectorField> B,
                               std::shared_ptr<const VectorField> u,
                               const RadialCutoff& cutoff = {});

// ---------------------------------------------------------------------------
// Axisymmetric swirl-free background velocity, as meridional components.

class MeridionalVelocity {
public:
    virtual ~MeridionalVelocity() = default;
    virtual double u_rho(double rho, double phi) const = 0;
    virtual double u_phi(double rho, double phi) const = 0;
};

class ZeroMeridional final : public MeridionalVelocity {
public:
    double u_rho(double, double) const override { return 0.0; }
    double u_phi(double, double) const override { return 0.0; }
};

// Axis-aligned Landau velocity; the a = infinity sentinel gives zero.
class LandauMeridional final : public MeridionalVelocity {
public:
    explicit LandauMeridional(double beta);
    double u_rho(double rho, double phi) const override;
    double u_phi(double rho, double phi) const override;
    double beta() const { return beta_; }

private:
    double beta_;
    double a_;
};

// Projects a Cartesian field assumed axisymmetric and swirl-free onto the
// meridian plane theta = 0.
class MeridionalAdapter final : public MeridionalVelocity {
public:
    explicit MeridionalAdapter(std::shared_ptr<const VectorField> u) : u_(std::move(u)) {}
    double u_rho(double rho, double phi) const override;
    double u_phi(double rho, double phi) const override;

private:
    std::shared_ptr<const VectorField> u_;
};

// ---------------------------------------------------------------------------
// Discrete operators on the annulus grid. Values on boundary rows/columns of
// the results are zero; only interior nodes carry the stencil.

// (Laplacian - 1/(rho^2 sin^2 phi)) w, the swirl component of the vector
// Laplacian of w e_theta. Second-order central differences.
GridScalar swirl_operator(const GridScalar& w, const AnnulusGrid& g);

// Scalar reduction of (u . grad)(w e_theta) - (w e_theta . grad) u:
// u^rho d_rho w + (u^phi / rho) d_phi w - w (u^rho + u^phi cot phi) / rho.
GridScalar advection_operator(const MeridionalVelocity& u, const GridScalar& w,
                              const AnnulusGrid& g);

struct DirichletBC {
    std::vector<double> inner;  // w at rho_min, one entry per phi node
    std::vector<double> outer;  // w at rho_max

    static DirichletBC zeros(const AnnulusGrid& g) {
        DirichletBC bc;
        bc.inner.assign(g.n_phi, 0.0);
        bc.outer.assign(g.n_phi, 0.0);
        return bc;
    }
};

// Direct solver for -(Laplacian - 1/(rho^2 sin^2 phi)) w = rhs with Dirichlet
// data at rho_min / rho_max and zero axis rows. The factorization is built
// once and reused across solves (the fixed-point iteration solves the same
// system each step).
class SwirlPoissonSolver {
public:
    explicit SwirlPoissonSolver(const AnnulusGrid& g);
    ~SwirlPoissonSolver();
    SwirlPoissonSolver(SwirlPoissonSolver&&) noexcept;
    SwirlPoissonSolver& operator=(SwirlPoissonSolver&&) noexcept;

    // rhs is read at interior nodes only. Residual is driven below
    // 1e-10 of the rhs scale by iterative refinement; SolverFailure otherwise.
    GridScalar solve(const GridScalar& rhs, const DirichletBC& bc) const;

    const AnnulusGrid& grid() const { return grid_; }

private:
    AnnulusGrid grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot convenience wrapper.
GridScalar poisson_dirichlet_solve(const GridScalar& rhs, const DirichletBC& bc,
                                   const AnnulusGrid& g);

// ---------------------------------------------------------------------------
// Fixed-point iteration

struct IterationStep {
    double inc_max = 0.0;
    double inc_l2 = 0.0;
    double ratio = 0.0;  // inc / previous inc; 0 for the first step
};

struct IterationHistory {
    std::vector<IterationStep> steps;
    bool converged = false;
    bool not_contracting = false;
    double final_residual = 0.0;

    int iterations() const { return static_cast<int>(steps.size()); }
    // Median of the last few ratios above the roundoff floor.
    double asymptotic_ratio() const;
};

class NotContractingError : public Error {
public:
    explicit NotContractingError(IterationHistory h)
        : Error("fixed-point iteration is not contracting"), history(std::move(h)) {}
    IterationHistory history;
};

struct ContractionResult {
    GridScalar w;
    IterationHistory history;
};

// Picard iteration w_{n+1} = solve(f - advection(u, w_n)). Stops when the
// max-norm increment drops below tol or after max_iter steps; throws
// NotContractingError when the increment ratio stays >= 1 for five
// consecutive steps.
ContractionResult contraction_iterate(const MeridionalVelocity& u, const GridScalar& f,
                                      const GridScalar& w0, const DirichletBC& bc,
                                      const AnnulusGrid& g, double tol, int max_iter);

// ---------------------------------------------------------------------------
// Manufactured problem: w*(rho, phi) = sin(pi (rho - rho_min)/(rho_max - rho_min)) sin(phi)
// with analytic forcing f = -(L w*) + N(u, w*), so the discrete fixed point
// must recover w* to discretization error.

GridScalar manufactured_solution_grid(const AnnulusGrid& g);
GridScalar manufactured_forcing(const MeridionalVelocity& u, const AnnulusGrid& g);

// Swirl forcing supported in the transition shell [4/3, 5/3]:
// f(rho, phi) = amplitude * bump(rho) sin(phi).
GridScalar shell_forcing_grid(const AnnulusGrid& g, double amplitude);

// ---------------------------------------------------------------------------
// Full MHD residual at a point

struct MhdResidual {
    Vec3 momentum;   // -Du + (u.grad)u - (B.grad)B + grad p
    Vec3 induction;  // -DB + (u.grad)B - (B.grad)u
    double div_u = 0.0;
    double div_B = 0.0;
};

MhdResidual mhd_residual(const FieldTriple& t, const Vec3& x);

}  // namespace mhdlab
