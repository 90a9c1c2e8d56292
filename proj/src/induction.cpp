#include "mhdlab/induction.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>

namespace mhdlab {

// ---------------------------------------------------------------------------
// Cutoff localization

namespace {

class CutoffProductField final : public VectorField {
public:
    CutoffProductField(std::shared_ptr<const VectorField> B, RadialCutoff chi)
        : B_(std::move(B)), chi_(chi) {}

    Vec3 value(const Vec3& x) const override { return B_->value(x) * chi_.value(x.norm()); }

    Mat3 gradient(const Vec3& x) const override {
        const double rho = x.norm();
        const double c = chi_.value(rho);
        const Vec3 grad_chi = x * (chi_.d1(rho) / rho);
        return B_->gradient(x) * c + outer(B_->value(x), grad_chi);
    }

    Vec3 laplacian(const Vec3& x) const override {
        const double rho = x.norm();
        const double c = chi_.value(rho);
        const double c1 = chi_.d1(rho);
        const double lap_chi = chi_.d2(rho) + 2.0 * c1 / rho;
        const Vec3 grad_chi = x * (c1 / rho);
        const Mat3 gB = B_->gradient(x);
        return B_->laplacian(x) * c + (gB * grad_chi) * 2.0 + B_->value(x) * lap_chi;
    }

private:
    std::shared_ptr<const VectorField> B_;
    RadialCutoff chi_;
};

class CutoffForcingField final : public VectorField {
public:
    CutoffForcingField(std::shared_ptr<const VectorField> B, std::shared_ptr<const VectorField> u,
                       RadialCutoff chi)
        : B_(std::move(B)), u_(std::move(u)), chi_(chi) {}

    Vec3 value(const Vec3& x) const override {
        const double rho = x.norm();
        const double c1 = chi_.d1(rho);
        if (c1 == 0.0) return {};  // outside the transition shell
        const double lap_chi = chi_.d2(rho) + 2.0 * c1 / rho;
        const Vec3 grad_chi = x * (c1 / rho);
        const Vec3 B = B_->value(x);
        const Vec3 u = u_->value(x);
        const Mat3 gB = B_->gradient(x);
        return B * (-lap_chi) - (gB * grad_chi) * 2.0 + B * dot(u, grad_chi) -
               u * dot(B, grad_chi);
    }

private:
    std::shared_ptr<const VectorField> B_;
    std::shared_ptr<const VectorField> u_;
    RadialCutoff chi_;
};

}  // namespace

LocalizedField localize_cutoff(std::shared_ptr<const VectorField> B,
                               std::shared_ptr<const VectorField> u,
                               const RadialCutoff& cutoff) {
    LocalizedField out;
    out.w = std::make_shared<CutoffProductField>(B, cutoff);
    out.f = std::make_shared<CutoffForcingField>(B, std::move(u), cutoff);
    return out;
}

// ---------------------------------------------------------------------------
// Background velocities

LandauMeridional::LandauMeridional(double beta) : beta_(beta), a_(a_of_beta(beta)) {}

double LandauMeridional::u_rho(double rho, double phi) const {
    if (std::isinf(a_)) return 0.0;
    return landau_axis_eval(a_, rho, phi).u_rho;
}

double LandauMeridional::u_phi(double rho, double phi) const {
    if (std::isinf(a_)) return 0.0;
    return landau_axis_eval(a_, rho, phi).u_phi;
}

double MeridionalAdapter::u_rho(double rho, double phi) const {
    const double sp = std::sin(phi), cp = std::cos(phi);
    const Vec3 x{rho * sp, 0.0, rho * cp};
    return dot(u_->value(x), Vec3{sp, 0.0, cp});
}

double MeridionalAdapter::u_phi(double rho, double phi) const {
    const double sp = std::sin(phi), cp = std::cos(phi);
    const Vec3 x{rho * sp, 0.0, rho * cp};
    return dot(u_->value(x), Vec3{cp, 0.0, -sp});
}

// ---------------------------------------------------------------------------
// Discrete operators

GridScalar swirl_operator(const GridScalar& w, const AnnulusGrid& g) {
    if (w.n_rho != g.n_rho || w.n_phi != g.n_phi)
        throw DomainError("swirl_operator: shape mismatch");
    const double hr = g.h_rho(), hp = g.h_phi();
    GridScalar out(g.n_rho, g.n_phi);
    for (int i = 1; i < g.n_rho - 1; ++i) {
        const double rho = g.rho(i);
        const double ir2 = 1.0 / (rho * rho);
        for (int j = 1; j < g.n_phi - 1; ++j) {
            const double phi = g.phi(j);
            const double sp = std::sin(phi), cot = std::cos(phi) / sp;
            const double wrr = (w.at(i + 1, j) - 2.0 * w.at(i, j) + w.at(i - 1, j)) / (hr * hr);
            const double wr = (w.at(i + 1, j) - w.at(i - 1, j)) / (2.0 * hr);
            const double wpp = (w.at(i, j + 1) - 2.0 * w.at(i, j) + w.at(i, j - 1)) / (hp * hp);
            const double wp = (w.at(i, j + 1) - w.at(i, j - 1)) / (2.0 * hp);
            out.at(i, j) = wrr + 2.0 * wr / rho + ir2 * (wpp + cot * wp) -
                           w.at(i, j) * ir2 / (sp * sp);
        }
    }
    return out;
}

GridScalar advection_operator(const MeridionalVelocity& u, const GridScalar& w,
                              const AnnulusGrid& g) {
    if (w.n_rho != g.n_rho || w.n_phi != g.n_phi)
        throw DomainError("advection_operator: shape mismatch");
    const double hr = g.h_rho(), hp = g.h_phi();
    GridScalar out(g.n_rho, g.n_phi);
    for (int i = 1; i < g.n_rho - 1; ++i) {
        const double rho = g.rho(i);
        for (int j = 1; j < g.n_phi - 1; ++j) {
            const double phi = g.phi(j);
            const double cot = std::cos(phi) / std::sin(phi);
            const double ur = u.u_rho(rho, phi), up = u.u_phi(rho, phi);
            const double wr = (w.at(i + 1, j) - w.at(i - 1, j)) / (2.0 * hr);
            const double wp = (w.at(i, j + 1) - w.at(i, j - 1)) / (2.0 * hp);
            out.at(i, j) = ur * wr + up * wp / rho - w.at(i, j) * (ur + up * cot) / rho;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Direct solver

struct SwirlPoissonSolver::Impl {
    Eigen::SparseMatrix<double> A;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
};

namespace {

// Interior unknown index; interior extent (n_rho-2) x (n_phi-2).
inline int unknown_index(int i, int j, int n_phi) { return (i - 1) * (n_phi - 2) + (j - 1); }

struct StencilCoeffs {
    double c0, c_rp, c_rm, c_pp, c_pm;  // coefficients of L (not -L)
};

StencilCoeffs stencil(const AnnulusGrid& g, int i, int j) {
    const double hr = g.h_rho(), hp = g.h_phi();
    const double rho = g.rho(i), phi = g.phi(j);
    const double sp = std::sin(phi), cot = std::cos(phi) / sp;
    const double ir2 = 1.0 / (rho * rho);
    StencilCoeffs c;
    c.c_rp = 1.0 / (hr * hr) + 1.0 / (rho * hr);
    c.c_rm = 1.0 / (hr * hr) - 1.0 / (rho * hr);
    c.c_pp = ir2 / (hp * hp) + ir2 * cot / (2.0 * hp);
    c.c_pm = ir2 / (hp * hp) - ir2 * cot / (2.0 * hp);
    c.c0 = -2.0 / (hr * hr) - 2.0 * ir2 / (hp * hp) - ir2 / (sp * sp);
    return c;
}

}  // namespace

SwirlPoissonSolver::SwirlPoissonSolver(const AnnulusGrid& g) : grid_(g), impl_(new Impl) {
    const int nr = g.n_rho, np = g.n_phi;
    const int n = (nr - 2) * (np - 2);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(5) * n);
    for (int i = 1; i < nr - 1; ++i)
        for (int j = 1; j < np - 1; ++j) {
            const StencilCoeffs c = stencil(g, i, j);
            const int k = unknown_index(i, j, np);
            trip.emplace_back(k, k, -c.c0);  // assemble -L
            if (i + 1 < nr - 1) trip.emplace_back(k, unknown_index(i + 1, j, np), -c.c_rp);
            if (i - 1 > 0) trip.emplace_back(k, unknown_index(i - 1, j, np), -c.c_rm);
            if (j + 1 < np - 1) trip.emplace_back(k, unknown_index(i, j + 1, np), -c.c_pp);
            if (j - 1 > 0) trip.emplace_back(k, unknown_index(i, j - 1, np), -c.c_pm);
        }
    impl_->A.resize(n, n);
    impl_->A.setFromTriplets(trip.begin(), trip.end());
    impl_->A.makeCompressed();
    impl_->lu.compute(impl_->A);
    if (impl_->lu.info() != Eigen::Success)
        throw SolverFailure("swirl Poisson system: factorization failed");
}

SwirlPoissonSolver::~SwirlPoissonSolver() = default;
SwirlPoissonSolver::SwirlPoissonSolver(SwirlPoissonSolver&&) noexcept = default;
SwirlPoissonSolver& SwirlPoissonSolver::operator=(SwirlPoissonSolver&&) noexcept = default;

GridScalar SwirlPoissonSolver::solve(const GridScalar& rhs, const DirichletBC& bc) const {
    const AnnulusGrid& g = grid_;
    const int nr = g.n_rho, np = g.n_phi;
    if (rhs.n_rho != nr || rhs.n_phi != np) throw DomainError("solve: rhs shape mismatch");
    if (static_cast<int>(bc.inner.size()) != np || static_cast<int>(bc.outer.size()) != np)
        throw DomainError("solve: boundary data size mismatch");

    const int n = (nr - 2) * (np - 2);
    Eigen::VectorXd b(n);
    for (int i = 1; i < nr - 1; ++i)
        for (int j = 1; j < np - 1; ++j) {
            const StencilCoeffs c = stencil(g, i, j);
            double r = rhs.at(i, j);
            // Known neighbors move to the right-hand side of -L w = rhs.
            if (i - 1 == 0) r += c.c_rm * bc.inner[j];
            if (i + 1 == nr - 1) r += c.c_rp * bc.outer[j];
            b[unknown_index(i, j, np)] = r;
        }

    Eigen::VectorXd x = impl_->lu.solve(b);
    if (impl_->lu.info() != Eigen::Success)
        throw SolverFailure("swirl Poisson system: solve failed");

    const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
    for (int pass = 0; pass < 3; ++pass) {
        const Eigen::VectorXd res = b - impl_->A * x;
        if (res.cwiseAbs().maxCoeff() <= 1e-10 * scale) break;
        x += impl_->lu.solve(res);
    }
    if ((b - impl_->A * x).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw SolverFailure("swirl Poisson system: residual did not reach 1e-10 of rhs scale");

    GridScalar w(nr, np);
    for (int j = 0; j < np; ++j) {
        w.at(0, j) = (j == 0 || j == np - 1) ? 0.0 : bc.inner[j];
        w.at(nr - 1, j) = (j == 0 || j == np - 1) ? 0.0 : bc.outer[j];
    }
    for (int i = 1; i < nr - 1; ++i)
        for (int j = 1; j < np - 1; ++j) w.at(i, j) = x[unknown_index(i, j, np)];
    return w;
}

GridScalar poisson_dirichlet_solve(const GridScalar& rhs, const DirichletBC& bc,
                                   const AnnulusGrid& g) {
    return SwirlPoissonSolver(g).solve(rhs, bc);
}

// ---------------------------------------------------------------------------
// Fixed-point iteration

double IterationHistory::asymptotic_ratio() const {
    std::vector<double> valid;
    for (size_t k = 1; k < steps.size(); ++k)
        if (steps[k].inc_max > 1e-12 && steps[k].ratio > 0.0) valid.push_back(steps[k].ratio);
    if (valid.empty()) return 0.0;
    const size_t take = std::min<size_t>(3, valid.size());
    std::vector<double> tail(valid.end() - take, valid.end());
    std::sort(tail.begin(), tail.end());
    return tail[tail.size() / 2];
}

ContractionResult contraction_iterate(const MeridionalVelocity& u, const GridScalar& f,
                                      const GridScalar& w0, const DirichletBC& bc,
                                      const AnnulusGrid& g, double tol, int max_iter) {
    if (!(tol > 0.0)) throw DomainError("contraction_iterate: tol must be > 0");
    const SwirlPoissonSolver solver(g);
    IterationHistory hist;
    GridScalar w = w0;
    double prev_inc = 0.0;
    int rising = 0;

    for (int it = 0; it < max_iter; ++it) {
        GridScalar rhs = f - advection_operator(u, w, g);
        GridScalar next = solver.solve(rhs, bc);
        const GridScalar diff = next - w;
        IterationStep step;
        step.inc_max = diff.max_abs();
        step.inc_l2 = diff.l2(g);
        step.ratio = (it > 0 && prev_inc > 0.0) ? step.inc_max / prev_inc : 0.0;
        hist.steps.push_back(step);
        w = std::move(next);

        if (it > 0 && step.ratio >= 1.0) {
            if (++rising >= 5) {
                hist.not_contracting = true;
                throw NotContractingError(hist);
            }
        } else {
            rising = 0;
        }
        prev_inc = step.inc_max;
        if (step.inc_max < tol) {
            hist.converged = true;
            break;
        }
    }

    // Fixed-point consistency: -L w + N(u, w) - f on the interior.
    const GridScalar lw = swirl_operator(w, g);
    const GridScalar nw = advection_operator(u, w, g);
    double res = 0.0;
    for (int i = 1; i < g.n_rho - 1; ++i)
        for (int j = 1; j < g.n_phi - 1; ++j)
            res = std::max(res, std::abs(-lw.at(i, j) + nw.at(i, j) - f.at(i, j)));
    hist.final_residual = res;
    return {std::move(w), std::move(hist)};
}

// ---------------------------------------------------------------------------
// Manufactured problem

namespace {

struct RadialShape {
    double k;       // pi / (rho_max - rho_min)
    double rho_min;

    double s(double rho) const { return std::sin(k * (rho - rho_min)); }
    double s1(double rho) const { return k * std::cos(k * (rho - rho_min)); }
    double s2(double rho) const { return -k * k * std::sin(k * (rho - rho_min)); }
};

}  // namespace

GridScalar manufactured_solution_grid(const AnnulusGrid& g) {
    const RadialShape r{M_PI / (g.rho_max - g.rho_min), g.rho_min};
    return sample_grid(g, [&](double rho, double phi) { return r.s(rho) * std::sin(phi); });
}

GridScalar manufactured_forcing(const MeridionalVelocity& u, const AnnulusGrid& g) {
    const RadialShape r{M_PI / (g.rho_max - g.rho_min), g.rho_min};
    return sample_grid(g, [&](double rho, double phi) {
        const double sp = std::sin(phi), cp = std::cos(phi);
        const double S = r.s(rho), S1 = r.s1(rho), S2 = r.s2(rho);
        // L w* = [S'' + 2S'/rho - 2S/rho^2] sin(phi)  (exact for w* = S sin)
        const double lw = (S2 + 2.0 * S1 / rho - 2.0 * S / (rho * rho)) * sp;
        // N(u, w*) with the cot-phi product written cancellation-free.
        const double ur = u.u_rho(rho, phi), up = u.u_phi(rho, phi);
        const double nw = ur * S1 * sp + up * S * cp / rho - (S * sp * ur + S * cp * up) / rho;
        return -lw + nw;
    });
}

GridScalar shell_forcing_grid(const AnnulusGrid& g, double amplitude) {
    const RadialCutoff chi;  // transition on [4/3, 5/3]
    return sample_grid(g, [&](double rho, double phi) {
        // bump = chi'(rho)-shaped: supported exactly on the transition shell
        const double b = chi.d1(rho) * (chi.r_off - chi.r_on);  // O(1) magnitude
        return -amplitude * b * std::sin(phi);
    });
}

// ---------------------------------------------------------------------------
// MHD residual

MhdResidual mhd_residual(const FieldTriple& t, const Vec3& x) {
    if (x.norm2() == 0.0) throw ZeroPointError("mhd_residual at the origin");
    if (!t.has_pressure()) throw MissingPressureError("mhd_residual needs the pressure");
    const Vec3 u = t.u->value(x);
    const Vec3 B = t.B->value(x);
    const Mat3 gu = t.u->gradient(x);
    const Mat3 gB = t.B->gradient(x);
    const Vec3 lap_u = t.u->laplacian(x);
    const Vec3 lap_B = t.B->laplacian(x);
    const Vec3 grad_p = t.p->gradient(x);

    MhdResidual r;
    r.momentum = -lap_u + gu * u - gB * B + grad_p;
    r.induction = -lap_B + gB * u - gu * B;
    r.div_u = gu.trace();
    r.div_B = gB.trace();
    return r;
}

}  // namespace mhdlab
