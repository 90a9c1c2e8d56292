// Acceptance suite: one check per shipped guarantee, one [PASS]/[FAIL] line
// each, nonzero exit if anything fails. Tolerances are pinned here, not
// configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mhdlab/asymptotics.hpp"
#include "mhdlab/catalog.hpp"
#include "mhdlab/induction.hpp"
#include "mhdlab/landau.hpp"
#include "mhdlab/quadrature.hpp"
#include "mhdlab/stress.hpp"

using namespace mhdlab;

namespace {

int g_failures = 0;

void record(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++g_failures;
}

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(4);
    ss << v;
    return ss.str();
}

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Vec3 random_point(std::mt19937_64& rng, double lo, double hi) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> rad(lo, hi);
    Vec3 v{n(rng), n(rng), n(rng)};
    while (v.norm() < 1e-6) v = {n(rng), n(rng), n(rng)};
    return v / v.norm() * rad(rng);
}

// 1. beta <-> a round trip over 50 log-spaced beta in [1e-3, 1e3], < 1 s.
void criterion_roundtrip() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double beta = std::pow(10.0, -3.0 + 6.0 * k / 49.0);
        const double err = std::abs(beta_of_a(a_of_beta(beta)) - beta);
        worst = std::max(worst, err / std::max(1.0, beta));
    }
    const double dt = elapsed_s(t0);
    record("1. beta<->a round trip (50 points, <=1e-10 relative)",
           worst <= 1e-10 && dt < 1.0, "worst=" + num(worst) + " time=" + num(dt) + "s");
}

// 2. PDE certificate at 100 random points; FD variant converges at O(h^2).
void criterion_pde_certificate() {
    const LandauSolution sol = LandauSolution::axis(1.0);
    std::mt19937_64 rng(2);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Vec3 x = random_point(rng, 0.1, 2.0);
        worst = std::max(worst, sol.ns_residual(x).norm() * std::pow(x.norm(), 3));
    }
    const bool analytic_ok = worst < 1e-8;

    // FD-derivative variant of the residual at steps h and h/2
    auto fd_residual = [&](const Vec3& x, double h) {
        Vec3 lap, conv, gp;
        const Vec3 u = sol.velocity(x);
        Mat3 gu;
        for (int j = 0; j < 3; ++j) {
            Vec3 xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            const Vec3 fp = sol.velocity(xp), fm = sol.velocity(xm);
            for (int i = 0; i < 3; ++i) {
                lap[i] += (fp[i] - 2.0 * u[i] + fm[i]) / (h * h);
                gu(i, j) = (fp[i] - fm[i]) / (2.0 * h);
            }
            gp[j] = (sol.pressure(xp) - sol.pressure(xm)) / (2.0 * h);
        }
        return -lap + gu * u + gp;
    };
    int good = 0, total = 0;
    for (int k = 0; k < 10; ++k) {
        const Vec3 x = random_point(rng, 0.4, 1.2);
        const Vec3 exact = sol.ns_residual(x);
        const double e1 = (fd_residual(x, 2e-3) - exact).norm();
        const double e2 = (fd_residual(x, 1e-3) - exact).norm();
        ++total;
        if (e1 / e2 > 3.5 && e1 / e2 < 4.5) ++good;
    }
    record("2. Landau PDE certificate (residual*|x|^3 < 1e-8; FD Richardson 4 +/- 0.5)",
           analytic_ok && good >= 8,
           "worst=" + num(worst) + " richardson_ok=" + std::to_string(good) + "/10");
}

// 3. |div U| * |x|^2 < 1e-10 at the same kind of points.
void criterion_divergence_free() {
    const LandauSolution sol = LandauSolution::axis(1.0);
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const Vec3 x = random_point(rng, 0.1, 2.0);
        worst = std::max(worst, std::abs(sol.velocity_gradient(x).trace()) * x.norm2());
    }
    record("3. divergence-free (|div U| |x|^2 < 1e-10)", worst < 1e-10, "worst=" + num(worst));
}

// 4. Momentum flux: |flux - b| < 1e-8 at R=1 with (64,32); spread < 1e-8.
void criterion_momentum_flux() {
    const Vec3 b{0, 0, 1};
    const FieldTriple t = landau_triple(b);
    std::vector<Vec3> values;
    for (double R : {0.25, 0.5, 1.0, 1.5})
        values.push_back(
            flux_integral(t, StressKind::T1, R, sphere_quadrature(R, 64, 32)).value);
    const double at_one = (values[2] - b).norm();
    double spread = 0.0;
    for (const Vec3& v : values) spread = std::max(spread, (v - values[0]).norm());
    record("4. momentum flux (|flux-b| < 1e-8 at R=1; spread < 1e-8 over radii)",
           at_one < 1e-8 && spread < 1e-8,
           "|flux-b|=" + num(at_one) + " spread=" + num(spread));
}

// 5. Point-mass limit: deviation halves as eps halves (ratio 2 +/- 0.4).
void criterion_dirac() {
    const Vec3 b{0, 0, 1};
    const FieldTriple t = landau_triple(b);
    const RadialCutoff cut{0.4, 0.8};
    const LambdaScalarField test(
        [cut](const Vec3& x) { return (1.0 + x.z) * cut.value(x.norm()); });
    const auto vals = dirac_mass_limit(t, test, {0.2, 0.1, 0.05});
    const double d0 = (vals[0] - b).norm();
    const double d1 = (vals[1] - b).norm();
    const double d2 = (vals[2] - b).norm();
    const double r01 = d0 / d1, r12 = d1 / d2;
    const bool ok = r01 > 1.6 && r01 < 2.4 && r12 > 1.6 && r12 < 2.4;
    record("5. point-mass limit (deviation ratio 2 +/- 0.4 under eps halving)", ok,
           "ratios=" + num(r01) + "," + num(r12));
}

// 6. Vanishing condition: 10 random pure-swirl B with swirl-free u pass below
// 1e-8; a non-axisymmetric counterexample exceeds 1e-2.
void criterion_vanishing() {
    const QuadratureRule q = sphere_quadrature(1.0, 48, 24);
    std::mt19937_64 rng(6);
    const auto landau_u = std::make_shared<LandauVelocityField>(LandauSolution::axis(0.5));
    const auto poloidal_u = std::make_shared<PoloidalField>(0.7, -0.2);
    bool all_pass = true;
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        FieldTriple t;
        t.u = (k % 2 == 0) ? std::static_pointer_cast<const VectorField>(landau_u)
                           : std::static_pointer_cast<const VectorField>(poloidal_u);
        t.B = std::make_shared<ModulatedSwirlField>(random_swirl_field(rng, 2.0));
        const auto res = vanishing_check(t, 1.0, q);
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(res.value[i]));
        all_pass = all_pass && res.value.norm() < 1e-8;
    }

    FieldTriple counter;
    counter.u = landau_u;
    counter.B = std::make_shared<AxisShearField>();
    const auto bad = vanishing_check(counter, 1.0, q);
    record("6. vanishing condition (10 swirl fields < 1e-8; shear counterexample > 1e-2)",
           all_pass && bad.value.norm() > 1e-2,
           "worst=" + num(worst) + " counterexample=" + num(bad.value.norm()));
}

// 7. Profile identity: 20 random smooth profiles below 1e-10.
void criterion_profile_identity() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        std::array<double, 7> c;
        for (double& v : c) v = coef(rng);
        const double w = 1.0 + std::abs(coef(rng));
        auto prof = [&](double phi) {
            double r = 0.0;
            for (int d = 6; d >= 0; --d) r = r * phi + c[d];
            return r + 0.5 * std::sin(w * phi);
        };
        auto dprof = [&](double phi) {
            double r = 0.0;
            for (int d = 6; d >= 1; --d) r = r * phi + d * c[d];
            return r + 0.5 * w * std::cos(w * phi);
        };
        worst = std::max(worst, std::abs(swirl_profile_identity(prof, dprof)));
    }
    record("7. profile integral identity (20 random profiles < 1e-10)", worst < 1e-10,
           "worst=" + num(worst));
}

// 8. Weak form: 10 off-origin test fields < 1e-6; origin recovery within 1%.
void criterion_weak_form() {
    const FieldTriple t = landau_triple({0, 0, 1});
    std::mt19937_64 rng(8);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> tlo(0.3, 0.8), wid(0.3, 1.2), amp(0.5, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        Vec3 axis{n(rng), n(rng), n(rng)};
        axis = axis / axis.norm();
        const double lo = tlo(rng);
        const BumpCrossField zeta(axis, Vec3{}, lo, std::min(lo + wid(rng), 2.2), amp(rng));
        const auto res = weak_form_residual(t, zeta);
        worst = std::max({worst, std::abs(res.momentum), std::abs(res.induction)});
    }

    const BumpCrossField through = divfree_test_field_through_origin({0, 0, 1});
    const auto rec = weak_form_residual(t, through);
    const bool origin_ok = std::abs(rec.momentum - 1.0) < 0.01 && rec.momentum_error < 0.01;
    record("8. weak form (off-origin < 1e-6; b.zeta(0) recovered within 1%)",
           worst < 1e-6 && origin_ok,
           "worst=" + num(worst) + " momentum=" + num(rec.momentum) +
               " est_err=" + num(rec.momentum_error));
}

// 9. Contraction solver: geometric convergence, O(h^2) accuracy, monotone
// beta sweep, a detected non-contracting regime, and runtime < 2 min at
// 256 x 128.
void criterion_contraction() {
    const auto t0 = std::chrono::steady_clock::now();

    // geometric convergence on the manufactured problem
    const LandauMeridional u_half(0.5);
    const AnnulusGrid g64(0.05, 2.0, 64, 32);
    auto res = contraction_iterate(u_half, manufactured_forcing(u_half, g64),
                                   GridScalar::zeros(g64), DirichletBC::zeros(g64), g64, 1e-11,
                                   100);
    bool geometric = res.history.converged;
    for (size_t s = 3; s < res.history.steps.size(); ++s)
        geometric = geometric && res.history.steps[s].ratio < 0.9;

    // grid-doubling error ratio 4 +/- 1
    double errs[2];
    int idx = 0;
    for (int nr : {64, 128}) {
        const AnnulusGrid g(0.05, 2.0, nr, nr / 2);
        auto r = contraction_iterate(u_half, manufactured_forcing(u_half, g),
                                     GridScalar::zeros(g), DirichletBC::zeros(g), g, 1e-11, 100);
        errs[idx++] = (r.w - manufactured_solution_grid(g)).max_abs();
    }
    const double conv_ratio = errs[0] / errs[1];
    const bool second_order = conv_ratio > 3.0 && conv_ratio < 5.0;

    // monotone contraction ratios over the beta sweep at 256 x 128
    const AnnulusGrid g(0.05, 2.0, 256, 128);
    const GridScalar f = shell_forcing_grid(g, 1.0);
    bool monotone = true;
    double prev = 0.0;
    std::string ratios;
    for (double beta : {0.25, 0.5, 1.0, 2.0}) {
        const LandauMeridional u(beta);
        auto r = contraction_iterate(u, f, GridScalar::zeros(g), DirichletBC::zeros(g), g,
                                     1e-10, 200);
        const double ratio = r.history.asymptotic_ratio();
        monotone = monotone && r.history.converged && ratio > prev;
        prev = ratio;
        ratios += (ratios.empty() ? "" : ",") + num(ratio);
    }

    // non-contracting regime on a desk-size grid
    const AnnulusGrid gs(0.05, 2.0, 32, 16);
    const GridScalar fs = shell_forcing_grid(gs, 1.0);
    double threshold = -1.0;
    for (double beta = 4.0; beta <= 1048576.0; beta *= 2.0) {
        try {
            auto r = contraction_iterate(LandauMeridional(beta), fs, GridScalar::zeros(gs),
                                         DirichletBC::zeros(gs), gs, 1e-10, 60);
            (void)r;
        } catch (const NotContractingError&) {
            threshold = beta;
            break;
        }
    }

    const double dt = elapsed_s(t0);
    record("9. contraction solver (geometric; grid ratio 4 +/- 1; monotone sweep; "
           "non-contracting regime; < 120 s)",
           geometric && second_order && monotone && threshold > 0.0 && dt < 120.0,
           "grid_ratio=" + num(conv_ratio) + " sweep_ratios=" + ratios +
               " divergence_beta=" + num(threshold) + " time=" + num(dt) + "s");
}

// 10. Scaling: residual picks up lambda^3 (1e-6 relative); flux invariant.
void criterion_scaling() {
    FieldTriple t;
    t.u = std::make_shared<PoloidalField>(0.8, -0.3);
    t.B = std::make_shared<SwirlField>(SwirlProfile::Gauss, 1.1);
    t.p = std::make_shared<LambdaScalarField>(
        [](const Vec3& x) { return std::exp(-x.norm2()) * (1.0 + 0.3 * x.x); });

    std::mt19937_64 rng(10);
    double worst = 0.0;
    for (double lambda : {0.5, 2.0, 4.0}) {
        const FieldTriple s = scale_triple(t, lambda);
        const double l3 = lambda * lambda * lambda;
        for (int k = 0; k < 5; ++k) {
            const Vec3 x = random_point(rng, 0.2, 0.45);
            const auto rs = mhd_residual(s, x);
            const auto r = mhd_residual(t, x * lambda);
            worst = std::max(worst, (rs.momentum - r.momentum * l3).norm() /
                                        (1.0 + l3 * r.momentum.norm()));
        }
    }

    const FieldTriple lt = landau_triple({0, 0, 1});
    double flux_dev = 0.0;
    for (double lambda : {0.5, 2.0, 4.0}) {
        const FieldTriple s = scale_triple(lt, lambda);
        const Vec3 v =
            flux_integral(s, StressKind::T1, 1.0, sphere_quadrature(1.0, 64, 32)).value;
        flux_dev = std::max(flux_dev, (v - Vec3{0, 0, 1}).norm());
    }
    record("10. scaling law (residual lambda^3 within 1e-6; flux invariant within 1e-8)",
           worst < 1e-6 && flux_dev < 1e-8, "residual=" + num(worst) + " flux=" + num(flux_dev));
}

// 11. Decay fits: Landau alpha = 1; rho^-1/2 alpha = 0.5; solved induction
// field with bounded inner data reports alpha < 1.
void criterion_decay() {
    const LandauVelocityField u(LandauSolution::axis(1.0));
    const double a1 = decay_exponent_fit(u, {1.0, 0.6, 0.35, 0.2, 0.1}).alpha;

    const LambdaVectorField half([](const Vec3& x) {
        const double r = x.norm();
        return (x / r) / std::sqrt(r);
    });
    const double a2 = decay_exponent_fit(half, {1.0, 0.6, 0.35, 0.2, 0.1}).alpha;

    // converged solve with bounded inner Dirichlet data
    const AnnulusGrid g(0.05, 2.0, 128, 64);
    const LandauMeridional bg(0.5);
    DirichletBC bc = DirichletBC::zeros(g);
    for (int j = 0; j < g.n_phi; ++j) bc.inner[j] = 0.2 * std::sin(g.phi(j));
    auto res = contraction_iterate(bg, shell_forcing_grid(g, 1.0), GridScalar::zeros(g), bc, g,
                                   1e-10, 200);
    const GridSwirlField w(g, res.w);
    const double a3 = decay_exponent_fit(w, {0.5, 0.3, 0.18, 0.1, 0.05}, 32, 8).alpha;

    record("11. decay exponents (Landau 1.00 +/- 0.01; power 0.50 +/- 0.01; solution < 1)",
           std::abs(a1 - 1.0) < 0.01 && std::abs(a2 - 0.5) < 0.01 && res.history.converged &&
               a3 < 1.0,
           "landau=" + num(a1) + " sqrt=" + num(a2) + " solution=" + num(a3));
}

// 12. Weak-L3 norm of 1/|x| on the ball of radius 2 within 2%.
void criterion_weak_l3() {
    const double expect = 1.6119919540164696;  // (4 pi/3)^(1/3)
    const double got =
        weak_l3_norm([](const Vec3& x) { return 1.0 / x.norm(); }, 2.0, 1000000);
    const double rel = std::abs(got / expect - 1.0);
    record("12. weak-L3 of 1/|x| on B2 (within 2% of (4pi/3)^(1/3), 1e6 samples)", rel < 0.02,
           "value=" + num(got) + " rel=" + num(rel));
}

// 13. Determinism: identical config + seed give byte-identical CSV.
void criterion_determinism() {
#ifndef MHDLAB_CLI_PATH
    record("13. determinism (CLI byte-identical reruns)", false, "CLI path not configured");
#else
    namespace fs = std::filesystem;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const fs::path base = fs::temp_directory_path() / "mhdlab_acceptance_det";
    fs::remove_all(base);
    bool ok = true;
    for (const char* leg : {"a", "b"}) {
        const fs::path dir = base / leg;
        fs::create_directories(dir);
        std::ostringstream cmd;
        cmd << MHDLAB_CLI_PATH << " solve --betas 0.25,0.5 --grid 32x16 --tol 1e-9 --jobs 2"
            << " --out " << dir.string() << " > /dev/null 2>&1";
        ok = ok && std::system(cmd.str().c_str()) == 0;
        std::ostringstream cmd2;
        cmd2 << MHDLAB_CLI_PATH << " verify cor2 --profiles 8 --seed 17 --out "
             << (dir / "cor2.csv").string() << " > /dev/null 2>&1";
        ok = ok && std::system(cmd2.str().c_str()) == 0;
    }
    const bool sweep_same = slurp(base / "a" / "sweep.csv") == slurp(base / "b" / "sweep.csv");
    const bool sol_same = slurp(base / "a" / "solution_beta_0.25.csv") ==
                          slurp(base / "b" / "solution_beta_0.25.csv");
    const bool cor2_same = slurp(base / "a" / "cor2.csv") == slurp(base / "b" / "cor2.csv");
    const bool nonempty = !slurp(base / "a" / "sweep.csv").empty();
    record("13. determinism (CLI byte-identical reruns)",
           ok && nonempty && sweep_same && sol_same && cor2_same,
           std::string("sweep=") + (sweep_same ? "same" : "DIFF") + " solution=" +
               (sol_same ? "same" : "DIFF") + " cor2=" + (cor2_same ? "same" : "DIFF"));
    fs::remove_all(base);
#endif
}

}  // namespace

int main() {
    std::printf("acceptance suite\n----------------\n");
    criterion_roundtrip();
    criterion_pde_certificate();
    criterion_divergence_free();
    criterion_momentum_flux();
    criterion_dirac();
    criterion_vanishing();
    criterion_profile_identity();
    criterion_weak_form();
    criterion_contraction();
    criterion_scaling();
    criterion_decay();
    criterion_weak_l3();
    criterion_determinism();
    std::printf("----------------\n%s (%d failure%s)\n", g_failures == 0 ? "ALL PASS" : "FAILED",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
