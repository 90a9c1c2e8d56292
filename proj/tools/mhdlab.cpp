// Command-line front door: Landau evaluation, flux/identity verification,
// the contraction solver, and decay diagnostics. Every file written is CSV
// with a '# key=value' metadata block; identical config + seed gives
// byte-identical output.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mhdlab/asymptotics.hpp"
#include "mhdlab/catalog.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/fieldspec.hpp"
#include "mhdlab/induction.hpp"
#include "mhdlab/io.hpp"
#include "mhdlab/landau.hpp"
#include "mhdlab/runconfig.hpp"
#include "mhdlab/stress.hpp"

using namespace mhdlab;

namespace {

constexpr const char* kVersion = "mhdlab 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerifyFailed = 4;
constexpr int kExitSolver = 5;

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ParseError(std::string("invalid ") + what + " entry '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what + " list");
    return out;
}

std::pair<int, int> parse_orders(const std::string& text) {
    const auto v = parse_double_list(text, "orders");
    if (v.size() != 2) throw ParseError("orders must be 'n_phi,n_theta'");
    return {static_cast<int>(v[0]), static_cast<int>(v[1])};
}

std::string out_path(const RunConfig& cfg, const std::string& filename) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.effective_output_dir());
    fs::create_directories(dir);
    return (dir / filename).string();
}

void echo_config(CsvWriter& w, const RunConfig& cfg) {
    w.meta("version", kVersion);
    w.meta("seed", static_cast<double>(cfg.seed));
    w.meta("quad_n_phi", static_cast<double>(cfg.quad_n_phi));
    w.meta("quad_n_theta", static_cast<double>(cfg.quad_n_theta));
}

// ---------------------------------------------------------------------------

int cmd_landau_eval(double beta, const std::string& dir_text, const std::string& point_text) {
    Vec3 b{0.0, 0.0, beta};
    if (!dir_text.empty()) {
        const auto d = parse_double_list(dir_text, "direction");
        if (d.size() != 3) throw ParseError("direction must be 'bx,by,bz'");
        Vec3 dir{d[0], d[1], d[2]};
        if (dir.norm() == 0.0) throw ParseError("direction must be nonzero");
        b = dir / dir.norm() * beta;
    }
    const auto p = parse_double_list(point_text, "point");
    if (p.size() != 3) throw ParseError("point must be 'x,y,z'");
    const Vec3 x{p[0], p[1], p[2]};

    const LandauSolution sol = LandauSolution::from_b(b);
    const auto [U, P] = sol.eval(x);
    const Vec3 res = sol.ns_residual(x);
    const double scale = std::pow(x.norm(), 3);

    std::printf("point          %s %s %s\n", format_double(x.x).c_str(),
                format_double(x.y).c_str(), format_double(x.z).c_str());
    std::printf("b              %s %s %s\n", format_double(b.x).c_str(),
                format_double(b.y).c_str(), format_double(b.z).c_str());
    std::printf("a              %s\n",
                std::isinf(sol.a()) ? "inf" : format_double(sol.a()).c_str());
    std::printf("U              %s %s %s\n", format_double(U.x).c_str(),
                format_double(U.y).c_str(), format_double(U.z).c_str());
    std::printf("P              %s\n", format_double(P).c_str());
    std::printf("residual_norm  %s\n", format_double(res.norm()).c_str());
    std::printf("residual_scaled %s\n", format_double(res.norm() * scale).c_str());
    std::printf("div_u          %s\n", format_double(sol.velocity_gradient(x).trace()).c_str());
    return kExitOk;
}

int cmd_landau_solve_a(double beta) {
    const double a = a_of_beta(beta);
    std::printf("beta  %s\n", format_double(beta).c_str());
    std::printf("a     %s\n", std::isinf(a) ? "inf" : format_double(a).c_str());
    if (!std::isinf(a))
        std::printf("check |beta(a)-beta| = %s\n",
                    format_double(std::abs(beta_of_a(a) - beta)).c_str());
    return kExitOk;
}

// ---------------------------------------------------------------------------

int verify_flux(const FieldSpec& spec, const std::vector<double>& radii, int n_phi, int n_theta,
                double tol, const RunConfig& cfg, const std::string& out_file) {
    const FieldTriple t = spec_triple(spec);
    CsvWriter w(out_path(cfg, out_file));
    echo_config(w, cfg);
    w.meta("field", spec.describe());
    w.meta("check", "momentum flux radius independence");
    w.header({"radius", "flux_x", "flux_y", "flux_z", "quad_error"});

    std::vector<Vec3> values;
    for (double R : radii) {
        const QuadratureRule q = sphere_quadrature(R, n_phi, n_theta);
        const FluxReport fr = flux_integral(t, StressKind::T1, R, q);
        values.push_back(fr.value);
        w.row({R, fr.value.x, fr.value.y, fr.value.z, fr.quadrature_error});
    }
    double spread = 0.0;
    for (const Vec3& v : values) spread = std::max(spread, (v - values.front()).norm());
    bool pass = spread < tol;
    if (spec.kind == FieldSpec::Kind::Landau) {
        const Vec3 b = spec.direction.value_or(Vec3{0, 0, 1}) * spec.beta;
        for (const Vec3& v : values) pass = pass && (v - b).norm() < tol;
    }
    w.meta("spread", spread);
    w.meta("pass", pass ? "true" : "false");
    w.close();
    std::printf("[%s] flux: spread=%s over %zu radii (tol %s)\n", pass ? "PASS" : "FAIL",
                format_double(spread).c_str(), radii.size(), format_double(tol).c_str());
    return pass ? kExitOk : kExitVerifyFailed;
}

int verify_vanishing(const FieldSpec& field, const FieldSpec& velocity, double R, int n_phi,
                     int n_theta, const RunConfig& cfg, const std::string& out_file) {
    const FieldTriple t = spec_triple_with_velocity(field, velocity);
    const QuadratureRule q = sphere_quadrature(R, n_phi, n_theta);
    const VanishingCheckResult res = vanishing_check(t, R, q);

    CsvWriter w(out_path(cfg, out_file));
    echo_config(w, cfg);
    w.meta("field", field.describe());
    w.meta("velocity", velocity.describe());
    w.meta("check", "induction flux vanishing");
    w.header({"radius", "value_x", "value_y", "value_z", "norm", "tol"});
    w.row({R, res.value.x, res.value.y, res.value.z, res.value.norm(), res.tol});
    w.meta("pass", res.pass ? "true" : "false");
    w.close();
    std::printf("[%s] vanishing: |value|=%s (tol %s)\n", res.pass ? "PASS" : "FAIL",
                format_double(res.value.norm()).c_str(), format_double(res.tol).c_str());
    return res.pass ? kExitOk : kExitVerifyFailed;
}

int verify_weak(const FieldSpec& spec, int n_tests, std::uint64_t seed, double tol,
                const RunConfig& cfg, const std::string& out_file) {
    const FieldTriple t = spec_triple(spec);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> tlo(0.3, 0.8);
    std::uniform_real_distribution<double> wid(0.3, 1.2);
    std::uniform_real_distribution<double> amp(0.5, 2.0);

    CsvWriter w(out_path(cfg, out_file));
    echo_config(w, cfg);
    w.meta("field", spec.describe());
    w.meta("check", "weak-form residual against divergence-free test fields");
    w.header({"test", "momentum", "momentum_error", "induction", "induction_error"});

    bool pass = true;
    for (int k = 0; k < n_tests; ++k) {
        Vec3 axis{unit(rng), unit(rng), unit(rng)};
        if (axis.norm() < 1e-3) axis = {1, 0, 0};
        axis = axis / axis.norm();
        // radial bump shell with support in 0.5 < |x| < 1.5
        const double lo = tlo(rng);
        const double hi = std::min(lo + wid(rng), 2.2);
        const BumpCrossField zeta(axis, Vec3{}, lo, hi, amp(rng));
        const WeakFormResult res = weak_form_residual(t, zeta);
        w.row({static_cast<double>(k), res.momentum, res.momentum_error, res.induction,
               res.induction_error});
        pass = pass && std::abs(res.momentum) < tol && std::abs(res.induction) < tol;
    }
    w.meta("pass", pass ? "true" : "false");
    w.close();
    std::printf("[%s] weak form: %d off-origin test fields (tol %s)\n", pass ? "PASS" : "FAIL",
                n_tests, format_double(tol).c_str());
    return pass ? kExitOk : kExitVerifyFailed;
}

int verify_dirac(const FieldSpec& spec, const std::vector<double>& eps_list, int n_phi,
                 int n_theta, const RunConfig& cfg, const std::string& out_file) {
    const FieldTriple t = spec_triple(spec);
    if (spec.kind != FieldSpec::Kind::Landau)
        throw DomainError("dirac check needs a landau field (known point force)");
    const Vec3 b = spec.direction.value_or(Vec3{0, 0, 1}) * spec.beta;

    // Test function equal to 1 + x3 near the origin (cut off smoothly), so the
    // deviation from b is exactly first order in eps.
    const RadialCutoff cut{0.4, 0.8};
    const LambdaScalarField test(
        [cut](const Vec3& x) { return (1.0 + x.z) * cut.value(x.norm()); });
    const auto values = dirac_mass_limit(t, test, eps_list, n_phi, n_theta);

    CsvWriter w(out_path(cfg, out_file));
    echo_config(w, cfg);
    w.meta("field", spec.describe());
    w.meta("check", "point-mass limit of the stress flux");
    w.header({"eps", "value_x", "value_y", "value_z", "deviation"});
    std::vector<double> dev;
    for (size_t k = 0; k < eps_list.size(); ++k) {
        dev.push_back((values[k] - b).norm());
        w.row({eps_list[k], values[k].x, values[k].y, values[k].z, dev.back()});
    }
    bool pass = true;
    for (size_t k = 0; k + 1 < dev.size(); ++k) {
        if (dev[k + 1] <= 0.0) continue;
        // deviation shrinks like eps: ratio tracks the radius ratio
        const double halving = eps_list[k] / eps_list[k + 1];
        const double ratio = dev[k] / dev[k + 1];
        pass = pass && ratio > halving - 0.4 * halving && ratio < halving + 0.4 * halving;
    }
    w.meta("pass", pass ? "true" : "false");
    w.close();
    std::printf("[%s] dirac: deviations", pass ? "PASS" : "FAIL");
    for (double d : dev) std::printf(" %s", format_double(d).c_str());
    std::printf("\n");
    return pass ? kExitOk : kExitVerifyFailed;
}

int verify_cor2(int n_profiles, std::uint64_t seed, const RunConfig& cfg,
                const std::string& out_file) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);

    CsvWriter w(out_path(cfg, out_file));
    echo_config(w, cfg);
    w.meta("check", "swirl profile integral identity over [0, pi]");
    w.header({"profile", "integral"});
    bool pass = true;
    for (int k = 0; k < n_profiles; ++k) {
        std::array<double, 7> c;
        for (double& v : c) v = coef(rng);
        auto poly = [c](double phi) {
            double s = 0.0;
            for (int d = 6; d >= 0; --d) s = s * phi + c[d];
            return s;
        };
        auto dpoly = [c](double phi) {
            double s = 0.0;
            for (int d = 6; d >= 1; --d) s = s * phi + d * c[d];
            return s;
        };
        const double val = swirl_profile_identity(poly, dpoly);
        w.row({static_cast<double>(k), val});
        pass = pass && std::abs(val) < 1e-10;
    }
    w.meta("pass", pass ? "true" : "false");
    w.close();
    std::printf("[%s] cor2: %d random degree-6 profiles, all |integral| < 1e-10\n",
                pass ? "PASS" : "FAIL", n_profiles);
    return pass ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------

struct SweepRow {
    double beta = 0.0;
    bool converged = false;
    bool not_contracting = false;
    int iterations = 0;
    double ratio = 0.0;
    double final_residual = 0.0;
    double w1q = 0.0;
    GridScalar solution;
};

SweepRow run_one_beta(double beta, const RunConfig& cfg, double inner_amp) {
    const AnnulusGrid grid(cfg.rho_min, cfg.rho_max, cfg.grid_n_rho, cfg.grid_n_phi);
    const LandauMeridional u(beta);
    const GridScalar f = shell_forcing_grid(grid, 1.0);
    DirichletBC bc = DirichletBC::zeros(grid);
    for (int j = 0; j < grid.n_phi; ++j) bc.inner[j] = inner_amp * std::sin(grid.phi(j));

    GridScalar w0 = GridScalar::zeros(grid);
    SweepRow row;
    row.beta = beta;
    try {
        auto res = contraction_iterate(u, f, w0, bc, grid, cfg.tol, cfg.max_iter);
        row.converged = res.history.converged;
        row.iterations = res.history.iterations();
        row.ratio = res.history.asymptotic_ratio();
        row.final_residual = res.history.final_residual;
        row.w1q = grid_w1q_norm(res.w, grid, 2.0);
        row.solution = std::move(res.w);
    } catch (const NotContractingError& e) {
        row.not_contracting = true;
        row.iterations = e.history.iterations();
        row.ratio = e.history.asymptotic_ratio();
    }
    return row;
}

int cmd_solve(const RunConfig& cfg, bool manufactured, double inner_amp, int jobs) {
    if (manufactured) {
        // Error-vs-h table under simultaneous grid doubling.
        CsvWriter w(out_path(cfg, "manufactured.csv"));
        echo_config(w, cfg);
        w.meta("check", "manufactured-solution grid convergence");
        w.header({"n_rho", "n_phi", "max_error", "ratio_vs_previous"});
        double prev = 0.0;
        int nr = std::max(8, cfg.grid_n_rho / 4), np = std::max(8, cfg.grid_n_phi / 4);
        for (int level = 0; level < 3; ++level, nr *= 2, np *= 2) {
            const AnnulusGrid grid(cfg.rho_min, cfg.rho_max, nr, np);
            const LandauMeridional u(cfg.beta_sweep.front());
            const GridScalar f = manufactured_forcing(u, grid);
            auto res = contraction_iterate(u, f, GridScalar::zeros(grid),
                                           DirichletBC::zeros(grid), grid, cfg.tol, cfg.max_iter);
            const double err = (res.w - manufactured_solution_grid(grid)).max_abs();
            w.row({static_cast<double>(nr), static_cast<double>(np), err,
                   prev > 0.0 ? prev / err : 0.0});
            prev = err;
        }
        w.close();
        std::printf("manufactured convergence table written\n");
        return kExitOk;
    }

    // One solve per worker, at most `jobs` in flight, no shared mutable state.
    const size_t workers = static_cast<size_t>(std::max(1, jobs));
    std::vector<std::future<SweepRow>> futures(cfg.beta_sweep.size());
    for (size_t base = 0; base < cfg.beta_sweep.size(); base += workers) {
        const size_t end = std::min(base + workers, cfg.beta_sweep.size());
        for (size_t k = base; k < end; ++k)
            futures[k] =
                std::async(std::launch::async, run_one_beta, cfg.beta_sweep[k], cfg, inner_amp);
        for (size_t k = base; k < end; ++k) futures[k].wait();
    }

    CsvWriter w(out_path(cfg, "sweep.csv"));
    echo_config(w, cfg);
    w.meta("grid", std::to_string(cfg.grid_n_rho) + "x" + std::to_string(cfg.grid_n_phi));
    w.meta("rho_min", cfg.rho_min);
    w.meta("tol", cfg.tol);
    w.header({"beta", "converged", "not_contracting", "iterations", "contraction_ratio",
              "final_residual", "w1q_norm"});
    for (size_t k = 0; k < futures.size(); ++k) {
        SweepRow row = futures[k].get();
        w.row({row.beta, row.converged ? 1.0 : 0.0, row.not_contracting ? 1.0 : 0.0,
               static_cast<double>(row.iterations), row.ratio, row.final_residual, row.w1q});
        if (row.converged) {
            const AnnulusGrid grid(cfg.rho_min, cfg.rho_max, cfg.grid_n_rho, cfg.grid_n_phi);
            std::ostringstream name;
            name << "solution_beta_" << row.beta << ".csv";
            write_grid_csv(out_path(cfg, name.str()), grid, row.solution,
                           {{"beta", format_double(row.beta)}});
        }
        std::printf("beta=%-8s %s ratio=%s\n", format_double(row.beta).c_str(),
                    row.not_contracting ? "NOT-CONTRACTING"
                                        : (row.converged ? "converged" : "max-iter"),
                    format_double(row.ratio).c_str());
    }
    w.close();
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_asymptotics(const FieldSpec& spec, std::vector<double> radii, double q, int n_phi,
                    int n_theta, const RunConfig& cfg, const std::string& out_file) {
    const auto field = spec_vector_field(spec);
    const DecayProfile prof = decay_exponent_fit(*field, std::move(radii), n_phi, n_theta);
    const double bound = pointwise_bound_profile(*field, q, prof.radii, n_phi, n_theta);

    CsvWriter w(out_path(cfg, out_file));
    echo_config(w, cfg);
    w.meta("field", spec.describe());
    w.meta("alpha", prof.alpha);
    w.meta("fit_residual", prof.fit_residual);
    w.meta("q", q);
    w.meta("weighted_sup", bound);
    w.header({"radius", "sup_value"});
    for (size_t k = 0; k < prof.radii.size(); ++k) w.row({prof.radii[k], prof.sup_values[k]});
    w.close();
    std::printf("alpha=%s fit_residual=%s weighted_sup(q=%s)=%s\n",
                format_double(prof.alpha).c_str(), format_double(prof.fit_residual).c_str(),
                format_double(q).c_str(), format_double(bound).c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for point singularities of stationary MHD flows"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value run configuration file");

    // landau
    auto* landau = app.add_subcommand("landau", "evaluate the Landau solution family");
    landau->require_subcommand(1);
    auto* leval = landau->add_subcommand("eval", "evaluate U, P and the residual at a point");
    double beta = 1.0;
    std::string dir_text, point_text = "1,0,0";
    leval->add_option("--beta", beta, "momentum-flux magnitude |b|");
    leval->add_option("--dir", dir_text, "direction of b as 'bx,by,bz' (default +z)");
    leval->add_option("--point", point_text, "evaluation point 'x,y,z'")->required();
    auto* lsolve = landau->add_subcommand("solve-a", "invert beta -> a");
    lsolve->add_option("--beta", beta, "momentum-flux magnitude")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run one of the identity checks");
    verify->require_subcommand(1);
    std::string field_text = "landau:1", u_text = "zero", radii_text = "0.25,0.5,1,1.5";
    std::string orders_text = "64,32", out_file = "verify.csv", eps_text = "0.2,0.1,0.05";
    double radius = 1.0, flux_tol = 1e-8, weak_tol = 1e-6;
    int n_tests = 10, n_profiles = 20;
    std::uint64_t seed = 12345;

    auto* vflux = verify->add_subcommand("flux", "momentum-flux radius independence");
    vflux->add_option("--field", field_text, "field spec");
    vflux->add_option("--radii", radii_text, "comma list of radii");
    vflux->add_option("--orders", orders_text, "quadrature orders 'n_phi,n_theta'");
    vflux->add_option("--tol", flux_tol, "pass tolerance");
    vflux->add_option("--out", out_file, "output CSV name");

    auto* vvan = verify->add_subcommand("vanishing", "induction flux vanishing");
    vvan->add_option("--field", field_text, "magnetic field spec");
    vvan->add_option("--u", u_text, "background velocity spec");
    vvan->add_option("--radius", radius, "sphere radius");
    vvan->add_option("--orders", orders_text, "quadrature orders");
    vvan->add_option("--out", out_file, "output CSV name");

    auto* vweak = verify->add_subcommand("weak", "weak-form residual");
    vweak->add_option("--field", field_text, "field spec");
    vweak->add_option("--tests", n_tests, "number of random test fields");
    vweak->add_option("--seed", seed, "random seed");
    vweak->add_option("--tol", weak_tol, "pass tolerance");
    vweak->add_option("--out", out_file, "output CSV name");

    auto* vdirac = verify->add_subcommand("dirac", "point-mass limit of the stress flux");
    vdirac->add_option("--field", field_text, "landau field spec");
    vdirac->add_option("--eps", eps_text, "decreasing radii");
    vdirac->add_option("--orders", orders_text, "quadrature orders");
    vdirac->add_option("--out", out_file, "output CSV name");

    auto* vcor2 = verify->add_subcommand("cor2", "profile integral identity");
    vcor2->add_option("--profiles", n_profiles, "number of random profiles");
    vcor2->add_option("--seed", seed, "random seed");
    vcor2->add_option("--out", out_file, "output CSV name");

    // solve
    auto* solve = app.add_subcommand("solve", "contraction solver sweeps");
    std::string betas_text, grid_text, solve_out = ".";
    double rho_min_flag = -1.0, tol_flag = -1.0, inner_amp = 0.0;
    int max_iter_flag = -1, jobs = 4;
    bool manufactured = false;
    double rho_max_flag = -1.0;
    solve->add_option("--betas", betas_text, "comma list of beta values");
    solve->add_option("--grid", grid_text, "grid as 'NRxNP'");
    solve->add_option("--rho-min", rho_min_flag, "inner radius");
    solve->add_option("--rho-max", rho_max_flag, "outer radius");
    solve->add_option("--tol", tol_flag, "iteration tolerance");
    solve->add_option("--max-iter", max_iter_flag, "iteration cap");
    solve->add_option("--inner-bc", inner_amp, "inner Dirichlet amplitude (times sin phi)");
    solve->add_option("--out", solve_out, "output directory");
    solve->add_option("--jobs", jobs, "parallel solves");
    solve->add_flag("--manufactured", manufactured, "grid-convergence study instead of sweep");

    // asymptotics
    auto* asym = app.add_subcommand("asymptotics", "decay-exponent fit and weighted sup");
    std::string aradii_text = "1,0.6,0.35,0.2,0.1", asym_out = "decay.csv";
    double q = 1.5;
    asym->add_option("--field", field_text, "field spec");
    asym->add_option("--radii", aradii_text, "comma list of radii (>= 4, one decade)");
    asym->add_option("--q", q, "weight exponent parameter in (1,3)");
    asym->add_option("--orders", orders_text, "sphere sampling orders");
    asym->add_option("--out", asym_out, "output CSV name");

    try {
        app.parse(argc, argv);

        RunConfig cfg;
        if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
        cfg.seed = seed;

        if (leval->parsed()) return cmd_landau_eval(beta, dir_text, point_text);
        if (lsolve->parsed()) return cmd_landau_solve_a(beta);

        if (verify->parsed()) {
            const auto [n_phi, n_theta] = parse_orders(orders_text);
            cfg.quad_n_phi = n_phi;
            cfg.quad_n_theta = n_theta;
            if (vflux->parsed())
                return verify_flux(parse_field_spec(field_text),
                                   parse_double_list(radii_text, "radii"), n_phi, n_theta,
                                   flux_tol, cfg, out_file);
            if (vvan->parsed())
                return verify_vanishing(parse_field_spec(field_text), parse_field_spec(u_text),
                                        radius, n_phi, n_theta, cfg, out_file);
            if (vweak->parsed())
                return verify_weak(parse_field_spec(field_text), n_tests, seed, weak_tol, cfg,
                                   out_file);
            if (vdirac->parsed())
                return verify_dirac(parse_field_spec(field_text),
                                    parse_double_list(eps_text, "eps"), n_phi, n_theta, cfg,
                                    out_file);
            if (vcor2->parsed()) return verify_cor2(n_profiles, seed, cfg, out_file);
        }

        if (solve->parsed()) {
            if (!betas_text.empty()) cfg.beta_sweep = parse_double_list(betas_text, "betas");
            if (!grid_text.empty()) {
                const auto xpos = grid_text.find('x');
                if (xpos == std::string::npos) throw ParseError("grid must be 'NRxNP'");
                cfg.grid_n_rho = std::stoi(grid_text.substr(0, xpos));
                cfg.grid_n_phi = std::stoi(grid_text.substr(xpos + 1));
            }
            if (rho_min_flag > 0.0) cfg.rho_min = rho_min_flag;
            if (rho_max_flag > 0.0) cfg.rho_max = rho_max_flag;
            if (tol_flag > 0.0) cfg.tol = tol_flag;
            if (max_iter_flag > 0) cfg.max_iter = max_iter_flag;
            if (solve->count("--out") > 0 || cfg.output_dir.empty()) cfg.output_dir = solve_out;
            return cmd_solve(cfg, manufactured, inner_amp, jobs);
        }

        if (asym->parsed())
            return cmd_asymptotics(parse_field_spec(field_text),
                                   parse_double_list(aradii_text, "radii"), q, cfg.quad_n_phi,
                                   cfg.quad_n_theta, cfg, asym_out);

        return kExitOk;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitDomain;
    } catch (const SolverFailure& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return kExitSolver;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
