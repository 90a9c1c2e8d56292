#include "mhdlab/stress.hpp"

#include <cmath>

#include "mhdlab/errors.hpp"

namespace mhdlab {

namespace {

void check_point(const Vec3& x) {
    if (x.norm2() == 0.0) throw ZeroPointError("stress tensor at the origin");
}

}  // namespace

Mat3 stress_t1(const FieldTriple& t, const Vec3& x) {
    check_point(x);
    if (!t.has_pressure()) throw MissingPressureError();
    const Vec3 u = t.u->value(x);
    const Vec3 B = t.B->value(x);
    const Mat3 gu = t.u->gradient(x);
    const double p = t.p->value(x);
    Mat3 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // gu(i,j) = d_j u^i, so d_i u^j = gu(j,i)
            T(i, j) = -gu(j, i) - gu(i, j) + u[i] * u[j] - B[i] * B[j] + (i == j ? p : 0.0);
        }
    return T;
}

Mat3 stress_t2(const FieldTriple& t, const Vec3& x) {
    check_point(x);
    const Vec3 u = t.u->value(x);
    const Vec3 B = t.B->value(x);
    const Mat3 gB = t.B->gradient(x);
    Mat3 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T(i, j) = -gB(i, j) + u[j] * B[i] - B[j] * u[i];
    return T;
}

namespace {

Vec3 flux_value(const FieldTriple& t, StressKind which, const QuadratureRule& quad) {
    Vec3 v;
    for (const auto& node : quad.nodes) {
        const Mat3 T =
            (which == StressKind::T1) ? stress_t1(t, node.point) : stress_t2(t, node.point);
        v += (T * node.normal) * node.weight;
    }
    return v;
}

}  // namespace

FluxReport flux_integral(const FieldTriple& t, StressKind which, double R,
                         const QuadratureRule& quad) {
    if (R <= 0.0) throw ZeroRadiusError("flux_integral: R <= 0");
    if (R >= t.domain_radius)
        throw DomainExceededError("flux_integral: R outside the field domain");
    if (std::abs(quad.radius - R) > 1e-12 * std::max(1.0, R))
        throw QuadratureMismatchError();

    FluxReport report;
    report.radius = R;
    report.n_phi = quad.n_phi;
    report.n_theta = quad.n_theta;
    report.value = flux_value(t, which, quad);
    const QuadratureRule finer = sphere_quadrature(R, quad.n_phi + 4, quad.n_theta + 4);
    report.quadrature_error = (flux_value(t, which, finer) - report.value).norm();
    return report;
}

VanishingCheckResult vanishing_check(const FieldTriple& t, double R, const QuadratureRule& quad) {
    if (std::abs(quad.radius - R) > 1e-12 * std::max(1.0, R))
        throw QuadratureMismatchError();
    VanishingCheckResult res;
    double scale = 0.0;
    Vec3 v;
    for (const auto& node : quad.nodes) {
        const Mat3 T = stress_t2(t, node.point);
        scale = std::max(scale, T.max_abs());
        v += (T * node.normal) * node.weight;
    }
    res.value = v;
    res.tol = 1e-8 * (1.0 + R * R * scale);
    res.pass = v.norm() <= res.tol;
    return res;
}

// ---------------------------------------------------------------------------

namespace {

struct ShellRule {
    std::vector<double> radii;
    std::vector<double> radial_weights;  // include the r^2 Jacobian
    QuadratureRule directions;           // unit sphere
};

ShellRule build_shell_rule(const ShellQuadratureSpec& spec, int n_shells) {
    ShellRule rule;
    rule.directions = sphere_quadrature(1.0, spec.n_phi, spec.n_theta);
    const double lo = spec.inner_radius, hi = spec.outer_radius;
    const double dr = (hi - lo) / n_shells;
    for (int s = 0; s < n_shells; ++s) {
        const GaussLegendre gl =
            gauss_legendre(spec.points_per_shell, lo + s * dr, lo + (s + 1) * dr);
        for (int k = 0; k < spec.points_per_shell; ++k) {
            rule.radii.push_back(gl.nodes[k]);
            rule.radial_weights.push_back(gl.weights[k] * gl.nodes[k] * gl.nodes[k]);
        }
    }
    return rule;
}

struct WeakPair {
    double momentum = 0.0;
    double induction = 0.0;
};

WeakPair weak_integrals(const FieldTriple& t, const VectorField& zeta, const ShellRule& rule) {
    WeakPair out;
    for (size_t r = 0; r < rule.radii.size(); ++r) {
        const double rad = rule.radii[r], wr = rule.radial_weights[r];
        for (const auto& dir : rule.directions.nodes) {
            const Vec3 x = dir.normal * rad;
            const Vec3 lz = zeta.laplacian(x);
            const Mat3 gz = zeta.gradient(x);
            const Vec3 u = t.u->value(x);
            const Vec3 B = t.B->value(x);
            const double w = wr * dir.weight;
            // gz(i,j) = d_j zeta^i; sum u^j v^i d_j zeta^i = v . (gz u)
            out.momentum += w * (-dot(u, lz) - dot(u, gz * u) + dot(B, gz * B));
            out.induction += w * (-dot(B, lz) - dot(B, gz * u) + dot(u, gz * B));
        }
    }
    return out;
}

}  // namespace

WeakFormResult weak_form_residual(const FieldTriple& t, const VectorField& zeta,
                                  const ShellQuadratureSpec& spec) {
    // Sample div zeta on a few spheres before integrating anything.
    const QuadratureRule probe = sphere_quadrature(1.0, 6, 8);
    for (double rad : {0.3, 0.7, 1.1, 1.6}) {
        for (const auto& n : probe.nodes) {
            const Vec3 x = n.normal * rad;
            const Mat3 g = zeta.gradient(x);
            if (std::abs(g.trace()) > 1e-8 * (1.0 + g.max_abs()))
                throw TestFieldNotDivergenceFreeError();
        }
    }

    const WeakPair coarse = weak_integrals(t, zeta, build_shell_rule(spec, spec.n_shells));
    const WeakPair fine = weak_integrals(t, zeta, build_shell_rule(spec, 2 * spec.n_shells));
    WeakFormResult res;
    res.momentum = fine.momentum;
    res.induction = fine.induction;
    res.momentum_error = std::abs(fine.momentum - coarse.momentum);
    res.induction_error = std::abs(fine.induction - coarse.induction);
    return res;
}

// ---------------------------------------------------------------------------

BumpCrossField::BumpCrossField(const Vec3& axis, const Vec3& center, double t_lo, double t_hi,
                               double amplitude)
    : axis_(axis), center_(center), t_lo_(t_lo), t_hi_(t_hi), amp_(amplitude) {
    if (!(t_hi > t_lo)) throw DomainError("BumpCrossField: empty support window");
}

double BumpCrossField::g(double t) const {
    if (t <= t_lo_ || t >= t_hi_) return 0.0;
    const double s = (2.0 * t - (t_hi_ + t_lo_)) / (t_hi_ - t_lo_);
    const double q = 1.0 - s * s;
    return amp_ * q * q * q * q;
}

double BumpCrossField::g1(double t) const {
    if (t <= t_lo_ || t >= t_hi_) return 0.0;
    const double m = 2.0 / (t_hi_ - t_lo_);
    const double s = (2.0 * t - (t_hi_ + t_lo_)) / (t_hi_ - t_lo_);
    const double q = 1.0 - s * s;
    return amp_ * m * (-8.0 * s * q * q * q);
}

double BumpCrossField::g2(double t) const {
    if (t <= t_lo_ || t >= t_hi_) return 0.0;
    const double m = 2.0 / (t_hi_ - t_lo_);
    const double s = (2.0 * t - (t_hi_ + t_lo_)) / (t_hi_ - t_lo_);
    const double q = 1.0 - s * s;
    return amp_ * m * m * (-8.0 * q * q * q + 48.0 * s * s * q * q);
}

Vec3 BumpCrossField::value(const Vec3& x) const {
    const Vec3 r = x - center_;
    return cross(axis_, r) * (2.0 * g(r.norm2()));
}

Mat3 BumpCrossField::gradient(const Vec3& x) const {
    const Vec3 r = x - center_;
    const double t = r.norm2();
    const Vec3 ar = cross(axis_, r);
    const double gp = g1(t), gv = g(t);
    Mat3 m;
    for (int l = 0; l < 3; ++l) {
        Vec3 el;
        el[l] = 1.0;
        const Vec3 ael = cross(axis_, el);
        for (int i = 0; i < 3; ++i) m(i, l) = 4.0 * gp * r[l] * ar[i] + 2.0 * gv * ael[i];
    }
    return m;
}

Vec3 BumpCrossField::laplacian(const Vec3& x) const {
    const Vec3 r = x - center_;
    const double t = r.norm2();
    return cross(axis_, r) * (8.0 * g2(t) * t + 20.0 * g1(t));
}

BumpCrossField divfree_test_field_through_origin(const Vec3& v0) {
    const double mag = v0.norm();
    if (mag == 0.0) throw DomainError("test field: v0 must be nonzero");
    const Vec3 dir = v0 / mag;
    // Any unit vector orthogonal to dir.
    Vec3 u = std::abs(dir.x) < 0.9 ? cross(dir, Vec3{1, 0, 0}) : cross(dir, Vec3{0, 1, 0});
    u = u / u.norm();
    const Vec3 a = cross(dir, u);  // u x a = dir
    const Vec3 center = u * 0.4;
    const double t_hi = 0.81;  // support |x - c| < 0.9, inside |x| < 1.3
    BumpCrossField probe(a, center, 0.0, t_hi, 1.0);
    const double g_at_origin = probe.value(Vec3{}).norm() / (2.0 * 0.4);  // = g(|c|^2)
    // zeta(0) = 2 g(0.16) * 0.4 * (u x a); scale to match |v0|.
    return BumpCrossField(a, center, 0.0, t_hi, mag / (0.8 * g_at_origin));
}

// ---------------------------------------------------------------------------

std::vector<Vec3> dirac_mass_limit(const FieldTriple& t, const ScalarField& test,
                                   const std::vector<double>& eps_list, int n_phi, int n_theta) {
    std::vector<Vec3> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (eps <= 0.0) throw ZeroRadiusError("dirac_mass_limit: eps <= 0");
        if (eps >= t.domain_radius)
            throw DomainExceededError("dirac_mass_limit: eps outside the field domain");
        const QuadratureRule rule = sphere_quadrature(eps, n_phi, n_theta);
        Vec3 v;
        for (const auto& node : rule.nodes) {
            const Mat3 T = stress_t1(t, node.point);
            v += (T * node.normal) * (node.weight * test.value(node.point));
        }
        out.push_back(v);
    }
    return out;
}

double swirl_profile_identity(const std::function<double(double)>& profile,
                               const std::function<double(double)>& profile_derivative,
                               int n_nodes) {
    const GaussLegendre gl = gauss_legendre(n_nodes, 0.0, M_PI);
    double s = 0.0;
    for (int k = 0; k < n_nodes; ++k) {
        const double phi = gl.nodes[k];
        const double c = std::cos(phi), sn = std::sin(phi);
        s += gl.weights[k] *
             (profile(phi) * (c * c - sn * sn) + profile_derivative(phi) * sn * c);
    }
    return s;
}

double swirl_profile_identity(const std::function<double(double)>& profile, int n_nodes) {
    const double h = 1e-6;
    return swirl_profile_identity(
        profile, [&](double phi) { return (profile(phi + h) - profile(phi - h)) / (2.0 * h); },
        n_nodes);
}

}  // namespace mhdlab
