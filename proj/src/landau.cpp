#include "mhdlab/landau.hpp"

#include <algorithm>
#include <cmath>

namespace mhdlab {

namespace {

constexpr double kSixteenPi = 16.0 * M_PI;
// Below a = kSeriesCutover the closed form is accurate; above it the
// bracketed terms cancel to O(1/a) of themselves and the series takes over.
constexpr double kSeriesCutover = 10.0;
constexpr int kSeriesTerms = 13;  // remainder ~ a^-27 at the cutover
constexpr double kABracketMax = 1e8;

double beta_series(double a) {
    // beta/16pi = sum_{k>=0} (4/3 - 1/(2k+3)) a^-(2k+1)
    const double ia2 = 1.0 / (a * a);
    double term = 1.0 / a;
    double s = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
        s += (4.0 / 3.0 - 1.0 / (2.0 * k + 3.0)) * term;
        term *= ia2;
    }
    return kSixteenPi * s;
}

double beta_series_derivative(double a) {
    const double ia2 = 1.0 / (a * a);
    double term = ia2;
    double s = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
        s -= (2.0 * k + 1.0) * (4.0 / 3.0 - 1.0 / (2.0 * k + 3.0)) * term;
        term *= ia2;
    }
    return kSixteenPi * s;
}

void check_a(double a) {
    if (!(a > 1.0)) throw DomainError("beta_of_a: a must be > 1");
}

}  // namespace

double beta_of_a(double a) {
    check_a(a);
    if (std::isinf(a)) return 0.0;
    if (a >= kSeriesCutover) return beta_series(a);
    const double log_ratio = std::log1p(-2.0 / (a + 1.0));  // log((a-1)/(a+1))
    return kSixteenPi * (a + 0.5 * a * a * log_ratio + 4.0 * a / (3.0 * (a * a - 1.0)));
}

double beta_of_a_derivative(double a) {
    check_a(a);
    if (std::isinf(a)) return 0.0;
    if (a >= kSeriesCutover) return beta_series_derivative(a);
    const double log_ratio = std::log1p(-2.0 / (a + 1.0));
    const double a2m1 = a * a - 1.0;
    return kSixteenPi *
           (1.0 + a * log_ratio + a * a / a2m1 - 4.0 * (a * a + 1.0) / (3.0 * a2m1 * a2m1));
}

double a_of_beta(double beta) {
    if (!(beta >= 0.0)) throw DomainError("a_of_beta: beta must be >= 0");
    if (beta < beta_of_a(kABracketMax)) return kLandauAInfinity;

    // The map is strictly decreasing, so bisection is unconditionally safe.
    double lo = 1.0 + 1e-12, hi = kABracketMax;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (beta_of_a(mid) > beta)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-14) break;
    }
    double a = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        const double d = beta_of_a_derivative(a);
        if (d == 0.0) break;
        const double step = (beta_of_a(a) - beta) / d;
        const double next = a - step;
        if (next > 1.0 && next < 2.0 * kABracketMax) a = next;
    }
    return a;
}

LandauAxisSample landau_axis_eval(double a, double rho, double phi) {
    if (!(rho > 0.0)) throw ZeroRadiusError("landau_axis_eval: rho <= 0");
    check_a(a);
    if (std::isinf(a)) return {0.0, 0.0, 0.0};
    const double c = std::cos(phi), s = std::sin(phi);
    const double d = a - c;
    LandauAxisSample out;
    out.u_rho = (2.0 / rho) * ((a * a - 1.0) / (d * d) - 1.0);
    out.u_phi = (2.0 / rho) * (-s / d);
    out.pressure = 4.0 * (a * c - 1.0) / (rho * rho * d * d);
    return out;
}

namespace {

// Cartesian closed form for b along +z, valid for all x != 0:
//   U_i = 2(a^2-1) x_i / s^2 - 2 x_i / rho^2 - (2/(s rho^2)) q_i,
//   q = (x3 x1, x3 x2, -(x1^2+x2^2)),   s = a rho - x3,
//   P = 4 (a x3 - rho) / (rho s^2).
// Equivalent to the spherical-component formula assembled with the basis.
template <class T>
std::array<T, 4> landau_axis_cartesian(double a, const T& x, const T& y, const T& z) {
    using std::sqrt;  // double path; Dual2 overload found by ADL
    const T rho2 = x * x + y * y + z * z;
    const T rho = sqrt(rho2);
    const T s = a * rho - z;
    const T inv_s2 = 1.0 / (s * s);
    const T inv_rho2 = 1.0 / rho2;
    const T common = 2.0 * (a * a - 1.0) * inv_s2 - 2.0 * inv_rho2;
    const T swirl_free = 2.0 / (s * rho2);
    std::array<T, 4> out;
    out[0] = common * x - swirl_free * (z * x);
    out[1] = common * y - swirl_free * (z * y);
    out[2] = common * z + swirl_free * (x * x + y * y);
    out[3] = 4.0 * (a * z - rho) / (rho * s * s);
    return out;
}

Mat3 rotation_to(const Vec3& direction) {
    // Minimal rotation taking e_z to the unit vector `direction`.
    const Vec3 ez{0.0, 0.0, 1.0};
    const double c = dot(ez, direction);
    if (c > 1.0 - 1e-14) return Mat3::identity();
    if (c < -1.0 + 1e-14) return rotation_about_axis({1.0, 0.0, 0.0}, M_PI);
    Vec3 axis = cross(ez, direction);
    axis = axis / axis.norm();
    return rotation_about_axis(axis, std::acos(std::clamp(c, -1.0, 1.0)));
}

void check_point(const Vec3& x) {
    if (!x.finite()) throw DomainError("landau: non-finite point");
    if (x.norm2() == 0.0) throw ZeroPointError();
}

}  // namespace

LandauSolution LandauSolution::from_b(const Vec3& b) {
    if (!b.finite()) throw DomainError("landau: non-finite b");
    const double beta = b.norm();
    if (beta == 0.0) return LandauSolution(b, 0.0, kLandauAInfinity, Mat3::identity());
    return LandauSolution(b, beta, a_of_beta(beta), rotation_to(b / beta));
}

LandauSolution LandauSolution::axis(double beta) {
    if (!(beta >= 0.0)) throw DomainError("landau: beta must be >= 0");
    return from_b({0.0, 0.0, beta});
}

Vec3 LandauSolution::velocity(const Vec3& x) const {
    check_point(x);
    if (is_zero()) return {};
    const Vec3 y = rot_.transposed() * x;
    const auto r = landau_axis_cartesian<double>(a_, y.x, y.y, y.z);
    return rot_ * Vec3{r[0], r[1], r[2]};
}

double LandauSolution::pressure(const Vec3& x) const {
    check_point(x);
    if (is_zero()) return 0.0;
    const Vec3 y = rot_.transposed() * x;
    return landau_axis_cartesian<double>(a_, y.x, y.y, y.z)[3];
}

std::pair<Vec3, double> LandauSolution::eval(const Vec3& x) const {
    check_point(x);
    if (is_zero()) return {Vec3{}, 0.0};
    const Vec3 y = rot_.transposed() * x;
    const auto r = landau_axis_cartesian<double>(a_, y.x, y.y, y.z);
    return {rot_ * Vec3{r[0], r[1], r[2]}, r[3]};
}

namespace {

// Seeds x as independent variables, applies R^T, evaluates the axis formula,
// and rotates the vector part back. Gradients/Hessians come out with respect
// to the original x because the whole composition is tracked.
std::array<Dual2, 4> landau_dual_jet(double a, const Mat3& rot, const Vec3& x) {
    const Dual2 x0 = Dual2::variable(x.x, 0);
    const Dual2 x1 = Dual2::variable(x.y, 1);
    const Dual2 x2 = Dual2::variable(x.z, 2);
    const Mat3 rt = rot.transposed();
    const Dual2 y0 = x0 * rt(0, 0) + x1 * rt(0, 1) + x2 * rt(0, 2);
    const Dual2 y1 = x0 * rt(1, 0) + x1 * rt(1, 1) + x2 * rt(1, 2);
    const Dual2 y2 = x0 * rt(2, 0) + x1 * rt(2, 1) + x2 * rt(2, 2);
    const auto r = landau_axis_cartesian<Dual2>(a, y0, y1, y2);
    std::array<Dual2, 4> out;
    for (int i = 0; i < 3; ++i)
        out[i] = r[0] * rot(i, 0) + r[1] * rot(i, 1) + r[2] * rot(i, 2);
    out[3] = r[3];
    return out;
}

}  // namespace

std::array<Dual2, 3> LandauSolution::velocity_dual(const Vec3& x) const {
    check_point(x);
    if (is_zero()) return {};
    const auto jet = landau_dual_jet(a_, rot_, x);
    return {jet[0], jet[1], jet[2]};
}

Dual2 LandauSolution::pressure_dual(const Vec3& x) const {
    check_point(x);
    if (is_zero()) return Dual2{};
    return landau_dual_jet(a_, rot_, x)[3];
}

Mat3 LandauSolution::velocity_gradient(const Vec3& x) const {
    const auto jet = velocity_dual(x);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = jet[i].g[j];
    return m;
}

Vec3 LandauSolution::pressure_gradient(const Vec3& x) const { return pressure_dual(x).g; }

Vec3 LandauSolution::velocity_laplacian(const Vec3& x) const {
    const auto jet = velocity_dual(x);
    return {jet[0].h.trace(), jet[1].h.trace(), jet[2].h.trace()};
}

Vec3 LandauSolution::ns_residual(const Vec3& x) const {
    check_point(x);
    if (is_zero()) return {};
    const auto jet = landau_dual_jet(a_, rot_, x);
    const Vec3 u{jet[0].v, jet[1].v, jet[2].v};
    Vec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = -jet[i].h.trace() + dot(jet[i].g, u) + jet[3].g[i];
    return r;
}

FieldTriple landau_triple(const Vec3& b) {
    LandauSolution sol = LandauSolution::from_b(b);
    // Measured singularity constant: sup over |x| = 1 of |U^b| (homogeneity
    // makes the unit sphere enough). The axis formula peaks at phi = pi.
    double c1 = 0.0;
    if (!sol.is_zero()) {
        for (int k = 0; k <= 256; ++k) {
            const double phi = M_PI * k / 256.0;
            const auto s = landau_axis_eval(sol.a(), 1.0, phi);
            c1 = std::max(c1, std::hypot(s.u_rho, s.u_phi));
        }
    }
    FieldTriple t;
    t.u = std::make_shared<LandauVelocityField>(sol);
    t.B = std::make_shared<ZeroVectorField>();
    t.p = std::make_shared<LandauPressureField>(sol);
    t.c1_star = c1;
    t.c2_star = 0.0;
    return t;
}

}  // namespace mhdlab
