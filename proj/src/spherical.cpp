#include "mhdlab/spherical.hpp"

#include <cmath>

namespace mhdlab {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

SphericalCoords to_spherical(const Vec3& x) {
    if (!x.finite()) throw DomainError("to_spherical: non-finite point");
    const double rho = x.norm();
    if (rho == 0.0) throw ZeroPointError("to_spherical: |x| = 0");
    const double r_cyl = std::hypot(x.x, x.y);
    const double phi = std::atan2(r_cyl, x.z);
    double theta = 0.0;  // axis convention
    if (r_cyl > 0.0) {
        theta = std::atan2(x.y, x.x);
        if (theta < 0.0) theta += kTwoPi;
        if (theta >= kTwoPi) theta = 0.0;
    }
    return {rho, phi, theta};
}

Vec3 to_cartesian(const SphericalCoords& c) {
    const double sp = std::sin(c.phi), cp = std::cos(c.phi);
    const double st = std::sin(c.theta), ct = std::cos(c.theta);
    return {c.rho * sp * ct, c.rho * sp * st, c.rho * cp};
}

SphericalBasis basis_vectors(const SphericalCoords& c) {
    const double sp = std::sin(c.phi), cp = std::cos(c.phi);
    const double st = std::sin(c.theta), ct = std::cos(c.theta);
    SphericalBasis b;
    b.e_rho = {sp * ct, sp * st, cp};
    b.e_theta = {-st, ct, 0.0};
    b.e_phi = cross(b.e_theta, b.e_rho);  // = (cp ct, cp st, -sp)
    return b;
}

namespace {

void require_off_axis(const SphericalCoords& c) {
    if (c.rho <= 0.0) throw ZeroRadiusError("spherical operator: rho <= 0");
    if (std::abs(std::sin(c.phi)) < kAxisSinPhiThreshold)
        throw AxisSingularityError();
}

// Central difference of g along one coordinate of c.
template <class G>
double cdiff(const G& g, double h) {
    return (g(h) - g(-h)) / (2.0 * h);
}

}  // namespace

double spherical_div(const SphericalComponentField& v, const SphericalCoords& c, double h) {
    require_off_axis(c);
    const double rho = c.rho, phi = c.phi, theta = c.theta;
    const double sp = std::sin(phi);

    // (1/rho^2) d(rho^2 v^rho)/drho
    const double drho = cdiff([&](double d) {
        const double r = rho + d;
        return r * r * v({r, phi, theta}).rho;
    }, h * std::max(1.0, rho));
    // (1/(rho sin phi)) d(v^phi sin phi)/dphi
    const double dphi = cdiff([&](double d) {
        const double p = phi + d;
        return v({rho, p, theta}).phi * std::sin(p);
    }, h);
    // (1/(rho sin phi)) d v^theta / dtheta
    const double dth = cdiff([&](double d) {
        return v({rho, phi, theta + d}).theta;
    }, h);

    return drho / (rho * rho) + dphi / (rho * sp) + dth / (rho * sp);
}

Vec3 spherical_curl(const SphericalComponentField& v, const SphericalCoords& c, double h) {
    require_off_axis(c);
    const double rho = c.rho, phi = c.phi, theta = c.theta;
    const double sp = std::sin(phi);
    const double hr = h * std::max(1.0, rho);

    const double d_theta_sin_dphi = cdiff([&](double d) {
        const double p = phi + d;
        return v({rho, p, theta}).theta * std::sin(p);
    }, h);
    const double d_phi_dtheta = cdiff([&](double d) {
        return v({rho, phi, theta + d}).phi;
    }, h);
    const double d_rho_dtheta = cdiff([&](double d) {
        return v({rho, phi, theta + d}).rho;
    }, h);
    const double d_rho_theta_drho = cdiff([&](double d) {
        const double r = rho + d;
        return r * v({r, phi, theta}).theta;
    }, hr);
    const double d_rho_phi_drho = cdiff([&](double d) {
        const double r = rho + d;
        return r * v({r, phi, theta}).phi;
    }, hr);
    const double d_rho_dphi = cdiff([&](double d) {
        return v({rho, phi + d, theta}).rho;
    }, h);

    const double c_rho = (d_theta_sin_dphi - d_phi_dtheta) / (rho * sp);
    const double c_phi = (d_rho_dtheta / sp - d_rho_theta_drho) / rho;
    const double c_theta = (d_rho_phi_drho - d_rho_dphi) / rho;

    const SphericalBasis b = basis_vectors(c);
    return b.e_rho * c_rho + b.e_phi * c_phi + b.e_theta * c_theta;
}

Mat3 fd_gradient(const std::function<Vec3(const Vec3&)>& f, const Vec3& x, double h) {
    if (h <= 0.0) h = 1e-5 * std::max(1.0, x.norm());
    Mat3 jac;
    for (int j = 0; j < 3; ++j) {
        Vec3 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        if (xp.norm() < 0.5 * h || xm.norm() < 0.5 * h)
            throw StencilHitsOriginError();
        const Vec3 fp = f(xp), fm = f(xm);
        for (int i = 0; i < 3; ++i) jac(i, j) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return jac;
}

}  // namespace mhdlab
