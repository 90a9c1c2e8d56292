#include "mhdlab/catalog.hpp"

#include "mhdlab/errors.hpp"

namespace mhdlab {

SwirlProfile swirl_profile_from_name(const std::string& name) {
    if (name == "gauss") return SwirlProfile::Gauss;
    if (name == "poly") return SwirlProfile::Poly;
    if (name == "bump") return SwirlProfile::Bump;
    throw ParseError("unknown swirl profile '" + name + "'");
}

ModulatedSwirlField random_swirl_field(std::mt19937_64& rng, double amplitude) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::array<double, 4> c;
    for (double& v : c) v = amplitude * coef(rng);
    return ModulatedSwirlField(c);
}

std::array<Dual2, 2> PoloidalField::potential_jet(const Vec3& p) const {
    const Dual2 x = Dual2::variable(p.x, 0);
    const Dual2 y = Dual2::variable(p.y, 1);
    const Dual2 z = Dual2::variable(p.z, 2);
    const Dual2 rho2 = x * x + y * y + z * z;
    const Dual2 chi = (d0_ + d1_ * z) * exp(-1.0 * rho2);
    return {chi * (-1.0 * y), chi * x};  // psi = chi (-y, x, 0)
}

Vec3 PoloidalField::value(const Vec3& x) const {
    const auto psi = potential_jet(x);
    // u = curl psi with psi_z = 0:
    //   u_x = -d_z psi_y, u_y = d_z psi_x, u_z = d_x psi_y - d_y psi_x
    return {-psi[1].g[2], psi[0].g[2], psi[1].g[0] - psi[0].g[1]};
}

Mat3 PoloidalField::gradient(const Vec3& x) const {
    const auto psi = potential_jet(x);
    Mat3 m;
    for (int l = 0; l < 3; ++l) {
        m(0, l) = -psi[1].h(2, l);
        m(1, l) = psi[0].h(2, l);
        m(2, l) = psi[1].h(0, l) - psi[0].h(1, l);
    }
    return m;
}

}  // namespace mhdlab
