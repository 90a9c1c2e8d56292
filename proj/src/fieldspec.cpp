#include "mhdlab/fieldspec.hpp"

#include <filesystem>
#include <sstream>
#include <vector>

#include "mhdlab/catalog.hpp"
#include "mhdlab/errors.hpp"
#include "mhdlab/io.hpp"
#include "mhdlab/landau.hpp"

namespace mhdlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

double parse_number(const std::string& tok, const std::string& what) {
    try {
        size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid " + what + " '" + tok + "'");
    }
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    if (text == "zero") {
        spec.kind = FieldSpec::Kind::Zero;
        return spec;
    }
    const auto parts = split(text, ':');
    if (parts.empty()) throw ParseError("empty field spec");
    if (parts[0] == "landau") {
        if (parts.size() < 2 || parts.size() > 3)
            throw ParseError("landau spec needs 'landau:<beta>[:bx,by,bz]', got '" + text + "'");
        spec.kind = FieldSpec::Kind::Landau;
        spec.beta = parse_number(parts[1], "beta");
        if (spec.beta < 0.0) throw ParseError("beta must be >= 0 in '" + text + "'");
        if (parts.size() == 3) {
            const auto comps = split(parts[2], ',');
            if (comps.size() != 3)
                throw ParseError("direction must be 'bx,by,bz' in '" + text + "'");
            Vec3 d{parse_number(comps[0], "direction"), parse_number(comps[1], "direction"),
                   parse_number(comps[2], "direction")};
            if (d.norm() == 0.0) throw ParseError("direction must be nonzero in '" + text + "'");
            spec.direction = d / d.norm();
        }
        return spec;
    }
    if (parts[0] == "swirl") {
        if (parts.size() != 3)
            throw ParseError("swirl spec needs 'swirl:<profile>:<amplitude>', got '" + text + "'");
        swirl_profile_from_name(parts[1]);  // validates the name
        spec.kind = FieldSpec::Kind::Swirl;
        spec.profile = parts[1];
        spec.amplitude = parse_number(parts[2], "amplitude");
        return spec;
    }
    if (std::filesystem::exists(text)) {
        spec.kind = FieldSpec::Kind::GridFile;
        spec.path = text;
        return spec;
    }
    throw ParseError("unknown field selector '" + parts[0] + "'");
}

std::string FieldSpec::describe() const {
    switch (kind) {
        case Kind::Zero:
            return "zero";
        case Kind::Landau: {
            std::string s = "landau:" + format_double(beta);
            if (direction)
                s += ":" + format_double(direction->x) + "," + format_double(direction->y) + "," +
                     format_double(direction->z);
            return s;
        }
        case Kind::Swirl:
            return "swirl:" + profile + ":" + format_double(amplitude);
        case Kind::GridFile:
            return path;
    }
    return "?";
}

namespace {

Vec3 spec_b_vector(const FieldSpec& spec) {
    const Vec3 dir = spec.direction.value_or(Vec3{0.0, 0.0, 1.0});
    return dir * spec.beta;
}

}  // namespace

std::shared_ptr<const VectorField> spec_vector_field(const FieldSpec& spec) {
    switch (spec.kind) {
        case FieldSpec::Kind::Zero:
            return std::make_shared<ZeroVectorField>();
        case FieldSpec::Kind::Landau:
            return std::make_shared<LandauVelocityField>(LandauSolution::from_b(spec_b_vector(spec)));
        case FieldSpec::Kind::Swirl:
            return std::make_shared<SwirlField>(swirl_profile_from_name(spec.profile),
                                                spec.amplitude);
        case FieldSpec::Kind::GridFile: {
            GridCsv g = read_grid_csv(spec.path);
            return std::make_shared<GridSwirlField>(g.grid, std::move(g.values));
        }
    }
    throw ParseError("unreachable field spec kind");
}

FieldTriple spec_triple(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::Landau) return landau_triple(spec_b_vector(spec));
    FieldTriple t;
    t.u = std::make_shared<ZeroVectorField>();
    t.B = spec_vector_field(spec);
    t.p = std::make_shared<ConstantScalarField>(0.0);
    if (spec.kind == FieldSpec::Kind::GridFile) {
        const auto* grid_field = dynamic_cast<const GridSwirlField*>(t.B.get());
        t.domain_radius = grid_field->grid().rho_max;
    }
    return t;
}

FieldTriple spec_triple_with_velocity(const FieldSpec& field, const FieldSpec& velocity) {
    FieldTriple t = spec_triple(field);
    t.u = spec_vector_field(velocity);
    if (velocity.kind == FieldSpec::Kind::Landau) {
        const FieldTriple vt = landau_triple(spec_b_vector(velocity));
        t.p = vt.p;
        t.c1_star = vt.c1_star;
    }
    return t;
}

}  // namespace mhdlab
