#pragma once

#include <memory>
#include <optional>
#include <string>

#include "mhdlab/fields.hpp"
#include "mhdlab/vec3.hpp"

namespace mhdlab {

// Textual field selectors:
//   landau:<beta>[:bx,by,bz]   Landau solution; optional direction for b
//   swirl:<profile>:<amplitude>   pure-swirl magnetic field (gauss|poly|bump)
//   zero
//   <path>                     grid dump (rho,phi,value CSV)
struct FieldSpec {
    enum class Kind { Landau, Swirl, Zero, GridFile };

    Kind kind = Kind::Zero;
    double beta = 0.0;
    std::optional<Vec3> direction;  // Landau only
    std::string profile;            // Swirl only
    double amplitude = 0.0;
    std::string path;  // GridFile only

    std::string describe() const;
};

// Throws ParseError naming the offending token.
FieldSpec parse_field_spec(const std::string& text);

// The selected vector field: Landau velocity, swirl B, zero, or a grid dump.
std::shared_ptr<const VectorField> spec_vector_field(const FieldSpec& spec);

// Full (u, B, p) triple: Landau gives (U^b, 0, P^b); swirl and grid files give
// (0, B, 0); zero gives all zeros. Combine with `background` to replace u.
FieldTriple spec_triple(const FieldSpec& spec);
FieldTriple spec_triple_with_velocity(const FieldSpec& field, const FieldSpec& velocity);

}  // namespace mhdlab
