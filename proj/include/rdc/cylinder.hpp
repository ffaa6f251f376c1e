#pragma once

#include <string_view>
#include <vector>

#include "rdc/molecule.hpp"

namespace rdc {

enum class CylinderKind { Plain, LeftInverted, RightInverted };

/// A (possibly inverted) partial Gray cylinder with its collapse map onto
/// the base. Elements are "(i,x)" for i in {0-, 1, 0+} and x outside the
/// collapse set; collapsed elements keep their base id.
struct Cylinder {
  Molecule shape;
  Molecule base;
  std::vector<Index> tau;  // shape index -> base index
};

/// I ⊗_K U. Throws KNotClosed.
Cylinder gray_cylinder(const Molecule& u, const ElementSet& k);
/// Left-inverted needs K ⊆ ∂+U, right-inverted K ⊆ ∂-U. Throws
/// BadCollapseSet or KNotClosed.
Cylinder inverted_cylinder(const Molecule& u, const ElementSet& k, Side side);

/// Q^s U for s over {L,R}; the first letter is the outermost cylinder.
/// tau composes down to U. Throws NotRound, ZeroDimensional for a nonempty
/// string on a point, or BadInput on other letters.
Cylinder invertor_shape(std::string_view s, const Molecule& u);

/// Unit shape: cylinder relative to the whole boundary.
Cylinder unit_shape(const Molecule& u);

/// Unitor shape for a rewritable hole inside ∂-U (Side::Left) or ∂+U
/// (Side::Right): cylinder relative to ∂U minus the interior of the hole.
/// Throws NotRewritable.
Cylinder unitor_shape(const Molecule& u, const ElementSet& hole, Side side);

/// Checks that tau is surjective, dimension non-increasing and sends the
/// closure of every element onto the closure of its image.
bool projection_is_valid(const Cylinder& c);

}  // namespace rdc
