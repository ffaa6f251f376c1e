#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rdc/molecule.hpp"

namespace rdc {

/// A shape with a set of marked elements, all of positive dimension.
struct MarkedRdc {
  std::shared_ptr<const Poset> poset;
  ElementSet marked;

  MarkedRdc(std::shared_ptr<const Poset> p, ElementSet m);
  MarkedRdc(const Poset& p, ElementSet m) : MarkedRdc(std::make_shared<const Poset>(p), std::move(m)) {}

  const Poset& shape() const { return *poset; }
  friend bool operator==(const MarkedRdc& a, const MarkedRdc& b) {
    return *a.poset == *b.poset && a.marked == b.marked;
  }
};

/// Injective, orientation-preserving map that preserves markings.
struct MarkedInclusion {
  MarkedRdc source;
  MarkedRdc target;
  std::vector<Index> map;

  /// Throws BadInput unless the map is an inclusion of marked shapes.
  void validate() const;
  bool entire() const { return map.size() == target.shape().size(); }
  ElementSet image() const;
  ElementSet image_of(const ElementSet& s) const;
};

/// Shape P⊗Q with marking {(x,y) : x ∈ A or y ∈ B}.
MarkedRdc gray_marked(const MarkedRdc& a, const MarkedRdc& b);

/// (X⊗Y′ ∪ X′⊗Y) ↪ X⊗Y. The union carries the union of the two image
/// markings and the target the Gray marking. Ids of the source are those of
/// the target.
MarkedInclusion pushout_product(const MarkedInclusion& i, const MarkedInclusion& j);

/// Target marking minus the image of the source marking. Throws NotEntire.
ElementSet residual(const MarkedInclusion& i);

MarkedRdc opposite(const MarkedRdc& m);
MarkedInclusion opposite(const MarkedInclusion& i);

/// op(i □ j) ≅ op(j) □ op(i) through (x,y) ↦ (y,x): the swap must be an
/// iso of targets carrying image onto image and marking onto marking.
/// On failure a reason is written to why.
bool op_pp_swap_holds(const MarkedInclusion& i, const MarkedInclusion& j, std::string* why = nullptr);

enum class GeneratorKind {
  BoundaryMinimal,  // (∂U,∅) ↪ (U,∅)
  MarkTop,          // (U,∅) ↪ (U,{⊤})
  BoundaryMarked,   // (∂U,∅) ↪ (U,{⊤})
};

std::string to_string(GeneratorKind kind);

struct Generator {
  GeneratorKind kind;
  Molecule atom;
  MarkedInclusion inclusion;
};

/// Throws NotAnAtom.
Generator make_generator(GeneratorKind kind, const Molecule& atom);

/// M: boundary inclusions with minimal markings and the marking maps t_U.
std::vector<Generator> generators_M(const std::vector<Molecule>& atoms, int max_dim);
/// M′: minimal boundary inclusions and boundary-to-marked-cell inclusions.
std::vector<Generator> generators_Mprime(const std::vector<Molecule>& atoms, int max_dim);
/// J_n: t_U for atoms with dim U > n.
std::vector<Generator> generators_J(const std::vector<Molecule>& atoms, int n);

}  // namespace rdc
