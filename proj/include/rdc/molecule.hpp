#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rdc/certificate.hpp"
#include "rdc/iso.hpp"
#include "rdc/poset.hpp"
#include "rdc/recognise.hpp"

namespace rdc {

/// A poset together with the certificate of how it was built. Boundaries
/// are computed once at construction.
class Molecule {
 public:
  Molecule(Poset poset, CertPtr certificate);

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const CertPtr& certificate() const { return cert_; }

  int dim() const { return poset_->dim(); }
  std::size_t size() const { return poset_->size(); }

  /// Boundary as an element set; n < 0 gives the empty set, n >= dim everything.
  const ElementSet& boundary_set(int n, Sign s) const;
  ElementSet full_boundary_set() const { return boundary_set(dim() - 1, Sign::Minus) | boundary_set(dim() - 1, Sign::Plus); }
  bool is_round() const { return round_; }
  bool is_atom() const { return maximal_count_ == 1; }
  /// Greatest element of an atom; throws NotAnAtom otherwise.
  Index top() const;

 private:
  std::shared_ptr<const Poset> poset_;
  CertPtr cert_;
  std::vector<std::array<ElementSet, 2>> bd_;
  ElementSet empty_, all_;
  bool round_ = true;
  std::size_t maximal_count_ = 0;
};

/// Tracked submolecule inclusion source -> target.
struct SubmoleculeInclusion {
  Molecule source;
  Molecule target;
  IsoMap map;
  bool rewritable = false;

  ElementSet image() const;
};

enum class Side { Left, Right };

/// A pushout molecule with the two canonical injections.
struct Pasting {
  Molecule result;
  IsoMap left;
  IsoMap right;
};

Molecule point();
Molecule arrow();
/// Globes use ids 0-, 0+, 1-, 1+, ..., n.
Molecule globe(int n);

/// Restriction of m to a closed subset known to be a molecule.
Molecule restrict_molecule(const Molecule& m, const ElementSet& s, CertPtr certificate,
                           std::vector<Index>* old_index = nullptr);

SubmoleculeInclusion identity_inclusion(const Molecule& m);
SubmoleculeInclusion boundary(const Molecule& m, int n, Sign s);
/// Inclusion of a closed subset of target; the subset must be recognised as
/// a submolecule (RecognitionFailed otherwise).
SubmoleculeInclusion inclusion_of(const Molecule& target, const ElementSet& image);
SubmoleculeInclusion compose(const SubmoleculeInclusion& inner, const SubmoleculeInclusion& outer);

Pasting paste_with_maps(const Molecule& m1, const Molecule& m2, int k);
Molecule paste(const Molecule& m1, const Molecule& m2, int k);

/// Side::Left: m1 is pasted along iota : ∂k+ m1 ⊑ ∂k- m2 (iota.target is m2).
/// Side::Right: m2 is pasted along iota : ∂k- m2 ⊑ ∂k+ m1 (iota.target is m1).
/// k defaults to the dimension of the pasted molecule minus one.
Pasting paste_at(const Molecule& m1, const SubmoleculeInclusion& iota, const Molecule& m2, Side side,
                 std::optional<int> k = std::nullopt);

/// Replaces a round hole of dimension d inside outer by a round molecule of
/// dimension d or d+1 whose (d-1)-boundaries match those of the hole. outer
/// maps outer indices (nullopt on the hole interior), inner maps inner
/// indices. Throws BoundaryMismatch or NotRewritable.
struct Substitution {
  Molecule result;
  std::vector<std::optional<Index>> outer;
  IsoMap inner;
};
Substitution substitute(const Molecule& outer, const ElementSet& hole, const Molecule& inner);

Molecule atom(const Molecule& input, const Molecule& output);
Molecule merger(const Molecule& m);

Molecule dual(std::span<const int> dims, const Molecule& m);
Molecule opposite(const Molecule& m);

/// Union of two closed subsets of one ambient poset recognised as a
/// generalised pasting at the k-boundary.
struct GeneralisedPasting {
  int k = 0;
  ElementSet left;
  ElementSet right;
};

std::optional<GeneralisedPasting> recognise_generalised_pasting(Recogniser& r, const ElementSet& u,
                                                                const ElementSet& v, int k);

/// Builds (∂k-(U∪V) ◁ U) ◁ V and U ▷ (V ▷ ∂k+(U∪V)) with paste_at and
/// reports whether each is uniquely isomorphic to U∪V.
struct GencpFactorisations {
  bool input_side = false;
  bool output_side = false;
  std::string detail;
};
GencpFactorisations check_gencp_factorisations(const Poset& ambient, const GeneralisedPasting& gp);

}  // namespace rdc
