#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdc/marked.hpp"
#include "rdc/molecule.hpp"

namespace rdc {

/// Λ = ∂U ∖ {x} for a facet x of the top element, with x ∈ faces^sign(⊤).
struct AtomicHorn {
  Molecule atom;
  Index facet = 0;
  Sign sign = Sign::Minus;
  ElementSet carrier;
};

/// Throws NotAnAtom, ZeroDimensional or NotAFacet.
AtomicHorn atomic_horn(const Molecule& u, Index x);
AtomicHorn atomic_horn(const Molecule& u, std::string_view x);

/// (Λ, a) ↪ (U, a_prime); both markings are given as U indices.
MarkedInclusion horn_inclusion(const AtomicHorn& h, const ElementSet& a, const ElementSet& a_prime);

/// One pasting clause: piece is pasted onto the part built so far, at level
/// k, on the input (Side::Left) or output (Side::Right) side.
struct ContextStep {
  ElementSet piece;
  int k = 0;
  Side side = Side::Left;
};

/// Shape of a context: the ambient molecule and its round hole of equal
/// dimension. The derivation, when present, rebuilds the ambient from the
/// hole one piece at a time.
struct ContextShape {
  Molecule ambient;
  ElementSet hole;
  std::vector<ContextStep> derivation;

  friend bool operator==(const ContextShape& a, const ContextShape& b) {
    return a.ambient.poset() == b.ambient.poset() && a.hole == b.hole;
  }
};

/// Re-evaluates the derivation and checks that it ends at the ambient.
bool replay(const Poset& p, const ElementSet& ambient, const ElementSet& hole, const std::vector<ContextStep>& steps);
bool replay(const ContextShape& c);

/// Ambient ∂^α U with hole cl{x}. to_atom receives, for each ambient index,
/// the index in U.
ContextShape classified_context(const AtomicHorn& h, std::vector<Index>* to_atom = nullptr);

/// Context clauses; violations throw ClauseViolation.
ContextShape identity_context(const Molecule& hole);
ContextShape identity_context(const Molecule& v, const Molecule& w);
/// u ◁ C along a rewritable image of ∂k+ u inside ∂k- of the ambient.
ContextShape left_paste(const Molecule& u, const ElementSet& image, const ContextShape& c,
                        std::optional<int> k = std::nullopt);
/// C ▷ u along a rewritable image of ∂k- u inside ∂k+ of the ambient.
ContextShape right_paste(const Molecule& u, const ElementSet& image, const ContextShape& c,
                         std::optional<int> k = std::nullopt);
/// outer ∘ inner: the hole of outer is replaced by the ambient of inner.
ContextShape compose(const ContextShape& inner, const ContextShape& outer);
/// Restriction to cells v ⇒ w; v and w must be parallel to the hole.
ContextShape promote(const ContextShape& c, const Molecule& v, const Molecule& w);
ContextShape promote(const ContextShape& c);

/// Searches a derivation of (w, h) inside p that pastes only atoms whose
/// top element is in a. Exhaustive with memoisation.
std::optional<std::vector<ContextStep>> find_A_derivation(const Poset& p, const ElementSet& w, const ElementSet& h,
                                                          const ElementSet& a);
std::optional<std::vector<ContextStep>> find_A_derivation(const ContextShape& c, const ElementSet& a);
/// Same search reusing the memo tables of r, whose ambient is the poset.
std::optional<std::vector<ContextStep>> find_A_derivation(Recogniser& r, const ElementSet& w, const ElementSet& h,
                                                          const ElementSet& a);

/// A ∪ {x, ⊤} when faces^{-α}(⊤) ⊆ A, A ∪ {⊤} otherwise.
ElementSet enlarged_marking(const AtomicHorn& h, const ElementSet& a);

struct MarkedHorn {
  AtomicHorn horn;
  ElementSet marking;
  ElementSet enlarged;
  std::vector<ContextStep> derivation;  // in U indices

  MarkedInclusion inclusion() const { return horn_inclusion(horn, marking, enlarged); }
};

/// Throws NotAContext when the classified context is not an A-context, or
/// BadInput when a is not a marking of Λ.
MarkedHorn marked_horn(const AtomicHorn& h, const ElementSet& a);

/// Recognises an arbitrary marked inclusion as a marked horn: the target
/// has a single maximal element, the image is its boundary minus one facet,
/// the classified context is an A-context and the target marking follows
/// the two-case rule.
/// A recogniser passed in must have a target-equal ambient; it lets repeated
/// calls on one target share their memo tables.
std::optional<MarkedHorn> recognise_marked_horn(const MarkedInclusion& inc, std::string* why = nullptr,
                                                Recogniser* shared = nullptr);

/// λ □ ∂V (Side::Left) or ∂V □ λ (Side::Right), checked elementwise against
/// the horn of U⊗V at (x,⊤) or of V⊗U at (⊤,x). Throws IdentityFailed.
AtomicHorn pp_horn(const AtomicHorn& h, const Molecule& v, Side order);

/// Pushout-product with an M′ generator, recognised again as a marked horn.
/// Throws RecognitionFailed.
MarkedHorn pp_marked_horn(const MarkedHorn& mh, const Generator& g, Side order, Recogniser* shared = nullptr);

}  // namespace rdc
