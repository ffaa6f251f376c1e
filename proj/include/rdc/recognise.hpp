#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "rdc/poset.hpp"

namespace rdc {

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

/// Boundary rule on a closed subset s of p. n < 0 gives the empty set,
/// n >= dim s gives s itself.
ElementSet boundary_of(const Poset& p, const ElementSet& s, int n, Sign sign);
/// Union of both n-boundaries.
ElementSet full_boundary_of(const Poset& p, const ElementSet& s, int n);
/// Roundness criterion on a closed subset.
bool is_round_set(const Poset& p, const ElementSet& s);

/// A proper decomposition s = left #_k right inside one ambient poset.
struct Split {
  int k = 0;
  ElementSet left;
  ElementSet right;
};

/// Decides molecule-hood and the submolecule relation for closed subsets of
/// one ambient poset, by searching pasting decompositions. Results are
/// memoised per instance; an instance is not thread-safe.
class Recogniser {
 public:
  explicit Recogniser(const Poset& ambient) : p_(ambient) {}

  const Poset& ambient() const { return p_; }

  bool is_molecule(const ElementSet& s);
  bool is_atom(const ElementSet& s);
  bool is_round_molecule(const ElementSet& s) { return is_molecule(s) && is_round_set(p_, s); }
  /// v ⊑ s through a chain of pasting inclusions.
  bool is_submolecule(const ElementSet& v, const ElementSet& s);
  /// Submolecule of equal dimension with round source.
  bool is_rewritable(const ElementSet& v, const ElementSet& s);
  /// All proper splits of s whose parts are molecules.
  std::vector<Split> molecule_splits(const ElementSet& s);
  /// Certificate tree (point / atom / paste) witnessing that s is a molecule.
  CertPtr certify(const ElementSet& s);

  ElementSet boundary(const ElementSet& s, int n, Sign sign) { return boundary_of(p_, s, n, sign); }

 private:
  std::vector<Split> candidate_splits(const ElementSet& s);
  bool atom_check(const ElementSet& s, Index top);

  const Poset& p_;
  std::unordered_map<ElementSet, bool, ElementSetHash> molecule_memo_;
  struct PairHash {
    std::size_t operator()(const std::pair<ElementSet, ElementSet>& x) const {
      return x.first.hash() * 31U ^ x.second.hash();
    }
  };
  std::unordered_map<std::pair<ElementSet, ElementSet>, bool, PairHash> submol_memo_;
};

}  // namespace rdc
