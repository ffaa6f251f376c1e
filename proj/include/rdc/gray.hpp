#pragma once

#include <vector>

#include "rdc/molecule.hpp"

namespace rdc {

/// Gray product with index bookkeeping between factors and the product.
class GrayProduct {
 public:
  GrayProduct(const Poset& p, const Poset& q);

  const Poset& poset() const { return poset_; }
  Index at(Index x, Index y) const { return pair_[x * q_size_ + y]; }
  std::pair<Index, Index> factors(Index i) const { return factors_[i]; }
  /// {(x,y) : x ∈ a, y ∈ b}
  ElementSet product(const ElementSet& a, const ElementSet& b) const;
  /// {(x,y) : x ∈ a or y ∈ b}
  ElementSet either(const ElementSet& a, const ElementSet& b) const;

 private:
  Poset poset_;
  std::size_t q_size_;
  std::vector<Index> pair_;
  std::vector<std::pair<Index, Index>> factors_;
};

Poset gray(const Poset& p, const Poset& q);
Molecule gray(const Molecule& u, const Molecule& v);

/// Both sides of the boundary formula for U⊗V as sets in the product.
struct GrayBoundarySides {
  ElementSet direct;   // boundary rule evaluated on U⊗V
  ElementSet formula;  // ⋃_k ∂_k^α U ⊗ ∂_{n-k}^{(-)^k α} V
};
GrayBoundarySides gray_boundary_decomposition(const Molecule& u, const Molecule& v, const GrayProduct& uv, int n,
                                              Sign sign);

/// The two pieces of the generalised-pasting split of ∂_n^α(U⊗V) at j, as
/// sets in the product, listed in pasting order.
struct GraySplit {
  ElementSet first;
  ElementSet second;
};
GraySplit gray_boundary_split(const Molecule& u, const Molecule& v, const GrayProduct& uv, int n, int j, Sign sign);

/// Iso op(P⊗Q) -> op(Q)⊗op(P), (x,y) ↦ (y,x). Throws IdentityFailed if the
/// elementwise swap is not orientation-preserving.
IsoMap op_swap_iso(const Poset& p, const Poset& q);

}  // namespace rdc
