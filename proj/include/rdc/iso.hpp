#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "rdc/poset.hpp"

namespace rdc {

/// Element map P -> Q by index.
using IsoMap = std::vector<Index>;

/// True iff map is a dimension- and orientation-preserving bijection P -> Q.
bool is_iso(const Poset& p, const Poset& q, const IsoMap& map);

std::optional<IsoMap> find_iso(const Poset& p, const Poset& q);
std::vector<IsoMap> all_isos(const Poset& p, const Poset& q,
                             std::size_t limit = std::numeric_limits<std::size_t>::max());

IsoMap invert(const IsoMap& map);

/// Counts isomorphisms by trying every dimension-preserving bijection.
/// Exponential; a reference for the backtracking search on small posets.
std::size_t brute_force_iso_count(const Poset& p, const Poset& q);

/// Cheap iso-invariant fingerprint, used to prefilter candidate pairs.
std::size_t invariant_hash(const Poset& p);

}  // namespace rdc
