#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rdc/poset.hpp"

namespace rdc::testing {

inline std::set<std::string> ids(const Poset& p, const ElementSet& s) {
  auto v = p.ids_of(s);
  return {v.begin(), v.end()};
}

inline std::set<std::string> face_ids(const Poset& p, std::string_view id, Sign s) {
  std::set<std::string> out;
  for (Index f : p.faces(p.at(id), s)) out.insert(p.id(f));
  return out;
}

using rdc::brute_force_iso_count;

}  // namespace rdc::testing
