#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rdc/element_set.hpp"
#include "rdc/error.hpp"

namespace rdc {

enum class Sign : std::uint8_t { Minus = 0, Plus = 1 };

constexpr Sign operator-(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }
/// (-)^d * s
constexpr Sign parity(int d, Sign s) { return (d % 2 == 0) ? s : -s; }
constexpr char sign_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }
constexpr std::size_t slot(Sign s) { return static_cast<std::size_t>(s); }
inline constexpr std::array<Sign, 2> kSigns{Sign::Minus, Sign::Plus};

/// Raw input for Poset::build.
struct ElementSpec {
  std::string id;
  int dim = 0;
  std::vector<std::string> input;
  std::vector<std::string> output;
};

/// Finite oriented graded poset. Elements are stored sorted by (dim, id) so
/// that equal posets have equal layouts.
class Poset {
 public:
  Poset() = default;

  /// Validates everything eagerly; throws Error on DanglingFace, BadGrading,
  /// EmptySide, Overlap or DuplicateId.
  static Poset build(std::vector<ElementSpec> elements);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& id(Index i) const { return ids_[i]; }
  int dim(Index i) const { return dims_[i]; }
  /// Maximal element dimension, -1 when empty.
  int dim() const { return dims_.empty() ? -1 : dims_.back(); }

  const std::vector<Index>& faces(Index i, Sign s) const { return faces_[i][slot(s)]; }
  const std::vector<Index>& cofaces(Index i, Sign s) const { return cofaces_[i][slot(s)]; }

  std::optional<Index> find(std::string_view id) const;
  /// Throws UnknownElement.
  Index at(std::string_view id) const;
  ElementSet set_of(std::span<const std::string> ids) const;
  std::vector<std::string> ids_of(const ElementSet& s) const;

  ElementSet none() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  ElementSet closure(const ElementSet& s) const;
  ElementSet closure_of(Index i) const;
  bool is_closed(const ElementSet& s) const;
  /// Elements of s with no cofaces inside s.
  ElementSet maximal(const ElementSet& s) const;
  ElementSet maximal_elements() const { return maximal(all()); }
  /// Largest dimension in s, -1 when s is empty.
  int dim_of(const ElementSet& s) const;
  ElementSet grade(const ElementSet& s, int n) const;

  /// Sub-poset on a closed subset, ids preserved. old_index receives, for each
  /// new index, the index in this poset.
  Poset restrict(const ElementSet& s, std::vector<Index>* old_index = nullptr) const;
  /// Reverse orientation in the given dimensions.
  Poset dual(std::span<const int> dims) const;
  Poset opposite() const;
  /// Renames every element; the mapping must be injective.
  template <typename F>
  Poset relabel(F&& rename) const {
    auto specs = to_specs();
    std::unordered_map<std::string, std::string> table;
    for (auto& e : specs) table.emplace(e.id, rename(e.id));
    for (auto& e : specs) {
      e.id = table.at(e.id);
      for (auto& f : e.input) f = table.at(f);
      for (auto& f : e.output) f = table.at(f);
    }
    return build(std::move(specs));
  }

  std::vector<ElementSpec> to_specs() const;

  /// Identity of ids, dimensions and faces.
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  std::vector<std::string> ids_;
  std::vector<int> dims_;
  std::vector<std::array<std::vector<Index>, 2>> faces_;
  std::vector<std::array<std::vector<Index>, 2>> cofaces_;
  std::vector<ElementSet> down_;  // closure of each element
  std::unordered_map<std::string, Index> index_;
};

/// Structured ids: "(a,b)" for products, "tag:a" for tagged injections.
std::string pair_id(std::string_view a, std::string_view b);
std::string tag_id(std::string_view tag, std::string_view a);
/// Splits "(a,b)" at its top-level comma; nullopt when the id is not a pair.
std::optional<std::pair<std::string, std::string>> split_pair_id(std::string_view id);
/// Flattens nested pairs: "((x,y),z)" and "(x,(y,z))" both give {x,y,z}.
std::vector<std::string> flatten_pair_id(std::string_view id);

}  // namespace rdc
