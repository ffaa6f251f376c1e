#include "rdc/poset.hpp"

#include <algorithm>
#include <numeric>

namespace rdc {

Poset Poset::build(std::vector<ElementSpec> elements) {
  std::sort(elements.begin(), elements.end(), [](const ElementSpec& a, const ElementSpec& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
  });
  Poset p;
  const std::size_t n = elements.size();
  p.ids_.reserve(n);
  p.dims_.reserve(n);
  p.index_.reserve(n);
  for (Index i = 0; i < n; ++i) {
    const auto& e = elements[i];
    if (e.dim < 0) throw Error(ErrorKind::BadGrading, "negative dimension for " + e.id);
    if (!p.index_.emplace(e.id, i).second) throw Error(ErrorKind::DuplicateId, e.id);
    p.ids_.push_back(e.id);
    p.dims_.push_back(e.dim);
  }
  p.faces_.resize(n);
  p.cofaces_.resize(n);
  for (Index i = 0; i < n; ++i) {
    const auto& e = elements[i];
    for (Sign s : kSigns) {
      const auto& side = s == Sign::Minus ? e.input : e.output;
      auto& out = p.faces_[i][slot(s)];
      for (const auto& f : side) {
        auto it = p.index_.find(f);
        if (it == p.index_.end()) throw Error(ErrorKind::DanglingFace, f + " (face of " + e.id + ")");
        if (p.dims_[it->second] != e.dim - 1)
          throw Error(ErrorKind::BadGrading, f + " is not of dimension " + std::to_string(e.dim - 1) + " (face of " + e.id + ")");
        out.push_back(it->second);
      }
      std::sort(out.begin(), out.end());
      if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw Error(ErrorKind::DuplicateId, "repeated face of " + e.id);
    }
    if (e.dim > 0) {
      if (p.faces_[i][0].empty()) throw Error(ErrorKind::EmptySide, "input of " + e.id);
      if (p.faces_[i][1].empty()) throw Error(ErrorKind::EmptySide, "output of " + e.id);
    } else if (!p.faces_[i][0].empty() || !p.faces_[i][1].empty()) {
      throw Error(ErrorKind::BadGrading, "point " + e.id + " has faces");
    }
    const auto& in = p.faces_[i][0];
    const auto& out = p.faces_[i][1];
    std::vector<Index> both;
    std::set_intersection(in.begin(), in.end(), out.begin(), out.end(), std::back_inserter(both));
    if (!both.empty()) throw Error(ErrorKind::Overlap, p.ids_[both.front()] + " in both sides of " + e.id);
  }
  for (Index i = 0; i < n; ++i)
    for (Sign s : kSigns)
      for (Index f : p.faces_[i][slot(s)]) p.cofaces_[f][slot(s)].push_back(i);
  // faces have smaller indices, so downsets fill in index order
  p.down_.assign(n, ElementSet(n));
  for (Index i = 0; i < n; ++i) {
    p.down_[i].insert(i);
    for (Sign s : kSigns)
      for (Index f : p.faces_[i][slot(s)]) p.down_[i] |= p.down_[f];
  }
  return p;
}

std::optional<Index> Poset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Poset::at(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorKind::UnknownElement, std::string(id));
  return *i;
}

ElementSet Poset::set_of(std::span<const std::string> ids) const {
  ElementSet s(size());
  for (const auto& id : ids) s.insert(at(id));
  return s;
}

std::vector<std::string> Poset::ids_of(const ElementSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](Index i) { out.push_back(ids_[i]); });
  return out;
}

ElementSet Poset::closure(const ElementSet& s) const {
  ElementSet c = s;
  s.for_each([&](Index i) { c |= down_[i]; });
  return c;
}

ElementSet Poset::closure_of(Index i) const { return down_[i]; }

bool Poset::is_closed(const ElementSet& s) const {
  bool ok = true;
  s.for_each([&](Index i) {
    for (Sign sg : kSigns)
      for (Index f : faces_[i][slot(sg)])
        if (!s.contains(f)) ok = false;
  });
  return ok;
}

ElementSet Poset::maximal(const ElementSet& s) const {
  ElementSet m(size());
  s.for_each([&](Index i) {
    for (Sign sg : kSigns)
      for (Index c : cofaces_[i][slot(sg)])
        if (s.contains(c)) return;
    m.insert(i);
  });
  return m;
}

int Poset::dim_of(const ElementSet& s) const {
  int d = -1;
  s.for_each([&](Index i) { d = std::max(d, dims_[i]); });
  return d;
}

ElementSet Poset::grade(const ElementSet& s, int n) const {
  ElementSet g(size());
  s.for_each([&](Index i) {
    if (dims_[i] == n) g.insert(i);
  });
  return g;
}

std::vector<ElementSpec> Poset::to_specs() const {
  std::vector<ElementSpec> out(size());
  for (Index i = 0; i < size(); ++i) {
    out[i].id = ids_[i];
    out[i].dim = dims_[i];
    for (Index f : faces_[i][0]) out[i].input.push_back(ids_[f]);
    for (Index f : faces_[i][1]) out[i].output.push_back(ids_[f]);
  }
  return out;
}

Poset Poset::restrict(const ElementSet& s, std::vector<Index>* old_index) const {
  std::vector<ElementSpec> specs;
  s.for_each([&](Index i) {
    ElementSpec e{ids_[i], dims_[i], {}, {}};
    for (Index f : faces_[i][0]) {
      if (!s.contains(f)) throw Error(ErrorKind::KNotClosed, "restriction to a non-closed subset");
      e.input.push_back(ids_[f]);
    }
    for (Index f : faces_[i][1]) {
      if (!s.contains(f)) throw Error(ErrorKind::KNotClosed, "restriction to a non-closed subset");
      e.output.push_back(ids_[f]);
    }
    specs.push_back(std::move(e));
  });
  Poset r = build(std::move(specs));
  if (old_index) {
    old_index->resize(r.size());
    for (Index j = 0; j < r.size(); ++j) (*old_index)[j] = index_.at(r.ids_[j]);
  }
  return r;
}

Poset Poset::dual(std::span<const int> dims) const {
  Poset p = *this;
  for (Index i = 0; i < size(); ++i) {
    if (std::find(dims.begin(), dims.end(), dims_[i]) == dims.end()) continue;
    std::swap(p.faces_[i][0], p.faces_[i][1]);
  }
  for (auto& c : p.cofaces_) {
    c[0].clear();
    c[1].clear();
  }
  for (Index i = 0; i < size(); ++i)
    for (Sign s : kSigns)
      for (Index f : p.faces_[i][slot(s)]) p.cofaces_[f][slot(s)].push_back(i);
  return p;
}

Poset Poset::opposite() const {
  std::vector<int> odd;
  for (int d = 1; d <= dim(); d += 2) odd.push_back(d);
  return dual(odd);
}

bool operator==(const Poset& a, const Poset& b) {
  return a.ids_ == b.ids_ && a.dims_ == b.dims_ && a.faces_ == b.faces_;
}

std::string pair_id(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

std::string tag_id(std::string_view tag, std::string_view a) {
  std::string s(tag);
  s += ':';
  s += a;
  return s;
}

std::optional<std::pair<std::string, std::string>> split_pair_id(std::string_view id) {
  if (id.size() < 5 || id.front() != '(' || id.back() != ')') return std::nullopt;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < id.size(); ++i) {
    char c = id[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ',' && depth == 0)
      return std::make_pair(std::string(id.substr(1, i - 1)), std::string(id.substr(i + 1, id.size() - i - 2)));
  }
  return std::nullopt;
}

std::vector<std::string> flatten_pair_id(std::string_view id) {
  auto split = split_pair_id(id);
  if (!split) return {std::string(id)};
  auto left = flatten_pair_id(split->first);
  auto right = flatten_pair_id(split->second);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace rdc
