#include "rdc/recognise.hpp"

#include <numeric>

#include "rdc/certificate.hpp"

namespace rdc {

ElementSet boundary_of(const Poset& p, const ElementSet& s, int n, Sign sign) {
  if (n < 0) return p.none();
  const int d = p.dim_of(s);
  if (n >= d) return s;
  ElementSet gen(p.size());
  s.for_each([&](Index x) {
    const int dx = p.dim(x);
    if (dx > n) return;
    if (dx == n) {
      for (Index c : p.cofaces(x, -sign))
        if (s.contains(c)) return;
      gen.insert(x);
      return;
    }
    for (Sign sg : kSigns)
      for (Index c : p.cofaces(x, sg))
        if (s.contains(c)) return;
    gen.insert(x);
  });
  return p.closure(gen);
}

ElementSet full_boundary_of(const Poset& p, const ElementSet& s, int n) {
  return boundary_of(p, s, n, Sign::Minus) | boundary_of(p, s, n, Sign::Plus);
}

bool is_round_set(const Poset& p, const ElementSet& s) {
  const int d = p.dim_of(s);
  for (int k = 0; k < d; ++k) {
    auto meet = boundary_of(p, s, k, Sign::Minus) & boundary_of(p, s, k, Sign::Plus);
    if (meet != full_boundary_of(p, s, k - 1)) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

constexpr std::size_t kMaxComponents = 14;

}  // namespace

std::vector<Split> Recogniser::candidate_splits(const ElementSet& s) {
  std::vector<Split> out;
  const int d = p_.dim_of(s);
  const auto maxes = p_.maximal(s).indices();
  for (int k = d - 1; k >= 0; --k) {
    std::vector<Index> high;
    for (Index m : maxes)
      if (p_.dim(m) > k) high.push_back(m);
    if (high.size() < 2) continue;
    std::vector<ElementSet> cl;
    cl.reserve(high.size());
    for (Index m : high) {
      auto c = p_.closure_of(m);
      ElementSet upper(p_.size());
      c.for_each([&](Index x) {
        if (p_.dim(x) > k) upper.insert(x);
      });
      cl.push_back(std::move(upper));
    }
    UnionFind uf(high.size());
    for (std::size_t i = 0; i < high.size(); ++i)
      for (std::size_t j = i + 1; j < high.size(); ++j)
        if (cl[i].intersects(cl[j])) uf.unite(i, j);
    std::vector<std::vector<Index>> comps;
    std::vector<std::size_t> root_slot(high.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < high.size(); ++i) {
      auto r = uf.find(i);
      if (root_slot[r] == static_cast<std::size_t>(-1)) {
        root_slot[r] = comps.size();
        comps.emplace_back();
      }
      comps[root_slot[r]].push_back(high[i]);
    }
    const std::size_t c = comps.size();
    if (c < 2 || c > kMaxComponents) continue;
    const auto in_k = boundary_of(p_, s, k, Sign::Minus);
    const auto out_k = boundary_of(p_, s, k, Sign::Plus);
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << c); ++mask) {
      ElementSet pm(p_.size()), qm(p_.size());
      for (std::size_t i = 0; i < c; ++i)
        for (Index m : comps[i]) ((mask >> i) & 1U ? pm : qm).insert(m);
      auto left = p_.closure(pm) | in_k;
      auto right = p_.closure(qm) | out_k;
      if ((left | right) != s) continue;
      auto meet = left & right;
      if (meet != boundary_of(p_, left, k, Sign::Plus)) continue;
      if (meet != boundary_of(p_, right, k, Sign::Minus)) continue;
      out.push_back({k, std::move(left), std::move(right)});
    }
  }
  return out;
}

bool Recogniser::atom_check(const ElementSet& s, Index top) {
  const int d = p_.dim(top);
  const auto in = boundary_of(p_, s, d - 1, Sign::Minus);
  const auto out = boundary_of(p_, s, d - 1, Sign::Plus);
  auto whole = in | out;
  whole.insert(top);
  if (whole != s) return false;
  if (p_.dim_of(in) != d - 1 || p_.dim_of(out) != d - 1) return false;
  if (!is_round_molecule(in) || !is_round_molecule(out)) return false;
  for (Sign a : kSigns)
    if (boundary_of(p_, in, d - 2, a) != boundary_of(p_, out, d - 2, a)) return false;
  return (in & out) == full_boundary_of(p_, in, d - 2);
}

bool Recogniser::is_molecule(const ElementSet& s) {
  if (auto it = molecule_memo_.find(s); it != molecule_memo_.end()) return it->second;
  bool result = false;
  if (!s.empty() && p_.is_closed(s)) {
    const int d = p_.dim_of(s);
    const auto maxes = p_.maximal(s);
    if (d == 0) {
      result = s.count() == 1;
    } else if (maxes.count() == 1) {
      result = atom_check(s, maxes.indices().front());
    } else {
      for (const auto& sp : candidate_splits(s)) {
        if (is_molecule(sp.left) && is_molecule(sp.right)) {
          result = true;
          break;
        }
      }
    }
  }
  molecule_memo_.emplace(s, result);
  return result;
}

bool Recogniser::is_atom(const ElementSet& s) { return p_.maximal(s).count() == 1 && is_molecule(s); }

std::vector<Split> Recogniser::molecule_splits(const ElementSet& s) {
  std::vector<Split> out;
  for (auto& sp : candidate_splits(s))
    if (is_molecule(sp.left) && is_molecule(sp.right)) out.push_back(std::move(sp));
  return out;
}

bool Recogniser::is_submolecule(const ElementSet& v, const ElementSet& s) {
  if (v == s) return is_molecule(s);
  if (!v.is_subset_of(s)) return false;
  auto key = std::make_pair(v, s);
  if (auto it = submol_memo_.find(key); it != submol_memo_.end()) return it->second;
  bool result = false;
  const int dv = p_.dim_of(v);
  const int ds = p_.dim_of(s);
  if (is_molecule(v) && is_molecule(s) && dv <= ds) {
    // degenerate pastings: each boundary of s is a submolecule of s
    if (dv < ds) {
      for (Sign a : kSigns) {
        auto b = boundary_of(p_, s, ds - 1, a);
        if (v.is_subset_of(b) && is_submolecule(v, b)) {
          result = true;
          break;
        }
      }
    }
    if (!result && p_.maximal(s).count() > 1) {
      for (const auto& sp : molecule_splits(s)) {
        if ((v.is_subset_of(sp.left) && is_submolecule(v, sp.left)) ||
            (v.is_subset_of(sp.right) && is_submolecule(v, sp.right))) {
          result = true;
          break;
        }
      }
    }
  }
  submol_memo_.emplace(std::move(key), result);
  return result;
}

bool Recogniser::is_rewritable(const ElementSet& v, const ElementSet& s) {
  return p_.dim_of(v) == p_.dim_of(s) && is_round_set(p_, v) && is_submolecule(v, s);
}

CertPtr Recogniser::certify(const ElementSet& s) {
  if (!is_molecule(s)) return nullptr;
  const int d = p_.dim_of(s);
  if (d == 0) return point_certificate();
  const auto maxes = p_.maximal(s);
  if (maxes.count() == 1)
    return atom_certificate(certify(boundary_of(p_, s, d - 1, Sign::Minus)),
                            certify(boundary_of(p_, s, d - 1, Sign::Plus)));
  for (const auto& sp : molecule_splits(s)) return paste_certificate(sp.k, certify(sp.left), certify(sp.right));
  return nullptr;
}

}  // namespace rdc
