#include "rdc/iso.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

namespace rdc {
namespace {

using Signature = std::array<std::size_t, 5>;

Signature signature(const Poset& p, Index i) {
  return {static_cast<std::size_t>(p.dim(i)), p.faces(i, Sign::Minus).size(), p.faces(i, Sign::Plus).size(),
          p.cofaces(i, Sign::Minus).size(), p.cofaces(i, Sign::Plus).size()};
}

class Search {
 public:
  Search(const Poset& p, const Poset& q, std::size_t limit) : p_(p), q_(q), limit_(limit) {
    sig_p_.reserve(p.size());
    sig_q_.reserve(q.size());
    for (Index i = 0; i < p.size(); ++i) sig_p_.push_back(signature(p, i));
    for (Index i = 0; i < q.size(); ++i) sig_q_.push_back(signature(q, i));
    // breadth-first along faces and cofaces so that every element after the
    // first of its component has a mapped neighbour to draw candidates from
    std::map<Signature, std::size_t> freq;
    for (const auto& s : sig_p_) ++freq[s];
    auto better = [&](Index a, Index b) {
      if (p.dim(a) != p.dim(b)) return p.dim(a) > p.dim(b);
      return freq[sig_p_[a]] < freq[sig_p_[b]];
    };
    std::vector<bool> seen(p.size(), false);
    for (;;) {
      std::optional<Index> start;
      for (Index i = 0; i < p.size(); ++i)
        if (!seen[i] && (!start || better(i, *start))) start = i;
      if (!start) break;
      std::size_t head = order_.size();
      order_.push_back(*start);
      seen[*start] = true;
      while (head < order_.size()) {
        Index x = order_[head++];
        for (Sign s : kSigns)
          for (const auto* next : {&p.faces(x, s), &p.cofaces(x, s)})
            for (Index y : *next)
              if (!seen[y]) {
                seen[y] = true;
                order_.push_back(y);
              }
      }
    }
    map_.assign(p.size(), kUnset);
    used_.assign(q.size(), false);
  }

  std::vector<IsoMap> run() {
    if (p_.size() != q_.size()) return {};
    auto a = sig_p_;
    auto b = sig_q_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return {};
    step(0);
    return std::move(found_);
  }

 private:
  static constexpr Index kUnset = static_cast<Index>(-1);

  bool consistent(Index x, Index y) const {
    if (sig_p_[x] != sig_q_[y]) return false;
    for (Sign s : kSigns) {
      for (Index c : p_.cofaces(x, s)) {
        Index fc = map_[c];
        if (fc == kUnset) continue;
        const auto& fs = q_.faces(fc, s);
        if (!std::binary_search(fs.begin(), fs.end(), y)) return false;
      }
      for (Index f : p_.faces(x, s)) {
        Index ff = map_[f];
        if (ff == kUnset) continue;
        const auto& cs = q_.cofaces(ff, s);
        if (!std::binary_search(cs.begin(), cs.end(), y)) return false;
      }
    }
    return true;
  }

  void step(std::size_t depth) {
    if (found_.size() >= limit_) return;
    if (depth == order_.size()) {
      if (is_iso(p_, q_, map_)) found_.push_back(map_);
      return;
    }
    Index x = order_[depth];
    // restrict candidates through an already mapped coface when there is one
    const std::vector<Index>* pool = nullptr;
    for (Sign s : kSigns) {
      for (Index c : p_.cofaces(x, s))
        if (!pool && map_[c] != kUnset) pool = &q_.faces(map_[c], s);
      for (Index f : p_.faces(x, s))
        if (!pool && map_[f] != kUnset) pool = &q_.cofaces(map_[f], s);
    }
    auto attempt = [&](Index y) {
      if (used_[y] || !consistent(x, y)) return;
      map_[x] = y;
      used_[y] = true;
      step(depth + 1);
      used_[y] = false;
      map_[x] = kUnset;
    };
    if (pool) {
      for (Index y : *pool) {
        attempt(y);
        if (found_.size() >= limit_) return;
      }
    } else {
      for (Index y = 0; y < q_.size(); ++y) {
        attempt(y);
        if (found_.size() >= limit_) return;
      }
    }
  }

  const Poset& p_;
  const Poset& q_;
  std::size_t limit_;
  std::vector<Signature> sig_p_, sig_q_;
  std::vector<Index> order_;
  IsoMap map_;
  std::vector<bool> used_;
  std::vector<IsoMap> found_;
};

}  // namespace

bool is_iso(const Poset& p, const Poset& q, const IsoMap& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (Index i = 0; i < p.size(); ++i) {
    if (map[i] >= q.size() || hit[map[i]]) return false;
    hit[map[i]] = true;
    if (p.dim(i) != q.dim(map[i])) return false;
  }
  for (Index i = 0; i < p.size(); ++i) {
    for (Sign s : kSigns) {
      std::vector<Index> image;
      for (Index f : p.faces(i, s)) image.push_back(map[f]);
      std::sort(image.begin(), image.end());
      if (image != q.faces(map[i], s)) return false;
    }
  }
  return true;
}

std::optional<IsoMap> find_iso(const Poset& p, const Poset& q) {
  auto all = all_isos(p, q, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<IsoMap> all_isos(const Poset& p, const Poset& q, std::size_t limit) {
  if (limit == 0) return {};
  return Search(p, q, limit).run();
}

IsoMap invert(const IsoMap& map) {
  IsoMap inv(map.size());
  for (Index i = 0; i < map.size(); ++i) inv[map[i]] = i;
  return inv;
}

std::size_t invariant_hash(const Poset& p) {
  std::vector<Signature> sigs;
  for (Index i = 0; i < p.size(); ++i) sigs.push_back(signature(p, i));
  std::sort(sigs.begin(), sigs.end());
  std::size_t h = p.size();
  for (const auto& s : sigs)
    for (auto v : s) h = h * 1000003U ^ (v + 0x9e3779b9U);
  return h;
}

std::size_t brute_force_iso_count(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return 0;
  std::vector<std::vector<Index>> by_dim_p, by_dim_q;
  const int d = std::max(p.dim(), q.dim());
  by_dim_p.resize(d + 1);
  by_dim_q.resize(d + 1);
  for (Index i = 0; i < p.size(); ++i) by_dim_p[p.dim(i)].push_back(i);
  for (Index i = 0; i < q.size(); ++i) by_dim_q[q.dim(i)].push_back(i);
  for (int k = 0; k <= d; ++k)
    if (by_dim_p[k].size() != by_dim_q[k].size()) return 0;
  std::vector<Index> map(p.size());
  std::size_t count = 0;
  auto check = [&] {
    for (Index i = 0; i < p.size(); ++i) {
      for (Sign s : kSigns) {
        std::set<Index> img, tgt;
        for (Index f : p.faces(i, s)) img.insert(map[f]);
        for (Index f : q.faces(map[i], s)) tgt.insert(f);
        if (img != tgt) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<Index>> perms = by_dim_q;
  for (auto& v : perms) std::sort(v.begin(), v.end());
  // odometer over the product of per-dimension permutations
  auto assign = [&] {
    for (int k = 0; k <= d; ++k)
      for (std::size_t t = 0; t < by_dim_p[k].size(); ++t) map[by_dim_p[k][t]] = perms[k][t];
  };
  while (true) {
    assign();
    if (check()) ++count;
    int k = 0;
    while (k <= d && !std::next_permutation(perms[k].begin(), perms[k].end())) ++k;
    if (k > d) break;
  }
  return count;
}

}  // namespace rdc
