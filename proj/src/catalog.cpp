#include <functional>
#include <unordered_map>

#include "rdc/cylinder.hpp"
#include "rdc/gray.hpp"
#include "rdc/harness.hpp"

namespace rdc {

namespace {

std::string id_list(const Poset& p, const ElementSet& s) {
  std::string out = "[";
  for (const auto& id : p.ids_of(s)) out += (out.size() > 1 ? ", \"" : "\"") + id + "\"";
  return out + "]";
}

class Builder {
 public:
  explicit Builder(const CatalogBounds& b) : b_(b) {}

  void offer(std::string expr, const std::function<Molecule()>& make) {
    std::optional<Molecule> m;
    try {
      m = make();
    } catch (const Error&) {
      return;
    }
    if (m->dim() > b_.max_dim || m->size() > b_.max_elems) return;
    auto& bucket = by_hash_[invariant_hash(m->poset())];
    for (std::size_t i : bucket)
      if (find_iso(out_[i].molecule.poset(), m->poset())) return;
    bucket.push_back(out_.size());
    out_.push_back({std::move(expr), std::move(*m)});
  }

  bool fits(int dim, std::size_t size) const { return dim <= b_.max_dim && size <= b_.max_elems; }

  std::vector<CatalogEntry>& entries() { return out_; }

 private:
  CatalogBounds b_;
  std::vector<CatalogEntry> out_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
};

void unary(Builder& b, const CatalogEntry& e) {
  const Molecule& m = e.molecule;
  const int d = m.dim();
  b.offer("op(" + e.expr + ")", [&] { return opposite(m); });
  for (int k = 1; k <= d; ++k) {
    std::vector<int> j{k};
    b.offer("dual([" + std::to_string(k) + "], " + e.expr + ")", [&] { return dual(j, m); });
  }
  if (!b.fits(d + 1, m.size())) return;
  b.offer("unit(" + e.expr + ")", [&] { return unit_shape(m).shape; });
  if (d >= 1 && m.is_round()) {
    b.offer("lcyl(" + e.expr + ")", [&] { return invertor_shape("L", m).shape; });
    b.offer("rcyl(" + e.expr + ")", [&] { return invertor_shape("R", m).shape; });
    for (Sign s : kSigns) {
      const ElementSet& k = m.boundary_set(d - 1, s);
      b.offer("cyl(" + e.expr + ", " + id_list(m.poset(), k) + ")", [&] { return gray_cylinder(m, k).shape; });
    }
  }
}

void binary(Builder& b, const CatalogEntry& x, const CatalogEntry& y) {
  const Molecule& u = x.molecule;
  const Molecule& v = y.molecule;
  for (int k = 0; k < std::min(u.dim(), v.dim()); ++k)
    if (b.fits(std::max(u.dim(), v.dim()), 0))
      b.offer("paste(" + x.expr + ", " + y.expr + ", " + std::to_string(k) + ")", [&] { return paste(u, v, k); });
  if (u.dim() == v.dim() && u.is_round() && v.is_round() && b.fits(u.dim() + 1, 0))
    b.offer("atom(" + x.expr + ", " + y.expr + ")", [&] { return atom(u, v); });
  if (b.fits(u.dim() + v.dim(), u.size() * v.size()))
    b.offer("gray(" + x.expr + ", " + y.expr + ")", [&] { return gray(u, v); });
}

}  // namespace

std::vector<const CatalogEntry*> Catalog::atoms(int min_dim, int max_dim) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries)
    if (e.molecule.is_atom() && e.molecule.dim() >= min_dim && e.molecule.dim() <= max_dim) out.push_back(&e);
  return out;
}

Catalog enumerate(const CatalogBounds& bounds) {
  Builder b(bounds);
  b.offer("point", [] { return point(); });
  b.offer("arrow", [] { return arrow(); });
  auto& entries = b.entries();
  std::size_t prev_begin = 0;
  for (int level = 1; level <= bounds.depth; ++level) {
    const std::size_t prev_end = entries.size();
    // entries grows while we iterate, so work on indices and copies
    for (std::size_t i = 0; i < prev_end; ++i)
      for (std::size_t j = 0; j < prev_end; ++j) {
        if (i < prev_begin && j < prev_begin) continue;
        const CatalogEntry x = entries[i];
        const CatalogEntry y = entries[j];
        binary(b, x, y);
      }
    for (std::size_t i = prev_begin; i < prev_end; ++i) {
      const CatalogEntry e = entries[i];
      unary(b, e);
    }
    prev_begin = prev_end;
  }
  return {bounds, std::move(entries)};
}

}  // namespace rdc
