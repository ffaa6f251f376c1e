#include "rdc/gray.hpp"

namespace rdc {

GrayProduct::GrayProduct(const Poset& p, const Poset& q) : q_size_(q.size()) {
  std::vector<ElementSpec> specs;
  specs.reserve(p.size() * q.size());
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < q.size(); ++y) {
      ElementSpec e{pair_id(p.id(x), q.id(y)), p.dim(x) + q.dim(y), {}, {}};
      for (Sign a : kSigns) {
        auto& side = a == Sign::Minus ? e.input : e.output;
        for (Index f : p.faces(x, a)) side.push_back(pair_id(p.id(f), q.id(y)));
        for (Index f : q.faces(y, parity(p.dim(x), a))) side.push_back(pair_id(p.id(x), q.id(f)));
      }
      specs.push_back(std::move(e));
    }
  }
  poset_ = Poset::build(std::move(specs));
  pair_.resize(p.size() * q.size());
  factors_.resize(poset_.size());
  for (Index x = 0; x < p.size(); ++x) {
    for (Index y = 0; y < q.size(); ++y) {
      Index i = poset_.at(pair_id(p.id(x), q.id(y)));
      pair_[x * q_size_ + y] = i;
      factors_[i] = {x, y};
    }
  }
}

ElementSet GrayProduct::product(const ElementSet& a, const ElementSet& b) const {
  ElementSet s = poset_.none();
  a.for_each([&](Index x) { b.for_each([&](Index y) { s.insert(at(x, y)); }); });
  return s;
}

ElementSet GrayProduct::either(const ElementSet& a, const ElementSet& b) const {
  ElementSet s = poset_.none();
  for (Index i = 0; i < poset_.size(); ++i) {
    auto [x, y] = factors_[i];
    if (a.contains(x) || b.contains(y)) s.insert(i);
  }
  return s;
}

Poset gray(const Poset& p, const Poset& q) { return GrayProduct(p, q).poset(); }

Molecule gray(const Molecule& u, const Molecule& v) {
  return Molecule(gray(u.poset(), v.poset()), theorem_certificate("gray", {u.certificate(), v.certificate()}));
}

GrayBoundarySides gray_boundary_decomposition(const Molecule& u, const Molecule& v, const GrayProduct& uv, int n,
                                              Sign sign) {
  GrayBoundarySides out{boundary_of(uv.poset(), uv.poset().all(), n, sign), uv.poset().none()};
  for (int k = 0; k <= n; ++k)
    out.formula |= uv.product(u.boundary_set(k, sign), v.boundary_set(n - k, parity(k, sign)));
  return out;
}

GraySplit gray_boundary_split(const Molecule& u, const Molecule& v, const GrayProduct& uv, int n, int j, Sign sign) {
  const Poset& p = uv.poset();
  const auto all_u = u.poset().all();
  const auto all_v = v.poset().all();
  if (sign == Sign::Minus) {
    return {boundary_of(p, uv.product(u.boundary_set(j, Sign::Minus), all_v), n, Sign::Minus),
            boundary_of(p, uv.product(all_u, v.boundary_set(n - j - 1, parity(j, Sign::Plus))), n, Sign::Minus)};
  }
  return {boundary_of(p, uv.product(all_u, v.boundary_set(n - j - 1, parity(j + 1, Sign::Plus))), n, Sign::Plus),
          boundary_of(p, uv.product(u.boundary_set(j, Sign::Plus), all_v), n, Sign::Plus)};
}

IsoMap op_swap_iso(const Poset& p, const Poset& q) {
  const Poset a = gray(p, q).opposite();
  const GrayProduct b(q.opposite(), p.opposite());
  IsoMap map(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    auto split = split_pair_id(a.id(i));
    map[i] = b.poset().at(pair_id(split->second, split->first));
  }
  if (!is_iso(a, b.poset(), map)) throw Error(ErrorKind::IdentityFailed, "swap is not orientation-preserving");
  return map;
}

}  // namespace rdc
