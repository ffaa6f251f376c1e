#include "rdc/marked.hpp"

#include <algorithm>

#include "rdc/gray.hpp"

namespace rdc {

MarkedRdc::MarkedRdc(std::shared_ptr<const Poset> p, ElementSet m) : poset(std::move(p)), marked(std::move(m)) {
  if (marked.universe() != poset->size()) throw Error(ErrorKind::BadInput, "marking does not match the shape");
  marked.for_each([&](Index i) {
    if (poset->dim(i) == 0) throw Error(ErrorKind::BadInput, "marked element " + poset->id(i) + " has dimension 0");
  });
}

void MarkedInclusion::validate() const {
  const Poset& s = source.shape();
  const Poset& t = target.shape();
  if (map.size() != s.size()) throw Error(ErrorKind::BadInput, "inclusion map has the wrong size");
  ElementSet seen = t.none();
  for (Index i = 0; i < s.size(); ++i) {
    const Index x = map[i];
    if (x >= t.size() || seen.contains(x)) throw Error(ErrorKind::BadInput, "inclusion map is not injective");
    seen.insert(x);
    if (t.dim(x) != s.dim(i)) throw Error(ErrorKind::BadInput, "inclusion map changes dimension of " + s.id(i));
    for (Sign a : kSigns) {
      std::vector<Index> img;
      for (Index f : s.faces(i, a)) img.push_back(map[f]);
      std::vector<Index> want = t.faces(x, a);
      std::sort(img.begin(), img.end());
      std::sort(want.begin(), want.end());
      if (img != want) throw Error(ErrorKind::BadInput, "inclusion map does not preserve faces of " + s.id(i));
    }
    if (source.marked.contains(i) && !target.marked.contains(x))
      throw Error(ErrorKind::BadInput, "inclusion map does not preserve the marking of " + s.id(i));
  }
}

ElementSet MarkedInclusion::image() const {
  ElementSet out = target.shape().none();
  for (Index x : map) out.insert(x);
  return out;
}

ElementSet MarkedInclusion::image_of(const ElementSet& s) const {
  ElementSet out = target.shape().none();
  s.for_each([&](Index i) { out.insert(map[i]); });
  return out;
}

MarkedRdc gray_marked(const MarkedRdc& a, const MarkedRdc& b) {
  GrayProduct g(a.shape(), b.shape());
  ElementSet m = g.either(a.marked, b.marked);
  return MarkedRdc(g.poset(), std::move(m));
}

MarkedInclusion pushout_product(const MarkedInclusion& i, const MarkedInclusion& j) {
  GrayProduct g(i.target.shape(), j.target.shape());
  MarkedRdc target(g.poset(), g.either(i.target.marked, j.target.marked));
  const ElementSet all_x = i.target.shape().all();
  const ElementSet all_y = j.target.shape().all();
  const ElementSet ix = i.image();
  const ElementSet jy = j.image();
  const ElementSet carrier = g.product(all_x, jy) | g.product(ix, all_y);
  // X⊗Y′ marks (x,y) with x ∈ A or y ∈ jB′; X′⊗Y with x ∈ iA′ or y ∈ B
  ElementSet marking = g.either(i.target.marked, j.image_of(j.source.marked)) & g.product(all_x, jy);
  marking |= g.either(i.image_of(i.source.marked), j.target.marked) & g.product(ix, all_y);
  std::vector<Index> old;
  Poset src = g.poset().restrict(carrier, &old);
  ElementSet src_marked = src.none();
  for (Index k = 0; k < old.size(); ++k)
    if (marking.contains(old[k])) src_marked.insert(k);
  return {MarkedRdc(std::move(src), std::move(src_marked)), std::move(target), std::move(old)};
}

ElementSet residual(const MarkedInclusion& i) {
  if (!i.entire()) throw Error(ErrorKind::NotEntire, "inclusion is not bijective on elements");
  return i.target.marked - i.image_of(i.source.marked);
}

MarkedRdc opposite(const MarkedRdc& m) {
  // opposite keeps ids and dimensions, so indices are unchanged
  return MarkedRdc(m.shape().opposite(), m.marked);
}

MarkedInclusion opposite(const MarkedInclusion& i) { return {opposite(i.source), opposite(i.target), i.map}; }

bool op_pp_swap_holds(const MarkedInclusion& i, const MarkedInclusion& j, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const MarkedInclusion a = opposite(pushout_product(i, j));
  const MarkedInclusion b = pushout_product(opposite(j), opposite(i));
  IsoMap swap;
  try {
    swap = op_swap_iso(i.target.shape(), j.target.shape());
  } catch (const Error&) {
    return fail("swap is not an isomorphism of targets");
  }
  if (!is_iso(a.target.shape(), b.target.shape(), swap)) return fail("swap is not an isomorphism of targets");
  auto moved = [&](const ElementSet& s) {
    ElementSet out = b.target.shape().none();
    s.for_each([&](Index x) { out.insert(swap[x]); });
    return out;
  };
  if (moved(a.target.marked) != b.target.marked) return fail("target markings differ");
  if (moved(a.image()) != b.image()) return fail("source images differ");
  if (moved(a.image_of(a.source.marked)) != b.image_of(b.source.marked)) return fail("source markings differ");
  return true;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::BoundaryMinimal:
      return "minbd";
    case GeneratorKind::MarkTop:
      return "mark";
    case GeneratorKind::BoundaryMarked:
      return "markbd";
  }
  return "?";
}

Generator make_generator(GeneratorKind kind, const Molecule& atom) {
  const Index top = atom.top();
  const auto target_poset = atom.poset_ptr();
  ElementSet top_marked = atom.poset().none();
  if (kind != GeneratorKind::BoundaryMinimal) {
    if (atom.dim() == 0) throw Error(ErrorKind::ZeroDimensional, "a point cannot be marked");
    top_marked.insert(top);
  }
  MarkedRdc target(target_poset, top_marked);
  if (kind == GeneratorKind::MarkTop) {
    std::vector<Index> id(atom.size());
    for (Index k = 0; k < id.size(); ++k) id[k] = k;
    return {kind, atom, {MarkedRdc(target_poset, atom.poset().none()), std::move(target), std::move(id)}};
  }
  std::vector<Index> old;
  Poset bd = atom.poset().restrict(atom.full_boundary_set(), &old);
  ElementSet none = bd.none();
  return {kind, atom, {MarkedRdc(std::move(bd), std::move(none)), std::move(target), std::move(old)}};
}

namespace {

std::vector<Generator> family(const std::vector<Molecule>& atoms, int max_dim, std::vector<GeneratorKind> kinds) {
  std::vector<Generator> out;
  for (const auto& u : atoms) {
    if (!u.is_atom() || u.dim() > max_dim) continue;
    for (GeneratorKind k : kinds) {
      if (k != GeneratorKind::BoundaryMinimal && u.dim() == 0) continue;
      out.push_back(make_generator(k, u));
    }
  }
  return out;
}

}  // namespace

std::vector<Generator> generators_M(const std::vector<Molecule>& atoms, int max_dim) {
  return family(atoms, max_dim, {GeneratorKind::BoundaryMinimal, GeneratorKind::MarkTop});
}

std::vector<Generator> generators_Mprime(const std::vector<Molecule>& atoms, int max_dim) {
  return family(atoms, max_dim, {GeneratorKind::BoundaryMinimal, GeneratorKind::BoundaryMarked});
}

std::vector<Generator> generators_J(const std::vector<Molecule>& atoms, int n) {
  std::vector<Generator> out;
  for (const auto& u : atoms)
    if (u.is_atom() && u.dim() > n) out.push_back(make_generator(GeneratorKind::MarkTop, u));
  return out;
}

}  // namespace rdc
