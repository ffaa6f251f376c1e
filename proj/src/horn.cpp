#include "rdc/horn.hpp"

#include <functional>
#include <unordered_set>

namespace rdc {

AtomicHorn atomic_horn(const Molecule& u, Index x) {
  const Index top = u.top();
  if (u.dim() == 0) throw Error(ErrorKind::ZeroDimensional, "a point has no horns");
  const Poset& p = u.poset();
  if (x >= p.size()) throw Error(ErrorKind::UnknownElement, "no element with index " + std::to_string(x));
  std::optional<Sign> sign;
  for (Sign s : kSigns)
    for (Index f : p.faces(top, s))
      if (f == x) sign = s;
  if (!sign) throw Error(ErrorKind::NotAFacet, p.id(x) + " is not a face of the top element");
  ElementSet carrier = u.full_boundary_set();
  carrier.erase(x);
  return {u, x, *sign, std::move(carrier)};
}

AtomicHorn atomic_horn(const Molecule& u, std::string_view x) { return atomic_horn(u, u.poset().at(x)); }

MarkedInclusion horn_inclusion(const AtomicHorn& h, const ElementSet& a, const ElementSet& a_prime) {
  if (!a.is_subset_of(h.carrier)) throw Error(ErrorKind::BadInput, "marking is not inside the horn");
  std::vector<Index> old;
  Poset lambda = h.atom.poset().restrict(h.carrier, &old);
  ElementSet marked = lambda.none();
  for (Index j = 0; j < old.size(); ++j)
    if (a.contains(old[j])) marked.insert(j);
  return {MarkedRdc(std::move(lambda), std::move(marked)), MarkedRdc(h.atom.poset_ptr(), a_prime), std::move(old)};
}

namespace {

Sign glued_sign(Side side) { return side == Side::Left ? Sign::Plus : Sign::Minus; }

bool step_applies(Recogniser& r, const ElementSet& s, const ElementSet& piece, int k, Side side) {
  const Poset& p = r.ambient();
  const Sign g = glued_sign(side);
  const ElementSet gb = boundary_of(p, piece, k, g);
  if ((piece & s) != gb) return false;
  return r.is_submolecule(gb, boundary_of(p, s, k, -g));
}

ElementSet map_set(const ElementSet& s, const std::vector<Index>& map, std::size_t size) {
  ElementSet out(size);
  s.for_each([&](Index i) { out.insert(map[i]); });
  return out;
}

ElementSet map_set(const ElementSet& s, const std::vector<std::optional<Index>>& map, std::size_t size) {
  ElementSet out(size);
  s.for_each([&](Index i) {
    if (!map[i]) throw Error(ErrorKind::ClauseViolation, "a pasted piece meets the interior of the hole");
    out.insert(*map[i]);
  });
  return out;
}

template <typename Map>
std::vector<ContextStep> map_steps(const std::vector<ContextStep>& steps, const Map& map, std::size_t size) {
  std::vector<ContextStep> out;
  for (const auto& st : steps) out.push_back({map_set(st.piece, map, size), st.k, st.side});
  return out;
}

ContextShape paste_clause(const Molecule& u, const ElementSet& image, const ContextShape& c, std::optional<int> k,
                          Side side) {
  const int level = k.value_or(u.dim() - 1);
  if (!u.is_round()) throw Error(ErrorKind::ClauseViolation, "pasted molecule is not round");
  if (u.dim() != level + 1) throw Error(ErrorKind::ClauseViolation, "pasted molecule must have dimension k+1");
  if (level >= c.ambient.dim()) throw Error(ErrorKind::ClauseViolation, "pasting level must be below the context dimension");
  Pasting res{c.ambient, {}, {}};
  try {
    auto iota = inclusion_of(c.ambient, image);
    res = side == Side::Left ? paste_at(u, iota, c.ambient, Side::Left, level)
                             : paste_at(c.ambient, iota, u, Side::Right, level);
  } catch (const Error& e) {
    throw Error(ErrorKind::ClauseViolation, std::string(side == Side::Left ? "left" : "right") + " pasting: " + e.what());
  }
  const IsoMap& amb = side == Side::Left ? res.right : res.left;
  const IsoMap& piece = side == Side::Left ? res.left : res.right;
  const std::size_t n = res.result.size();
  ContextShape out{res.result, map_set(c.hole, amb, n), map_steps(c.derivation, amb, n)};
  ElementSet pasted(n);
  for (Index i : piece) pasted.insert(i);
  out.derivation.push_back({std::move(pasted), level, side});
  return out;
}

}  // namespace

bool replay(const Poset& p, const ElementSet& ambient, const ElementSet& hole, const std::vector<ContextStep>& steps) {
  if (!hole.is_subset_of(ambient)) return false;
  Recogniser r(p);
  ElementSet s = hole;
  for (const auto& st : steps) {
    if (!st.piece.is_subset_of(ambient) || !p.is_closed(st.piece) || p.dim_of(st.piece) != st.k + 1) return false;
    if (!step_applies(r, s, st.piece, st.k, st.side)) return false;
    s |= st.piece;
  }
  return s == ambient;
}

bool replay(const ContextShape& c) {
  return replay(c.ambient.poset(), c.ambient.poset().all(), c.hole, c.derivation);
}

ContextShape classified_context(const AtomicHorn& h, std::vector<Index>* to_atom) {
  const Molecule& u = h.atom;
  std::vector<Index> old;
  Molecule w = restrict_molecule(u, u.boundary_set(u.dim() - 1, h.sign),
                                 theorem_certificate("boundary", {u.certificate()},
                                                     {{"n", std::to_string(u.dim() - 1)},
                                                      {"sign", std::string(1, sign_char(h.sign))}}),
                                 &old);
  ElementSet hole = w.poset().none();
  const ElementSet cl = u.poset().closure_of(h.facet);
  for (Index j = 0; j < old.size(); ++j)
    if (cl.contains(old[j])) hole.insert(j);
  if (to_atom) *to_atom = old;
  return {std::move(w), std::move(hole), {}};
}

ContextShape identity_context(const Molecule& hole) {
  if (!hole.is_round()) throw Error(ErrorKind::ClauseViolation, "identity context needs a round hole");
  return {hole, hole.poset().all(), {}};
}

ContextShape identity_context(const Molecule& v, const Molecule& w) {
  try {
    return identity_context(atom(v, w));
  } catch (const Error& e) {
    throw Error(ErrorKind::ClauseViolation, std::string("identity: ") + e.what());
  }
}

ContextShape left_paste(const Molecule& u, const ElementSet& image, const ContextShape& c, std::optional<int> k) {
  return paste_clause(u, image, c, k, Side::Left);
}

ContextShape right_paste(const Molecule& u, const ElementSet& image, const ContextShape& c, std::optional<int> k) {
  return paste_clause(u, image, c, k, Side::Right);
}

ContextShape compose(const ContextShape& inner, const ContextShape& outer) {
  const int d = outer.ambient.poset().dim_of(outer.hole);
  if (inner.ambient.dim() != d) throw Error(ErrorKind::ClauseViolation, "composed contexts have different dimensions");
  Substitution sub{outer.ambient, {}, {}};
  try {
    sub = substitute(outer.ambient, outer.hole, inner.ambient);
  } catch (const Error& e) {
    throw Error(ErrorKind::ClauseViolation, std::string("composition: ") + e.what());
  }
  const std::size_t n = sub.result.size();
  ContextShape out{sub.result, map_set(inner.hole, sub.inner, n), map_steps(inner.derivation, sub.inner, n)};
  auto rest = map_steps(outer.derivation, sub.outer, n);
  out.derivation.insert(out.derivation.end(), rest.begin(), rest.end());
  return out;
}

ContextShape promote(const ContextShape& c, const Molecule& v, const Molecule& w) {
  const int d = c.ambient.poset().dim_of(c.hole);
  Substitution sub{c.ambient, {}, {}};
  try {
    Molecule cell = atom(v, w);
    if (cell.dim() != d + 1) throw Error(ErrorKind::DimMismatch, "promoted cells must have the hole's dimension");
    sub = substitute(c.ambient, c.hole, cell);
  } catch (const Error& e) {
    throw Error(ErrorKind::ClauseViolation, std::string("promotion: ") + e.what());
  }
  const std::size_t n = sub.result.size();
  ElementSet hole(n);
  for (Index i : sub.inner) hole.insert(i);
  return {sub.result, std::move(hole), map_steps(c.derivation, sub.outer, n)};
}

ContextShape promote(const ContextShape& c) {
  Molecule h = restrict_molecule(c.ambient, c.hole, theorem_certificate("hole", {c.ambient.certificate()}));
  return promote(c, h, h);
}

std::optional<std::vector<ContextStep>> find_A_derivation(const Poset& p, const ElementSet& w, const ElementSet& h,
                                                          const ElementSet& a) {
  Recogniser r(p);
  return find_A_derivation(r, w, h, a);
}

std::optional<std::vector<ContextStep>> find_A_derivation(Recogniser& r, const ElementSet& w, const ElementSet& h,
                                                          const ElementSet& a) {
  const Poset& p = r.ambient();
  if (!h.is_subset_of(w)) return std::nullopt;
  if (!(p.maximal(w) - h).is_subset_of(a)) return std::nullopt;
  std::vector<Index> candidates;
  ((w - h) & a).for_each([&](Index i) {
    if (p.dim(i) > 0) candidates.push_back(i);
  });
  std::unordered_set<ElementSet, ElementSetHash> failed;
  std::vector<ContextStep> path;
  std::function<bool(const ElementSet&)> dfs = [&](const ElementSet& s) {
    if (s == w) return true;
    if (failed.contains(s)) return false;
    for (Index c : candidates) {
      if (s.contains(c)) continue;
      const ElementSet piece = p.closure_of(c);
      const int k = p.dim(c) - 1;
      for (Side side : {Side::Left, Side::Right}) {
        if (!step_applies(r, s, piece, k, side)) continue;
        path.push_back({piece, k, side});
        if (dfs(s | piece)) return true;
        path.pop_back();
      }
    }
    failed.insert(s);
    return false;
  };
  if (!dfs(h)) return std::nullopt;
  return path;
}

std::optional<std::vector<ContextStep>> find_A_derivation(const ContextShape& c, const ElementSet& a) {
  return find_A_derivation(c.ambient.poset(), c.ambient.poset().all(), c.hole, a);
}

ElementSet enlarged_marking(const AtomicHorn& h, const ElementSet& a) {
  const Index top = h.atom.top();
  ElementSet out = a;
  out.insert(top);
  bool covered = true;
  for (Index f : h.atom.poset().faces(top, -h.sign)) covered = covered && a.contains(f);
  if (covered) out.insert(h.facet);
  return out;
}

MarkedHorn marked_horn(const AtomicHorn& h, const ElementSet& a) {
  const Poset& p = h.atom.poset();
  if (!a.is_subset_of(h.carrier)) throw Error(ErrorKind::BadInput, "marking is not inside the horn");
  a.for_each([&](Index i) {
    if (p.dim(i) == 0) throw Error(ErrorKind::BadInput, "marked element " + p.id(i) + " has dimension 0");
  });
  const ElementSet w = h.atom.boundary_set(h.atom.dim() - 1, h.sign);
  auto d = find_A_derivation(p, w, p.closure_of(h.facet), a);
  if (!d) throw Error(ErrorKind::NotAContext, "the classified context is not an A-context");
  return {h, a, enlarged_marking(h, a), std::move(*d)};
}

std::optional<MarkedHorn> recognise_marked_horn(const MarkedInclusion& inc, std::string* why, Recogniser* shared) {
  auto fail = [&](std::string msg) -> std::optional<MarkedHorn> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  const Poset& t = inc.target.shape();
  if (t.maximal_elements().count() != 1) return fail("target has more than one maximal element");
  Molecule u(t, theorem_certificate("target", {}));
  if (u.dim() == 0) return fail("target is a point");
  if (!u.is_round()) return fail("target is not round");
  const ElementSet image = inc.image();
  const ElementSet bd = u.full_boundary_set();
  if (!image.is_subset_of(bd)) return fail("source is not inside the boundary");
  const ElementSet missing = bd - image;
  if (missing.count() != 1) return fail("source misses " + std::to_string(missing.count()) + " boundary elements");
  AtomicHorn h = [&] {
    try {
      return atomic_horn(u, missing.indices().front());
    } catch (const Error&) {
      return AtomicHorn{u, 0, Sign::Minus, t.none()};
    }
  }();
  if (h.carrier != image) return fail("missing element " + t.id(missing.indices().front()) + " is not a facet");
  const ElementSet a = inc.image_of(inc.source.marked);
  const ElementSet w = u.boundary_set(u.dim() - 1, h.sign);
  if (shared && shared->ambient() != t) throw Error(ErrorKind::BadInput, "shared recogniser has another ambient");
  std::optional<Recogniser> own;
  Recogniser& r = shared ? *shared : own.emplace(t);
  auto d = find_A_derivation(r, w, t.closure_of(h.facet), a);
  if (!d) return fail("the classified context is not an A-context");
  if (inc.target.marked != enlarged_marking(h, a)) return fail("target marking does not follow the marked horn rule");
  return MarkedHorn{std::move(h), a, inc.target.marked, std::move(*d)};
}

namespace {

std::string facet_id(const AtomicHorn& h, const Molecule& v, Side order) {
  const std::string& x = h.atom.poset().id(h.facet);
  const std::string& top = v.poset().id(v.top());
  return order == Side::Left ? pair_id(x, top) : pair_id(top, x);
}

std::string describe(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (const auto& id : p.ids_of(s)) out += (out.size() > 1 ? "," : "") + id;
  return out + "}";
}

}  // namespace

AtomicHorn pp_horn(const AtomicHorn& h, const Molecule& v, Side order) {
  const auto lambda = horn_inclusion(h, h.atom.poset().none(), h.atom.poset().none());
  const auto bd = make_generator(GeneratorKind::BoundaryMinimal, v).inclusion;
  const auto pp = order == Side::Left ? pushout_product(lambda, bd) : pushout_product(bd, lambda);
  Molecule product(pp.target.shape(), theorem_certificate("gray", {}));
  const std::string id = facet_id(h, v, order);
  AtomicHorn expected = atomic_horn(product, product.poset().at(id));
  const Sign want = order == Side::Left ? h.sign : parity(v.dim(), h.sign);
  if (expected.sign != want)
    throw Error(ErrorKind::IdentityFailed, id + " lies on the " + (expected.sign == Sign::Minus ? "input" : "output") +
                                               " side of the product");
  const ElementSet image = pp.image();
  if (image != expected.carrier) {
    const Poset& p = product.poset();
    throw Error(ErrorKind::IdentityFailed, "pushout-product image differs from the horn at " + id + ": extra " +
                                               describe(p, image - expected.carrier) + ", missing " +
                                               describe(p, expected.carrier - image));
  }
  return expected;
}

MarkedHorn pp_marked_horn(const MarkedHorn& mh, const Generator& g, Side order, Recogniser* shared) {
  if (g.kind == GeneratorKind::MarkTop) throw Error(ErrorKind::BadInput, "marking generators are not in M′");
  const auto lambda = mh.inclusion();
  const auto pp = order == Side::Left ? pushout_product(lambda, g.inclusion) : pushout_product(g.inclusion, lambda);
  std::string why;
  auto r = recognise_marked_horn(pp, &why, shared);
  if (!r) throw Error(ErrorKind::RecognitionFailed, why);
  const std::string id = facet_id(mh.horn, g.atom, order);
  const std::string& got = pp.target.shape().id(r->horn.facet);
  if (got != id) throw Error(ErrorKind::RecognitionFailed, "recognised facet " + got + " instead of " + id);
  return *r;
}

}  // namespace rdc
