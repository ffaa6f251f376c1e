#include "rdc/molecule.hpp"

#include <algorithm>

namespace rdc {

Molecule::Molecule(Poset poset, CertPtr certificate)
    : poset_(std::make_shared<const Poset>(std::move(poset))), cert_(std::move(certificate)) {
  const auto& p = *poset_;
  empty_ = p.none();
  all_ = p.all();
  const int d = p.dim();
  for (int n = 0; n < d; ++n)
    bd_.push_back({boundary_of(p, all_, n, Sign::Minus), boundary_of(p, all_, n, Sign::Plus)});
  for (int n = 0; n < d && round_; ++n) {
    const auto lower = n == 0 ? empty_ : (bd_[n - 1][0] | bd_[n - 1][1]);
    round_ = (bd_[n][0] & bd_[n][1]) == lower;
  }
  maximal_count_ = p.maximal_elements().count();
}

const ElementSet& Molecule::boundary_set(int n, Sign s) const {
  if (n < 0) return empty_;
  if (n >= dim()) return all_;
  return bd_[n][slot(s)];
}

Index Molecule::top() const {
  if (!is_atom()) throw Error(ErrorKind::NotAnAtom, "shape has more than one maximal element");
  return poset_->size() - 1;
}

ElementSet SubmoleculeInclusion::image() const {
  ElementSet s = target.poset().none();
  for (Index i : map) s.insert(i);
  return s;
}

namespace {

/// Pushout of p1 <- glued part -> p2, where glue[j] is the p1 element that
/// the p2 element j is identified with (if any). Left elements are tagged
/// in0:, the rest of the right side in1:.
struct GluedSpecs {
  std::vector<ElementSpec> specs;
  std::vector<std::string> left_names;
  std::vector<std::string> right_names;
};

GluedSpecs glue_specs(const Poset& p1, const Poset& p2, const std::vector<std::optional<Index>>& glue) {
  GluedSpecs g;
  g.left_names.resize(p1.size());
  g.right_names.resize(p2.size());
  for (Index i = 0; i < p1.size(); ++i) g.left_names[i] = tag_id("in0", p1.id(i));
  for (Index j = 0; j < p2.size(); ++j)
    g.right_names[j] = glue[j] ? g.left_names[*glue[j]] : tag_id("in1", p2.id(j));
  for (Index i = 0; i < p1.size(); ++i) {
    ElementSpec e{g.left_names[i], p1.dim(i), {}, {}};
    for (Index f : p1.faces(i, Sign::Minus)) e.input.push_back(g.left_names[f]);
    for (Index f : p1.faces(i, Sign::Plus)) e.output.push_back(g.left_names[f]);
    g.specs.push_back(std::move(e));
  }
  for (Index j = 0; j < p2.size(); ++j) {
    if (glue[j]) continue;
    ElementSpec e{g.right_names[j], p2.dim(j), {}, {}};
    for (Index f : p2.faces(j, Sign::Minus)) e.input.push_back(g.right_names[f]);
    for (Index f : p2.faces(j, Sign::Plus)) e.output.push_back(g.right_names[f]);
    g.specs.push_back(std::move(e));
  }
  return g;
}

Pasting finish(GluedSpecs g, CertPtr cert) {
  Molecule m(Poset::build(std::move(g.specs)), std::move(cert));
  Pasting out{m, {}, {}};
  for (const auto& n : g.left_names) out.left.push_back(m.poset().at(n));
  for (const auto& n : g.right_names) out.right.push_back(m.poset().at(n));
  return out;
}

/// Iso from the sub-poset of q on qs to the sub-poset of p on ps, expressed
/// on ambient indices; nullopt when none exists.
std::optional<std::vector<std::optional<Index>>> match_subsets(const Poset& q, const ElementSet& qs, const Poset& p,
                                                               const ElementSet& ps) {
  std::vector<Index> qi, pi;
  auto qr = q.restrict(qs, &qi);
  auto pr = p.restrict(ps, &pi);
  auto iso = find_iso(qr, pr);
  if (!iso) return std::nullopt;
  std::vector<std::optional<Index>> glue(q.size());
  for (Index j = 0; j < qr.size(); ++j) glue[qi[j]] = pi[(*iso)[j]];
  return glue;
}

}  // namespace

Molecule point() {
  return Molecule(Poset::build({ElementSpec{"pt", 0, {}, {}}}), point_certificate());
}

Molecule globe(int n) {
  if (n < 0) throw Error(ErrorKind::BadInput, "negative globe dimension");
  if (n == 0) return point();
  Molecule g = globe(n - 1);
  Molecule a = atom(g, g);
  const std::string t = n == 1 ? std::string("pt") : std::to_string(n - 1);
  const std::string lower = std::to_string(n - 1);
  Poset named = a.poset().relabel([&](const std::string& id) -> std::string {
    if (id == "top") return std::to_string(n);
    if (id == tag_id("in0", t)) return lower + "-";
    if (id == tag_id("in1", t)) return lower + "+";
    return id.substr(4);
  });
  return Molecule(std::move(named), a.certificate());
}

Molecule arrow() { return globe(1); }

Molecule restrict_molecule(const Molecule& m, const ElementSet& s, CertPtr certificate, std::vector<Index>* old_index) {
  return Molecule(m.poset().restrict(s, old_index), std::move(certificate));
}

SubmoleculeInclusion identity_inclusion(const Molecule& m) {
  IsoMap id(m.size());
  for (Index i = 0; i < id.size(); ++i) id[i] = i;
  return {m, m, std::move(id), m.is_round()};
}

SubmoleculeInclusion boundary(const Molecule& m, int n, Sign s) {
  if (n < 0) throw Error(ErrorKind::LevelOutOfRange, "negative boundary level");
  if (n >= m.dim()) return identity_inclusion(m);
  std::vector<Index> old;
  auto cert = theorem_certificate("boundary", {m.certificate()},
                                  {{"n", std::to_string(n)}, {"sign", std::string(1, sign_char(s))}});
  Molecule src = restrict_molecule(m, m.boundary_set(n, s), cert, &old);
  return {src, m, old, false};
}

SubmoleculeInclusion inclusion_of(const Molecule& target, const ElementSet& image) {
  Recogniser r(target.poset());
  if (!r.is_submolecule(image, target.poset().all()))
    throw Error(ErrorKind::RecognitionFailed, "subset is not a submolecule");
  std::vector<Index> old;
  Molecule src = restrict_molecule(target, image, r.certify(image), &old);
  const bool rw = src.dim() == target.dim() && src.is_round();
  return {src, target, old, rw};
}

SubmoleculeInclusion compose(const SubmoleculeInclusion& inner, const SubmoleculeInclusion& outer) {
  if (!(inner.target.poset() == outer.source.poset()))
    throw Error(ErrorKind::BadInput, "inclusions are not composable");
  IsoMap map(inner.map.size());
  for (Index i = 0; i < map.size(); ++i) map[i] = outer.map[inner.map[i]];
  const bool rw = inner.source.dim() == outer.target.dim() && inner.source.is_round();
  return {inner.source, outer.target, std::move(map), rw};
}

Pasting paste_with_maps(const Molecule& m1, const Molecule& m2, int k) {
  if (k < 0) throw Error(ErrorKind::LevelOutOfRange, "negative pasting level");
  auto glue = match_subsets(m2.poset(), m2.boundary_set(k, Sign::Minus), m1.poset(), m1.boundary_set(k, Sign::Plus));
  if (!glue) throw Error(ErrorKind::BoundaryMismatch, "output " + std::to_string(k) + "-boundary of the first factor is not isomorphic to the input of the second");
  return finish(glue_specs(m1.poset(), m2.poset(), *glue),
                paste_certificate(k, m1.certificate(), m2.certificate()));
}

Molecule paste(const Molecule& m1, const Molecule& m2, int k) { return paste_with_maps(m1, m2, k).result; }

Pasting paste_at(const Molecule& m1, const SubmoleculeInclusion& iota, const Molecule& m2, Side side,
                 std::optional<int> level) {
  const Molecule& pasted = side == Side::Left ? m1 : m2;
  const Molecule& receiving = side == Side::Left ? m2 : m1;
  const int k = level.value_or(pasted.dim() - 1);
  if (k < 0) throw Error(ErrorKind::LevelOutOfRange, "pasting level " + std::to_string(k));
  if (!(iota.target.poset() == receiving.poset()))
    throw Error(ErrorKind::NotRewritable, "inclusion does not land in the receiving molecule");
  const Sign pasted_sign = side == Side::Left ? Sign::Plus : Sign::Minus;
  const auto& bd = receiving.boundary_set(k, -pasted_sign);
  const auto hole = iota.image();
  if (!hole.is_subset_of(bd)) throw Error(ErrorKind::NotRewritable, "image is not inside the k-boundary");
  if (iota.source.dim() != receiving.poset().dim_of(bd))
    throw Error(ErrorKind::NotRewritable, "dimension drop between the hole and the k-boundary");
  Recogniser r(receiving.poset());
  if (!r.is_submolecule(hole, bd)) throw Error(ErrorKind::NotRewritable, "image is not a submolecule of the k-boundary");
  auto glue_pasted = match_subsets(pasted.poset(), pasted.boundary_set(k, pasted_sign), receiving.poset(), hole);
  if (!glue_pasted) throw Error(ErrorKind::BoundaryMismatch, "pasted boundary does not match the hole");

  std::map<std::string, std::string> params{{"k", std::to_string(k)}, {"side", side == Side::Left ? "left" : "right"}};
  auto cert = theorem_certificate("paste_at", {m1.certificate(), m2.certificate()}, params);
  if (side == Side::Right) {
    // m2 is pasted and glues onto m1
    return finish(glue_specs(m1.poset(), m2.poset(), *glue_pasted), cert);
  }
  // m1 is pasted; express the gluing as m2 elements identified with m1 elements
  std::vector<std::optional<Index>> glue(m2.size());
  for (Index i = 0; i < m1.size(); ++i)
    if ((*glue_pasted)[i]) glue[*(*glue_pasted)[i]] = i;
  return finish(glue_specs(m1.poset(), m2.poset(), glue), cert);
}

Substitution substitute(const Molecule& outer, const ElementSet& hole, const Molecule& inner) {
  const Poset& p = outer.poset();
  const int d = p.dim_of(hole);
  if (!p.is_closed(hole) || !is_round_set(p, hole))
    throw Error(ErrorKind::NotRewritable, "hole is not a closed round subset");
  if (inner.dim() != d && inner.dim() != d + 1)
    throw Error(ErrorKind::DimMismatch, "substituted molecule has the wrong dimension");
  if (!inner.is_round()) throw Error(ErrorKind::NotRound, "substituted molecule is not round");
  std::vector<std::optional<Index>> glue(inner.size());
  for (Sign s : kSigns) {
    auto m = match_subsets(inner.poset(), inner.boundary_set(d - 1, s), p, boundary_of(p, hole, d - 1, s));
    if (!m) throw Error(ErrorKind::BoundaryMismatch, "boundaries of the hole and the substituted molecule differ");
    for (Index j = 0; j < inner.size(); ++j) {
      if (!(*m)[j]) continue;
      if (glue[j] && *glue[j] != *(*m)[j]) throw Error(ErrorKind::BoundaryMismatch, "boundary isomorphisms disagree");
      glue[j] = (*m)[j];
    }
  }
  const ElementSet interior =
      hole - (boundary_of(p, hole, d - 1, Sign::Minus) | boundary_of(p, hole, d - 1, Sign::Plus));
  std::vector<std::string> outer_names(p.size());
  for (Index i = 0; i < p.size(); ++i)
    if (!interior.contains(i)) outer_names[i] = tag_id("in0", p.id(i));
  std::vector<std::string> inner_names(inner.size());
  for (Index j = 0; j < inner.size(); ++j)
    inner_names[j] = glue[j] ? outer_names[*glue[j]] : tag_id("in1", inner.poset().id(j));
  std::vector<ElementSpec> specs;
  auto add = [&](const Poset& q, Index i, const std::vector<std::string>& names) {
    ElementSpec e{names[i], q.dim(i), {}, {}};
    for (Sign s : kSigns)
      for (Index f : q.faces(i, s)) {
        if (names[f].empty()) throw Error(ErrorKind::NotRewritable, "an element outside the hole has a face inside it");
        (s == Sign::Minus ? e.input : e.output).push_back(names[f]);
      }
    specs.push_back(std::move(e));
  };
  for (Index i = 0; i < p.size(); ++i)
    if (!interior.contains(i)) add(p, i, outer_names);
  for (Index j = 0; j < inner.size(); ++j)
    if (!glue[j]) add(inner.poset(), j, inner_names);
  auto cert = theorem_certificate("substitute", {outer.certificate(), inner.certificate()});
  Molecule m(Poset::build(std::move(specs)), std::move(cert));
  Substitution out{m, std::vector<std::optional<Index>>(p.size()), IsoMap(inner.size())};
  for (Index i = 0; i < p.size(); ++i)
    if (!interior.contains(i)) out.outer[i] = m.poset().at(outer_names[i]);
  for (Index j = 0; j < inner.size(); ++j) out.inner[j] = m.poset().at(inner_names[j]);
  return out;
}

Molecule atom(const Molecule& input, const Molecule& output) {
  if (input.dim() != output.dim()) throw Error(ErrorKind::DimMismatch, "input and output dimensions differ");
  if (!input.is_round() || !output.is_round()) throw Error(ErrorKind::NotRound, "atom sides must be round");
  const int d = input.dim();
  std::vector<std::optional<Index>> glue(output.size());
  if (d > 0) {
    auto gm = match_subsets(output.poset(), output.boundary_set(d - 1, Sign::Minus), input.poset(),
                            input.boundary_set(d - 1, Sign::Minus));
    auto gp = match_subsets(output.poset(), output.boundary_set(d - 1, Sign::Plus), input.poset(),
                            input.boundary_set(d - 1, Sign::Plus));
    if (!gm || !gp) throw Error(ErrorKind::BoundaryMismatch, "sides have different boundaries");
    for (Index j = 0; j < output.size(); ++j) {
      if ((*gm)[j] && (*gp)[j] && *(*gm)[j] != *(*gp)[j])
        throw Error(ErrorKind::BoundaryMismatch, "boundary isomorphisms disagree");
      glue[j] = (*gm)[j] ? (*gm)[j] : (*gp)[j];
    }
  }
  auto g = glue_specs(input.poset(), output.poset(), glue);
  ElementSpec top{"top", d + 1, {}, {}};
  for (Index i = 0; i < input.size(); ++i)
    if (input.poset().dim(i) == d) top.input.push_back(g.left_names[i]);
  for (Index j = 0; j < output.size(); ++j)
    if (output.poset().dim(j) == d) top.output.push_back(g.right_names[j]);
  g.specs.push_back(std::move(top));
  return Molecule(Poset::build(std::move(g.specs)), atom_certificate(input.certificate(), output.certificate()));
}

Molecule merger(const Molecule& m) {
  if (m.dim() < 1) throw Error(ErrorKind::ZeroDimensional, "merger of a point");
  if (!m.is_round()) throw Error(ErrorKind::NotRound, "merger of a non-round molecule");
  return atom(boundary(m, m.dim() - 1, Sign::Minus).source, boundary(m, m.dim() - 1, Sign::Plus).source);
}

Molecule dual(std::span<const int> dims, const Molecule& m) {
  std::string j;
  for (int d : dims) j += (j.empty() ? "" : ",") + std::to_string(d);
  return Molecule(m.poset().dual(dims), theorem_certificate("dual", {m.certificate()}, {{"J", j}}));
}

Molecule opposite(const Molecule& m) {
  std::vector<int> odd;
  for (int d = 1; d <= m.dim(); d += 2) odd.push_back(d);
  return Molecule(m.poset().dual(odd), theorem_certificate("op", {m.certificate()}));
}

std::optional<GeneralisedPasting> recognise_generalised_pasting(Recogniser& r, const ElementSet& u, const ElementSet& v,
                                                                int k) {
  const Poset& p = r.ambient();
  if (k < 0 || !r.is_molecule(u) || !r.is_molecule(v)) return std::nullopt;
  const auto meet = u & v;
  const auto join = u | v;
  if (!r.is_submolecule(meet, boundary_of(p, u, k, Sign::Plus))) return std::nullopt;
  if (!r.is_submolecule(meet, boundary_of(p, v, k, Sign::Minus))) return std::nullopt;
  const auto jm = boundary_of(p, join, k, Sign::Minus);
  const auto jp = boundary_of(p, join, k, Sign::Plus);
  if (!r.is_molecule(jm) || !r.is_molecule(jp)) return std::nullopt;
  if (!r.is_submolecule(boundary_of(p, u, k, Sign::Minus), jm)) return std::nullopt;
  if (!r.is_submolecule(boundary_of(p, v, k, Sign::Plus), jp)) return std::nullopt;
  return GeneralisedPasting{k, u, v};
}

namespace {

/// A molecule built from pieces of an ambient poset, with the map from
/// ambient indices to its own indices.
struct Tracked {
  Molecule molecule;
  std::vector<std::optional<Index>> from_ambient;
};

Tracked track_subset(const Poset& ambient, const ElementSet& s) {
  std::vector<Index> old;
  Molecule m(ambient.restrict(s, &old), theorem_certificate("subset", {}));
  std::vector<std::optional<Index>> from(ambient.size());
  for (Index j = 0; j < old.size(); ++j) from[old[j]] = j;
  return {std::move(m), std::move(from)};
}

SubmoleculeInclusion tracked_inclusion(const Poset& ambient, const Tracked& into, const ElementSet& s) {
  std::vector<Index> old;
  Molecule src(ambient.restrict(s, &old), theorem_certificate("subset", {}));
  IsoMap map;
  for (Index a : old) {
    if (!into.from_ambient[a]) throw Error(ErrorKind::BoundaryMismatch, "hole is not inside the partial factorisation");
    map.push_back(*into.from_ambient[a]);
  }
  const bool rw = src.dim() == into.molecule.dim() && src.is_round();
  return {src, into.molecule, std::move(map), rw};
}

/// Paste a piece of the ambient onto a tracked molecule.
Tracked paste_piece(const Poset& ambient, const Tracked& base, const ElementSet& piece, int k, Side side) {
  const Sign glued = side == Side::Right ? Sign::Minus : Sign::Plus;
  const auto hole = boundary_of(ambient, piece, k, glued);
  auto iota = tracked_inclusion(ambient, base, hole);
  Tracked p = track_subset(ambient, piece);
  Pasting res = side == Side::Right ? paste_at(base.molecule, iota, p.molecule, Side::Right, k)
                                    : paste_at(p.molecule, iota, base.molecule, Side::Left, k);
  const IsoMap& base_map = side == Side::Right ? res.left : res.right;
  const IsoMap& piece_map = side == Side::Right ? res.right : res.left;
  std::vector<std::optional<Index>> from(ambient.size());
  for (Index a = 0; a < ambient.size(); ++a) {
    if (base.from_ambient[a]) from[a] = base_map[*base.from_ambient[a]];
    else if (p.from_ambient[a]) from[a] = piece_map[*p.from_ambient[a]];
  }
  return {res.result, std::move(from)};
}

bool uniquely_iso(const Tracked& built, const Poset& target) {
  auto isos = all_isos(built.molecule.poset(), target, 2);
  return isos.size() == 1;
}

}  // namespace

GencpFactorisations check_gencp_factorisations(const Poset& ambient, const GeneralisedPasting& gp) {
  GencpFactorisations out;
  const auto join = gp.left | gp.right;
  const Poset whole = ambient.restrict(join);
  try {
    Tracked a = track_subset(ambient, boundary_of(ambient, join, gp.k, Sign::Minus));
    a = paste_piece(ambient, a, gp.left, gp.k, Side::Right);
    a = paste_piece(ambient, a, gp.right, gp.k, Side::Right);
    out.input_side = uniquely_iso(a, whole);
    if (!out.input_side) out.detail += "input-side factorisation is not uniquely isomorphic; ";
  } catch (const Error& e) {
    out.detail += std::string("input-side factorisation: ") + e.what() + "; ";
  }
  try {
    Tracked b = track_subset(ambient, boundary_of(ambient, join, gp.k, Sign::Plus));
    b = paste_piece(ambient, b, gp.right, gp.k, Side::Left);
    b = paste_piece(ambient, b, gp.left, gp.k, Side::Left);
    out.output_side = uniquely_iso(b, whole);
    if (!out.output_side) out.detail += "output-side factorisation is not uniquely isomorphic; ";
  } catch (const Error& e) {
    out.detail += std::string("output-side factorisation: ") + e.what() + "; ";
  }
  return out;
}

}  // namespace rdc
