#include "rdc/cylinder.hpp"

#include <array>

namespace rdc {

namespace {

constexpr std::array<const char*, 3> kLayer{"0-", "1", "0+"};
constexpr int kBottom = 0, kMiddle = 1, kTopLayer = 2;

int end_layer(Sign s) { return s == Sign::Minus ? kBottom : kTopLayer; }

std::string join_ids(const Poset& p, const ElementSet& s) {
  std::string out;
  for (const auto& id : p.ids_of(s)) {
    if (!out.empty()) out += ' ';
    out += id;
  }
  return out;
}

Cylinder build(const Molecule& u, const ElementSet& k, CylinderKind kind) {
  const Poset& p = u.poset();
  if (!p.is_closed(k)) throw Error(ErrorKind::KNotClosed, "collapse set is not closed");
  const int n = u.dim();

  auto name = [&](int layer, Index y) { return k.contains(y) ? p.id(y) : pair_id(kLayer[layer], p.id(y)); };
  // faces of (layer, x) on side a following the plain rule
  auto plain = [&](int layer, Index x, Sign a) {
    std::vector<std::string> out;
    if (layer == kMiddle) {
      out.push_back(name(end_layer(a), x));
      for (Index y : p.faces(x, -a))
        if (!k.contains(y)) out.push_back(name(kMiddle, y));
    } else {
      for (Index y : p.faces(x, a)) out.push_back(name(layer, y));
    }
    return out;
  };
  // the end layer whose top cells are reversed, and the side of (1,x) that
  // receives both ends
  const int flipped = kind == CylinderKind::LeftInverted ? kTopLayer : kBottom;
  const Sign both = kind == CylinderKind::LeftInverted ? Sign::Minus : Sign::Plus;

  std::vector<ElementSpec> specs;
  for (Index x = 0; x < p.size(); ++x) {
    if (k.contains(x)) {
      ElementSpec e{p.id(x), p.dim(x), {}, {}};
      for (Index f : p.faces(x, Sign::Minus)) e.input.push_back(p.id(f));
      for (Index f : p.faces(x, Sign::Plus)) e.output.push_back(p.id(f));
      specs.push_back(std::move(e));
      continue;
    }
    for (int layer : {kBottom, kMiddle, kTopLayer}) {
      ElementSpec e{name(layer, x), p.dim(x) + (layer == kMiddle ? 1 : 0), plain(layer, x, Sign::Minus),
                    plain(layer, x, Sign::Plus)};
      if (kind != CylinderKind::Plain && p.dim(x) == n) {
        if (layer == kMiddle) {
          std::vector<std::string> with_ends{name(kBottom, x), name(kTopLayer, x)};
          std::vector<std::string> other;
          for (Index y : p.faces(x, -both))
            if (!k.contains(y)) with_ends.push_back(name(kMiddle, y));
          for (Index y : p.faces(x, both))
            if (!k.contains(y)) other.push_back(name(kMiddle, y));
          e.input = both == Sign::Minus ? with_ends : other;
          e.output = both == Sign::Minus ? other : with_ends;
        } else if (layer == flipped) {
          std::swap(e.input, e.output);
        }
      }
      specs.push_back(std::move(e));
    }
  }

  static constexpr std::array<const char*, 3> kRule{"gray_cylinder", "lcyl", "rcyl"};
  Poset shape = Poset::build(std::move(specs));
  std::vector<Index> tau(shape.size());
  for (Index x = 0; x < p.size(); ++x) {
    if (k.contains(x)) {
      tau[shape.at(p.id(x))] = x;
      continue;
    }
    for (int layer : {kBottom, kMiddle, kTopLayer}) tau[shape.at(name(layer, x))] = x;
  }
  auto cert = theorem_certificate(kRule[static_cast<int>(kind)], {u.certificate()}, {{"K", join_ids(p, k)}});
  return {Molecule(std::move(shape), std::move(cert)), u, std::move(tau)};
}

}  // namespace

Cylinder gray_cylinder(const Molecule& u, const ElementSet& k) { return build(u, k, CylinderKind::Plain); }

Cylinder inverted_cylinder(const Molecule& u, const ElementSet& k, Side side) {
  const Sign s = side == Side::Left ? Sign::Plus : Sign::Minus;
  if (!k.is_subset_of(u.boundary_set(u.dim() - 1, s)))
    throw Error(ErrorKind::BadCollapseSet,
                std::string("collapse set is not inside the ") + (side == Side::Left ? "output" : "input") +
                    " boundary");
  return build(u, k, side == Side::Left ? CylinderKind::LeftInverted : CylinderKind::RightInverted);
}

Cylinder invertor_shape(std::string_view s, const Molecule& u) {
  if (!u.is_round()) throw Error(ErrorKind::NotRound, "invertor shapes need a round molecule");
  // a point has empty boundaries, so the reversed top cell would lose a side
  if (!s.empty() && u.dim() < 1) throw Error(ErrorKind::ZeroDimensional, "invertor shapes need dimension > 0");
  std::vector<Index> tau(u.size());
  for (Index i = 0; i < u.size(); ++i) tau[i] = i;
  Molecule current = u;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    Side side;
    if (*it == 'L')
      side = Side::Left;
    else if (*it == 'R')
      side = Side::Right;
    else
      throw Error(ErrorKind::BadInput, std::string("invertor letter must be L or R, got '") + *it + "'");
    const Sign bd = side == Side::Left ? Sign::Plus : Sign::Minus;
    Cylinder c = inverted_cylinder(current, current.boundary_set(current.dim() - 1, bd), side);
    std::vector<Index> composed(c.tau.size());
    for (std::size_t i = 0; i < c.tau.size(); ++i) composed[i] = tau[c.tau[i]];
    tau = std::move(composed);
    current = std::move(c.shape);
  }
  return {std::move(current), u, std::move(tau)};
}

Cylinder unit_shape(const Molecule& u) { return gray_cylinder(u, u.full_boundary_set()); }

Cylinder unitor_shape(const Molecule& u, const ElementSet& hole, Side side) {
  const Poset& p = u.poset();
  const ElementSet& bd = u.boundary_set(u.dim() - 1, side == Side::Left ? Sign::Minus : Sign::Plus);
  Recogniser r(p);
  if (u.dim() < 1 || !p.is_closed(hole) || !r.is_rewritable(hole, bd))
    throw Error(ErrorKind::NotRewritable, "unitor hole is not a rewritable submolecule of the boundary");
  const int d = p.dim_of(hole);
  const ElementSet interior = hole - (boundary_of(p, hole, d - 1, Sign::Minus) | boundary_of(p, hole, d - 1, Sign::Plus));
  const ElementSet k = u.full_boundary_set() - interior;
  if (!p.is_closed(k)) throw Error(ErrorKind::NotRewritable, "removing the hole interior leaves a non-closed set");
  return gray_cylinder(u, k);
}

bool projection_is_valid(const Cylinder& c) {
  const Poset& src = c.shape.poset();
  const Poset& dst = c.base.poset();
  if (c.tau.size() != src.size()) return false;
  ElementSet hit = dst.none();
  for (Index i = 0; i < src.size(); ++i) {
    const Index x = c.tau[i];
    if (x >= dst.size() || dst.dim(x) > src.dim(i)) return false;
    hit.insert(x);
    ElementSet image = dst.none();
    src.closure_of(i).for_each([&](Index j) { image.insert(c.tau[j]); });
    if (image != dst.closure_of(x)) return false;
  }
  return hit == dst.all();
}

}  // namespace rdc
