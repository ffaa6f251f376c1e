#include "rdc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "rdc/gray.hpp"
#include "rdc/horn.hpp"
#include "rdc/marked.hpp"

namespace rdc {

namespace {

constexpr std::size_t kKeptFailures = 20;

struct Outcome {
  std::size_t checks = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> stats;
};

struct Instance {
  Json inputs;
  std::function<Outcome()> run;
};

Json ids_json(const Poset& p, const ElementSet& s) {
  auto v = p.ids_of(s);
  std::sort(v.begin(), v.end());
  return v;
}

std::string sign_str(Sign s) { return std::string(1, sign_char(s)); }

Json with(Json base, const Json& more) {
  for (const auto& [k, v] : more.items()) base[k] = v;
  return base;
}

Outcome run_one(const Instance& x) {
  try {
    return x.run();
  } catch (const std::exception& e) {
    Outcome o;
    o.checks = 1;
    o.failures.push_back({x.inputs, "no error", {{"error", e.what()}}});
    return o;
  }
}

std::vector<Outcome> run_all(const std::vector<Instance>& xs, unsigned jobs) {
  std::vector<Outcome> out(xs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) out[i] = run_one(xs[i]);
  };
  const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(xs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

const Molecule& mol(const CatalogEntry* e) { return e->molecule; }

// GRAY_BOUNDARY and MUTATION

}  // namespace

std::vector<Failure> gray_boundary_failures(const CatalogEntry& u, const CatalogEntry& v, const Poset* product,
                                            std::size_t* checks) {
  std::vector<Failure> out;
  GrayProduct g(u.molecule.poset(), v.molecule.poset());
  const Poset& p = product ? *product : g.poset();
  const int top = u.molecule.dim() + v.molecule.dim();
  for (int n = 0; n <= top; ++n)
    for (Sign s : kSigns) {
      if (checks) ++*checks;
      auto sides = gray_boundary_decomposition(u.molecule, v.molecule, g, n, s);
      const ElementSet direct = product ? boundary_of(p, p.all(), n, s) : sides.direct;
      if (direct != sides.formula)
        out.push_back({{{"U", u.expr}, {"V", v.expr}, {"n", n}, {"sign", sign_str(s)}},
                       ids_json(p, sides.formula),
                       ids_json(p, direct)});
    }
  return out;
}

namespace {

std::vector<Instance> gray_boundary(const Catalog& c, const LemmaLimits& l) {
  std::vector<Instance> out;
  for (const auto& x : c.entries)
    for (const auto& y : c.entries) {
      if (x.molecule.size() * y.molecule.size() > l.product_elems) continue;
      out.push_back({{{"U", x.expr}, {"V", y.expr}}, [&x, &y] {
                       Outcome o;
                       o.failures = gray_boundary_failures(x, y, nullptr, &o.checks);
                       return o;
                     }});
    }
  return out;
}

std::vector<Instance> mutation(const Catalog& c, const LemmaLimits& l, std::uint64_t seed) {
  std::vector<Instance> out;
  auto add = [&](const CatalogEntry& x, const CatalogEntry& y, Index flip) {
    Json in{{"U", x.expr}, {"V", y.expr}};
    out.push_back({in, [&x, &y, flip, in] {
                     Outcome o;
                     o.checks = 1;
                     const Poset mutated = flip_orientation(gray(x.molecule.poset(), y.molecule.poset()), flip);
                     auto found = gray_boundary_failures(x, y, &mutated, nullptr);
                     if (found.empty())
                       o.failures.push_back({with(in, {{"flipped", mutated.id(flip)}}), "a boundary mismatch",
                                             "no mismatch: the comparator missed the corrupted orientation"});
                     else
                       o.stats["detected"] = 1;
                     return o;
                   }});
  };
  const CatalogEntry* arrow_entry = nullptr;
  for (const auto& e : c.entries)
    if (e.expr == "arrow") arrow_entry = &e;
  if (arrow_entry) {
    const Poset sq = gray(arrow_entry->molecule.poset(), arrow_entry->molecule.poset());
    for (Index i = 0; i < sq.size(); ++i)
      if (sq.dim(i) > 0) add(*arrow_entry, *arrow_entry, i);
  }
  // seeded extra targets: the top of a product of two atoms
  auto atoms = c.atoms(1, c.bounds.max_dim);
  std::vector<std::pair<const CatalogEntry*, const CatalogEntry*>> pairs;
  for (auto* a : atoms)
    for (auto* b : atoms)
      if (a->molecule.size() * b->molecule.size() <= l.product_elems) pairs.emplace_back(a, b);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 8 && !pairs.empty(); ++t) {
    auto [a, b] = pairs[rng() % pairs.size()];
    add(*a, *b, a->molecule.size() * b->molecule.size() - 1);
  }
  return out;
}

// OP_SWAP

std::vector<Instance> op_swap(const Catalog& c, const LemmaLimits& l) {
  std::vector<Instance> out;
  for (const auto& x : c.entries)
    for (const auto& y : c.entries) {
      if (x.molecule.size() * y.molecule.size() > l.product_elems) continue;
      Json in{{"U", x.expr}, {"V", y.expr}};
      out.push_back({in, [&x, &y, in] {
                       Outcome o;
                       o.checks = 1;
                       const Poset& p = x.molecule.poset();
                       const Poset& q = y.molecule.poset();
                       const IsoMap s1 = op_swap_iso(p, q);
                       const IsoMap s2 = op_swap_iso(q.opposite(), p.opposite());
                       for (Index i = 0; i < s1.size(); ++i)
                         if (s2[s1[i]] != i) {
                           o.failures.push_back({in, "the swap is an involution", "swap twice moves an element"});
                           break;
                         }
                       return o;
                     }});
    }
  return out;
}

// ISO_UNIQUE

Poset shuffled(const Poset& p) {
  // reverse the order inside each dimension so indices really move
  std::vector<std::string> fresh(p.size());
  for (Index i = 0; i < p.size(); ++i) {
    std::string n = std::to_string(p.size() - i);
    fresh[i] = "e" + std::string(4 - std::min<std::size_t>(4, n.size()), '0') + n;
  }
  std::map<std::string, std::string> table;
  for (Index i = 0; i < p.size(); ++i) table[p.id(i)] = fresh[i];
  return p.relabel([&](const std::string& id) { return table.at(id); });
}

std::vector<Instance> iso_unique(const Catalog& c, const LemmaLimits& l) {
  std::vector<Instance> out;
  for (const auto& x : c.entries) {
    Json in{{"U", x.expr}};
    out.push_back({in, [&x, &l, in] {
                     Outcome o;
                     const Poset& p = x.molecule.poset();
                     auto fail = [&](const char* want, const std::string& got) { o.failures.push_back({in, want, got}); };
                     ++o.checks;
                     const auto autos = all_isos(p, p, 2).size();
                     if (autos != 1) fail("exactly one automorphism", std::to_string(autos) + " automorphisms");
                     const Poset q = shuffled(p);
                     ++o.checks;
                     auto f = find_iso(p, q);
                     if (!f || !is_iso(p, q, *f)) fail("an isomorphism onto a relabelled copy", "none");
                     const Poset r = p.opposite();
                     if (p.size() <= l.brute_force_elems) {
                       o.checks += 3;
                       const auto bf = brute_force_iso_count(p, p);
                       if (bf != 1) fail("one automorphism by brute force", std::to_string(bf));
                       if (brute_force_iso_count(p, q) != 1) fail("one isomorphism onto the relabelled copy by brute force", "other");
                       const bool op_iso = brute_force_iso_count(p, r) > 0;
                       if (op_iso != find_iso(p, r).has_value())
                         fail(op_iso ? "iso to its opposite" : "not iso to its opposite", "find_iso disagrees");
                       o.stats["brute_force"] += 1;
                     }
                     return o;
                   }});
  }
  // deduplication: distinct entries are never isomorphic
  for (std::size_t i = 0; i < c.entries.size(); ++i)
    for (std::size_t j = i + 1; j < c.entries.size(); ++j) {
      const auto& x = c.entries[i];
      const auto& y = c.entries[j];
      if (x.molecule.size() != y.molecule.size() || x.molecule.size() > l.brute_force_elems) continue;
      Json in{{"U", x.expr}, {"V", y.expr}};
      out.push_back({in, [&x, &y, in] {
                       Outcome o;
                       o.checks = 1;
                       const auto bf = brute_force_iso_count(x.molecule.poset(), y.molecule.poset());
                       const bool found = find_iso(x.molecule.poset(), y.molecule.poset()).has_value();
                       if (bf != 0 || found)
                         o.failures.push_back({in, "distinct catalog entries are not isomorphic",
                                               "brute force " + std::to_string(bf) + ", search " + (found ? "found" : "none")});
                       return o;
                     }});
    }
  return out;
}

// GENCP_BOUNDARY and GENCP_FORMULA

struct GenPasting {
  Poset ambient;
  ElementSet left;
  ElementSet right;
  int k = 0;
};

using GenPastingCase = std::function<std::vector<std::pair<Json, GenPasting>>()>;

std::vector<std::pair<Json, GenPastingCase>> gencp_cases(const Catalog& c, const LemmaLimits& l) {
  std::vector<std::pair<Json, GenPastingCase>> out;
  for (const auto& x : c.entries)
    for (const auto& y : c.entries) {
      const Molecule& u = x.molecule;
      const Molecule& v = y.molecule;
      if (u.size() + v.size() <= l.recognise_elems && std::min(u.dim(), v.dim()) > 0) {
        Json in{{"U", x.expr}, {"V", y.expr}, {"source", "paste"}};
        out.emplace_back(in, [&u, &v, in] {
          std::vector<std::pair<Json, GenPasting>> cases;
          for (int k = 0; k < std::min(u.dim(), v.dim()); ++k) {
            std::optional<Pasting> pst;
            try {
              pst = paste_with_maps(u, v, k);
            } catch (const Error&) {
              continue;
            }
            const Poset& p = pst->result.poset();
            ElementSet a = p.none(), b = p.none();
            for (Index i : pst->left) a.insert(i);
            for (Index i : pst->right) b.insert(i);
            cases.push_back({with(in, {{"k", k}}), {p, a, b, k}});
          }
          return cases;
        });
      }
      if (u.size() * v.size() <= l.recognise_elems && u.dim() + v.dim() >= 2) {
        Json in{{"U", x.expr}, {"V", y.expr}, {"source", "gray boundary"}};
        out.emplace_back(in, [&u, &v, in] {
          std::vector<std::pair<Json, GenPasting>> cases;
          GrayProduct g(u.poset(), v.poset());
          for (int n = 1; n < u.dim() + v.dim(); ++n)
            for (int j = 0; j < n && j < u.dim(); ++j)
              for (Sign s : kSigns) {
                auto split = gray_boundary_split(u, v, g, n, j, s);
                if (split.first.is_subset_of(split.second) || split.second.is_subset_of(split.first)) continue;
                cases.push_back({with(in, {{"n", n}, {"j", j}, {"sign", sign_str(s)}}),
                                 {g.poset(), split.first, split.second, n - 1}});
              }
          return cases;
        });
      }
    }
  return out;
}

std::vector<Instance> gencp(const Catalog& c, const LemmaLimits& l, bool formula) {
  std::vector<Instance> out;
  for (auto& [in, make] : gencp_cases(c, l)) {
    out.push_back({in, [make, formula] {
                     Outcome o;
                     for (auto& [inputs, gp] : make()) {
                       const Poset& p = gp.ambient;
                       Recogniser r(p);
                       auto rec = recognise_generalised_pasting(r, gp.left, gp.right, gp.k);
                       if (!rec) {
                         // the precondition does not fire
                         o.stats["not_recognised"] += 1;
                         continue;
                       }
                       if (formula) {
                         ++o.checks;
                         auto f = check_gencp_factorisations(p, *rec);
                         if (!f.input_side || !f.output_side)
                           o.failures.push_back({inputs, "both factorisations uniquely isomorphic", f.detail});
                         continue;
                       }
                       const ElementSet join = gp.left | gp.right;
                       const int top = p.dim_of(join);
                       for (int n = gp.k + 1; n < top; ++n)
                         for (Sign s : kSigns) {
                           ++o.checks;
                           const ElementSet bl = boundary_of(p, gp.left, n, s);
                           const ElementSet br = boundary_of(p, gp.right, n, s);
                           const ElementSet whole = boundary_of(p, join, n, s);
                           const Json at = with(inputs, {{"boundary", n}, {"boundary_sign", sign_str(s)}});
                           if ((bl | br) != whole)
                             o.failures.push_back({at, ids_json(p, whole), ids_json(p, bl | br)});
                           else if (!recognise_generalised_pasting(r, bl, br, gp.k))
                             o.failures.push_back({at, "a generalised pasting at the same level",
                                                   "the boundary pieces are not recognised"});
                         }
                     }
                     return o;
                   }});
  }
  return out;
}

// DIST_LOWER and CTX_RECURSION

/// w pasted onto u at a rewritable submolecule of ∂(n-1) u, with its maps.
struct SubPasting {
  Json inputs;
  Molecule result;
  Molecule w;
  IsoMap u_map;
  IsoMap w_map;
  int n = 0;
  Side side = Side::Left;  // Left: w ◁ u along ∂+w, Right: u ▷ w along ∂-w
};

void for_each_subpasting(const CatalogEntry& e, int n, Side side, const std::function<void(const SubPasting&)>& f) {
  const Molecule& u = e.molecule;
  const Poset& p = u.poset();
  const ElementSet& bd = u.boundary_set(n - 1, side == Side::Left ? Sign::Minus : Sign::Plus);
  std::vector<Index> tops;
  p.maximal(bd).for_each([&](Index i) {
    if (p.dim(i) == n - 1) tops.push_back(i);
  });
  if (tops.size() > 4) tops.resize(4);
  Recogniser r(p);
  for (std::size_t mask = 1; mask < (std::size_t{1} << tops.size()); ++mask) {
    ElementSet gen = p.none();
    for (std::size_t t = 0; t < tops.size(); ++t)
      if (mask & (std::size_t{1} << t)) gen.insert(tops[t]);
    const ElementSet s = p.closure(gen);
    if (!r.is_rewritable(s, bd)) continue;
    Molecule hole = restrict_molecule(u, s, theorem_certificate("subset", {}));
    std::vector<std::pair<std::string, Molecule>> ws{{"globe", hole}};
    if (n >= 2 && !hole.is_atom()) ws.push_back({"merger", merger(hole)});
    for (auto& [kind, other] : ws) {
      Molecule w = side == Side::Left ? atom(other, hole) : atom(hole, other);
      auto iota = inclusion_of(u, s);
      Pasting res = side == Side::Left ? paste_at(w, iota, u, Side::Left, n - 1) : paste_at(u, iota, w, Side::Right, n - 1);
      SubPasting sp{{{"U", e.expr},
                     {"n", n},
                     {"side", side == Side::Left ? "left" : "right"},
                     {"hole", ids_json(p, s)},
                     {"w", kind}},
                    res.result,
                    w,
                    side == Side::Left ? res.right : res.left,
                    side == Side::Left ? res.left : res.right,
                    n,
                    side};
      f(sp);
    }
  }
}

ElementSet push_product(const GrayProduct& from, const GrayProduct& to, const IsoMap& left, const ElementSet& s) {
  ElementSet out = to.poset().none();
  s.for_each([&](Index i) {
    auto [x, y] = from.factors(i);
    out.insert(to.at(left[x], y));
  });
  return out;
}

ElementSet image_set(const IsoMap& map, std::size_t size) {
  ElementSet out(size);
  for (Index i : map) out.insert(i);
  return out;
}

template <typename F>
std::vector<Instance> subpasting_instances(const Catalog& c, const LemmaLimits& l, F&& body) {
  std::vector<Instance> out;
  for (const auto& e : c.entries)
    for (int n = 1; n <= e.molecule.dim(); ++n)
      for (Side side : {Side::Left, Side::Right}) {
        Json in{{"U", e.expr}, {"n", n}, {"side", side == Side::Left ? "left" : "right"}};
        out.push_back({in, [&e, &c, &l, n, side, body] {
                         Outcome o;
                         for_each_subpasting(e, n, side, [&](const SubPasting& sp) {
                           for (const auto& v : c.entries) {
                             if (v.molecule.dim() > 2) continue;
                             if (sp.result.size() * v.molecule.size() > l.recognise_elems) continue;
                             body(sp, v, o);
                           }
                         });
                         return o;
                       }});
      }
  return out;
}

std::vector<Instance> dist_lower(const Catalog& c, const LemmaLimits& l) {
  return subpasting_instances(c, l, [](const SubPasting& sp, const CatalogEntry& ve, Outcome& o) {
    const Molecule& v = ve.molecule;
    GrayProduct big(sp.result.poset(), v.poset());
    const Poset& p = big.poset();
    std::vector<Index> old;
    Poset u_alone = sp.result.poset().restrict(image_set(sp.u_map, sp.result.size()), &old);
    GrayProduct small(u_alone, v.poset());
    Recogniser r(p);
    const ElementSet w_img = image_set(sp.w_map, sp.result.size());
    for (int ell = 0; ell <= v.dim(); ++ell) {
      ++o.checks;
      const int m = sp.n + ell;
      const Json in = with(sp.inputs, {{"V", ve.expr}, {"l", ell}});
      if (sp.side == Side::Left) {
        const ElementSet piece = big.product(w_img, v.boundary_set(ell, parity(sp.n, Sign::Plus)));
        const ElementSet rest = push_product(small, big, old, boundary_of(small.poset(), small.poset().all(), m, Sign::Plus));
        const ElementSet lhs = boundary_of(p, p.all(), m, Sign::Plus);
        if (lhs != (piece | rest))
          o.failures.push_back({in, ids_json(p, piece | rest), ids_json(p, lhs)});
        else if (!recognise_generalised_pasting(r, piece, rest, m - 1))
          o.failures.push_back({in, "a generalised pasting", "pieces not recognised"});
      } else {
        const ElementSet piece = big.product(w_img, v.boundary_set(ell, parity(sp.n - 1, Sign::Plus)));
        const ElementSet rest = push_product(small, big, old, boundary_of(small.poset(), small.poset().all(), m, Sign::Minus));
        const ElementSet lhs = boundary_of(p, p.all(), m, Sign::Minus);
        if (lhs != (piece | rest))
          o.failures.push_back({in, ids_json(p, piece | rest), ids_json(p, lhs)});
        else if (!recognise_generalised_pasting(r, rest, piece, m - 1))
          o.failures.push_back({in, "a generalised pasting", "pieces not recognised"});
      }
    }
  });
}

std::vector<Instance> ctx_recursion(const Catalog& c, const LemmaLimits& l) {
  // contexts around a pasting at a submolecule
  auto out = subpasting_instances(c, l, [](const SubPasting& sp, const CatalogEntry& ve, Outcome& o) {
    const Molecule& v = ve.molecule;
    GrayProduct big(sp.result.poset(), v.poset());
    const Poset& p = big.poset();
    std::vector<Index> old;
    Poset u_alone = sp.result.poset().restrict(image_set(sp.u_map, sp.result.size()), &old);
    GrayProduct small(u_alone, v.poset());
    const ElementSet w_img = image_set(sp.w_map, sp.result.size());
    const bool left = sp.side == Side::Left;
    const Sign outer = left ? Sign::Plus : Sign::Minus;
    const Sign piece_sign = parity(left ? sp.n : sp.n - 1, Sign::Plus);
    std::vector<ContextStep> steps;
    for (int ell = 0; ell <= v.dim(); ++ell) {
      ++o.checks;
      const int m = sp.n + ell;
      steps.push_back({big.product(w_img, v.boundary_set(ell, piece_sign)), m - 1, sp.side});
      const ElementSet hole = push_product(small, big, old, boundary_of(small.poset(), small.poset().all(), m, outer));
      const ElementSet ambient = boundary_of(p, p.all(), m, outer);
      if (!replay(p, ambient, hole, steps))
        o.failures.push_back({with(sp.inputs, {{"V", ve.expr}, {"l", ell}}), "the recursive derivation rebuilds the boundary",
                              "replay failed"});
    }
  });
  // contexts determined by the boundary of u inside u⊗v
  for (const auto& ue : c.entries) {
    if (ue.molecule.dim() < 1 || !ue.molecule.is_round()) continue;
    for (const auto& ve : c.entries) {
      if (ue.molecule.size() * ve.molecule.size() > l.recognise_elems) continue;
      Json in{{"U", ue.expr}, {"V", ve.expr}, {"source", "boundary of U"}};
      out.push_back({in, [&ue, &ve, in] {
                       Outcome o;
                       const Molecule& u = ue.molecule;
                       const Molecule& v = ve.molecule;
                       const int n = u.dim();
                       GrayProduct g(u.poset(), v.poset());
                       const Poset& p = g.poset();
                       for (Side side : {Side::Left, Side::Right}) {
                         const bool left = side == Side::Left;
                         const Sign outer = left ? Sign::Plus : Sign::Minus;
                         const Sign piece_sign = parity(left ? n : n + 1, Sign::Plus);
                         const ElementSet base = g.product(u.boundary_set(n - 1, outer), v.poset().all());
                         std::vector<ContextStep> steps;
                         for (int ell = 0; ell <= v.dim(); ++ell) {
                           ++o.checks;
                           const int m = n + ell;
                           steps.push_back({g.product(u.poset().all(), v.boundary_set(ell, piece_sign)), m - 1, side});
                           const ElementSet hole = boundary_of(p, base, m, outer);
                           const ElementSet ambient = boundary_of(p, p.all(), m, outer);
                           if (!replay(p, ambient, hole, steps))
                             o.failures.push_back({with(in, {{"side", left ? "R" : "L"}, {"l", ell}}),
                                                   "the recursive derivation rebuilds the boundary", "replay failed"});
                         }
                       }
                       return o;
                     }});
    }
  }
  return out;
}

// HORN_PP

std::vector<Instance> horn_pp(const Catalog& c, const LemmaLimits& l) {
  std::vector<Instance> out;
  for (auto* ue : c.atoms(1, 3))
    for (auto* ve : c.atoms(1, 2)) {
      if (mol(ue).size() * mol(ve).size() > l.product_elems) continue;
      Json in{{"U", ue->expr}, {"V", ve->expr}};
      out.push_back({in, [ue, ve, in] {
                       Outcome o;
                       const Molecule& u = mol(ue);
                       for (Sign s : kSigns)
                         for (Index x : u.poset().faces(u.top(), s)) {
                           auto h = atomic_horn(u, x);
                           for (Side order : {Side::Left, Side::Right}) {
                             ++o.checks;
                             try {
                               pp_horn(h, mol(ve), order);
                             } catch (const Error& e) {
                               o.failures.push_back({with(in, {{"x", u.poset().id(x)},
                                                               {"order", order == Side::Left ? "horn first" : "horn second"}}),
                                                     "the horn of the product", e.what()});
                             }
                           }
                         }
                       return o;
                     }});
    }
  return out;
}

// marked horns of catalog atoms, all markings that give a context

template <typename F>
void for_each_marked_horn(const Molecule& u, Index x, F&& f) {
  auto h = atomic_horn(u, x);
  const Poset& p = u.poset();
  std::vector<Index> cand;
  h.carrier.for_each([&](Index i) {
    if (p.dim(i) > 0) cand.push_back(i);
  });
  for (std::size_t mask = 0; mask < (std::size_t{1} << cand.size()); ++mask) {
    ElementSet a = p.none();
    for (std::size_t t = 0; t < cand.size(); ++t)
      if (mask & (std::size_t{1} << t)) a.insert(cand[t]);
    std::optional<MarkedHorn> mh;
    try {
      mh = marked_horn(h, a);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAContext) throw;
      continue;
    }
    f(*mh, mask == 0, mask + 1 == (std::size_t{1} << cand.size()));
  }
}

std::vector<Instance> horn_family(const Catalog& c, const LemmaLimits& l, bool op) {
  std::vector<Instance> out;
  std::vector<Molecule> gen_atoms;
  for (auto* e : c.atoms(0, 2))
    if (mol(e).size() <= l.generator_elems) gen_atoms.push_back(mol(e));
  auto gens = std::make_shared<std::vector<Generator>>(generators_Mprime(gen_atoms, 2));
  std::vector<std::string> gen_names;
  for (auto* e : c.atoms(0, 2))
    if (mol(e).size() <= l.generator_elems) {
      gen_names.push_back("minbd " + e->expr);
      if (mol(e).dim() > 0) gen_names.push_back("markbd " + e->expr);
    }
  for (auto* ue : c.atoms(1, 3)) {
    if (mol(ue).size() > l.horn_elems) continue;
    const Molecule& u = mol(ue);
    for (Sign s : kSigns)
      for (Index x : u.poset().faces(u.top(), s)) {
        Json in{{"U", ue->expr}, {"x", u.poset().id(x)}};
        out.push_back({in, [ue, x, in, gens, gen_names, op] {
                         Outcome o;
                         const Poset& p = mol(ue).poset();
                         std::vector<MarkedHorn> horns;
                         for_each_marked_horn(mol(ue), x, [&](const MarkedHorn& mh, bool empty, bool full) {
                           o.stats["marked_horns"] += 1;
                           if (empty) o.stats["empty_marking"] += 1;
                           if (full) o.stats["full_marking"] += 1;
                           horns.push_back(mh);
                         });
                         auto at = [&](const MarkedHorn& mh) { return with(in, {{"A", ids_json(p, mh.marking)}}); };
                         if (op) {
                           for (const auto& mh : horns) {
                             ++o.checks;
                             std::string why;
                             if (!recognise_marked_horn(opposite(mh.inclusion()), &why))
                               o.failures.push_back({at(mh), "the opposite is a marked horn", why});
                           }
                           return o;
                         }
                         // every marking shares the product shape, so one recogniser serves them all
                         for (std::size_t g = 0; g < gens->size(); ++g)
                           for (Side order : {Side::Left, Side::Right}) {
                             const Poset& v = (*gens)[g].atom.poset();
                             const Poset prod = order == Side::Left ? gray(p, v) : gray(v, p);
                             Recogniser shared(prod);
                             for (const auto& mh : horns) {
                               ++o.checks;
                               try {
                                 pp_marked_horn(mh, (*gens)[g], order, &shared);
                               } catch (const Error& e) {
                                 o.failures.push_back({with(at(mh), {{"generator", gen_names[g]},
                                                                     {"order", order == Side::Left ? "horn first" : "horn second"}}),
                                                       "a marked horn at the product facet", e.what()});
                               }
                             }
                           }
                         return o;
                       }});
      }
  }
  return out;
}

// ENTIRE_RESIDUAL and OP_PP

struct NamedGenerator {
  std::string name;
  Generator g;
};

std::vector<NamedGenerator> all_generators(const Catalog& c) {
  std::vector<NamedGenerator> out;
  for (auto* e : c.atoms(0, c.bounds.max_dim))
    for (GeneratorKind k : {GeneratorKind::BoundaryMinimal, GeneratorKind::MarkTop, GeneratorKind::BoundaryMarked}) {
      if (k != GeneratorKind::BoundaryMinimal && mol(e).dim() == 0) continue;
      out.push_back({to_string(k) + " " + e->expr, make_generator(k, mol(e))});
    }
  return out;
}

std::vector<Instance> entire_residual(const Catalog& c, const LemmaLimits& l, bool exact) {
  std::vector<Instance> out;
  auto gens = std::make_shared<std::vector<NamedGenerator>>(all_generators(c));
  for (std::size_t a = 0; a < gens->size(); ++a) {
    if ((*gens)[a].g.kind != GeneratorKind::MarkTop) continue;
    for (std::size_t b = 0; b < gens->size(); ++b) {
      if ((*gens)[a].g.atom.size() * (*gens)[b].g.atom.size() > l.product_elems) continue;
      Json in{{"i", (*gens)[a].name}, {"j", (*gens)[b].name}};
      out.push_back({in, [gens, a, b, in, exact] {
                       Outcome o;
                       const MarkedInclusion& i = (*gens)[a].g.inclusion;
                       const MarkedInclusion& j = (*gens)[b].g.inclusion;
                       const GeneratorKind j_kind = (*gens)[b].g.kind;
                       const ElementSet new_marks = i.target.marked - i.image_of(i.source.marked);
                       ElementSet outside = j.target.shape().all() - j.image();
                       if (exact) outside -= j.target.marked;
                       for (Side order : {Side::Left, Side::Right}) {
                         ++o.checks;
                         const bool first = order == Side::Left;
                         const MarkedInclusion pp = first ? pushout_product(i, j) : pushout_product(j, i);
                         const Json at = with(in, {{"order", first ? "i first" : "j first"}});
                         if (!pp.entire()) {
                           o.failures.push_back({at, "entire", "not entire"});
                           continue;
                         }
                         GrayProduct g = first ? GrayProduct(i.target.shape(), j.target.shape())
                                               : GrayProduct(j.target.shape(), i.target.shape());
                         const ElementSet want = first ? g.product(new_marks, outside) : g.product(outside, new_marks);
                         const ElementSet got = residual(pp);
                         if (want != got) {
                           o.failures.push_back({at, ids_json(g.poset(), want), ids_json(g.poset(), got)});
                           o.stats["failing j: " + to_string(j_kind)] += 1;
                         }
                       }
                       return o;
                     }});
    }
  }
  return out;
}

std::vector<Instance> op_pp(const Catalog& c, const LemmaLimits& l) {
  std::vector<Instance> out;
  auto gens = std::make_shared<std::vector<NamedGenerator>>(all_generators(c));
  for (std::size_t a = 0; a < gens->size(); ++a)
    for (std::size_t b = 0; b < gens->size(); ++b) {
      if ((*gens)[a].g.atom.size() * (*gens)[b].g.atom.size() > l.product_elems) continue;
      Json in{{"i", (*gens)[a].name}, {"j", (*gens)[b].name}};
      out.push_back({in, [gens, a, b, in] {
                       Outcome o;
                       o.checks = 1;
                       std::string why;
                       if (!op_pp_swap_holds((*gens)[a].g.inclusion, (*gens)[b].g.inclusion, &why))
                         o.failures.push_back({in, "op(i □ j) ≅ op j □ op i", why});
                       return o;
                     }});
    }
  return out;
}

std::vector<Instance> instances_for(std::string_view lemma, const Catalog& c, const LemmaLimits& l, std::uint64_t seed) {
  if (lemma == "GRAY_BOUNDARY") return gray_boundary(c, l);
  if (lemma == "GENCP_BOUNDARY") return gencp(c, l, false);
  if (lemma == "GENCP_FORMULA") return gencp(c, l, true);
  if (lemma == "DIST_LOWER") return dist_lower(c, l);
  if (lemma == "CTX_RECURSION") return ctx_recursion(c, l);
  if (lemma == "HORN_PP") return horn_pp(c, l);
  if (lemma == "MARKED_HORN_PP") return horn_family(c, l, false);
  if (lemma == "ENTIRE_RESIDUAL") return entire_residual(c, l, false);
  if (lemma == "ENTIRE_RESIDUAL_EXACT") return entire_residual(c, l, true);
  if (lemma == "OP_SWAP") return op_swap(c, l);
  if (lemma == "OP_PP") return op_pp(c, l);
  if (lemma == "OP_HORN") return horn_family(c, l, true);
  if (lemma == "ISO_UNIQUE") return iso_unique(c, l);
  if (lemma == "MUTATION") return mutation(c, l, seed);
  throw Error(ErrorKind::UnknownLemma, std::string(lemma));
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{
      "GRAY_BOUNDARY", "GENCP_BOUNDARY", "GENCP_FORMULA",         "DIST_LOWER", "CTX_RECURSION",
      "HORN_PP",       "MARKED_HORN_PP", "ENTIRE_RESIDUAL",       "ENTIRE_RESIDUAL_EXACT",
      "OP_SWAP",       "OP_PP",          "OP_HORN",               "ISO_UNIQUE", "MUTATION"};
  return ids;
}

Poset flip_orientation(const Poset& p, Index x) {
  auto specs = p.to_specs();
  for (auto& e : specs)
    if (e.id == p.id(x)) std::swap(e.input, e.output);
  return Poset::build(std::move(specs));
}

LemmaReport check(std::string_view lemma, const Catalog& catalog, const LemmaLimits& limits, unsigned jobs,
                  std::uint64_t seed) {
  const auto xs = instances_for(lemma, catalog, limits, seed);
  const auto results = run_all(xs, jobs);
  LemmaReport r;
  r.lemma = std::string(lemma);
  std::map<std::string, std::size_t> stats;
  for (const auto& o : results) {
    r.instances += o.checks;
    r.failure_count += o.failures.size();
    for (const auto& f : o.failures)
      if (r.failures.size() < kKeptFailures) r.failures.push_back(f);
    for (const auto& [k, v] : o.stats) stats[k] += v;
  }
  for (const auto& [k, v] : stats) r.stats[k] = v;
  if (r.instances == 0) r.warnings.push_back("no instances: nothing in the catalog meets the preconditions");
  return r;
}

std::vector<LemmaReport> run_suite(const SuiteConfig& config, const Catalog& catalog) {
  std::vector<LemmaReport> out;
  const auto& ids = config.lemmas.empty() ? lemma_ids() : config.lemmas;
  for (const auto& id : ids) out.push_back(check(id, catalog, config.limits, config.jobs, config.seed));
  return out;
}

std::vector<LemmaReport> run_suite(const SuiteConfig& config) { return run_suite(config, enumerate(config.bounds)); }

Json to_json(const LemmaReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"lemma", r.lemma}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  Json j{{"lemma", r.lemma},
         {"instances", r.instances},
         {"status", r.passed() ? "pass" : "fail"},
         {"failure_count", r.failure_count},
         {"failures", std::move(failures)}};
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  if (!r.stats.empty()) j["stats"] = r.stats;
  return j;
}

Json suite_json(const SuiteConfig& config, const std::vector<LemmaReport>& reports) {
  Json rs = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    rs.push_back(to_json(r));
    ok = ok && r.passed();
  }
  return {{"config",
           {{"depth", config.bounds.depth},
            {"max_dim", config.bounds.max_dim},
            {"max_elems", config.bounds.max_elems},
            {"seed", config.seed}}},
          {"reports", std::move(rs)},
          {"status", ok ? "pass" : "fail"}};
}

}  // namespace rdc
