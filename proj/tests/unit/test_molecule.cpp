#include "doctest.h"
#include "rdc/gray.hpp"
#include "rdc/molecule.hpp"
#include "support.hpp"

using namespace rdc;
using rdc::testing::ids;

namespace {

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::BadInput;
}

}  // namespace

TEST_SUITE("molecule") {
  TEST_CASE("point") {
    auto p = point();
    CHECK(p.size() == 1);
    CHECK(p.dim() == 0);
    CHECK(find_iso(paste(p, p, 0).poset(), p.poset()));
    CHECK(error_of([&] { merger(p); }) == ErrorKind::ZeroDimensional);
    CHECK(p.is_round());
  }

  TEST_CASE("boundaries") {
    auto a = arrow();
    CHECK(ids(a.poset(), a.boundary_set(0, Sign::Minus)) == std::set<std::string>{"0-"});
    CHECK(a.boundary_set(1, Sign::Minus) == a.poset().all());
    auto sq = gray(a, a);
    CHECK(ids(sq.poset(), sq.boundary_set(1, Sign::Minus)) ==
          std::set<std::string>{"(0-,1)", "(1,0+)", "(0-,0-)", "(0-,0+)", "(0+,0+)"});
    CHECK(sq.boundary_set(1, Sign::Minus).count() == 5);
    auto inc = boundary(sq, 1, Sign::Minus);
    CHECK(inc.source.size() == 5);
    CHECK(inc.image() == sq.boundary_set(1, Sign::Minus));
    CHECK(boundary(sq, 7, Sign::Plus).source.size() == 9);
  }

  TEST_CASE("globularity") {
    std::vector<Molecule> shapes{globe(3), gray(globe(2), arrow()), paste(globe(2), globe(2), 1),
                                 gray(arrow(), gray(arrow(), arrow()))};
    for (const auto& m : shapes) {
      for (int n = 0; n < m.dim(); ++n)
        for (int k = 0; k < n; ++k)
          for (Sign a : kSigns)
            for (Sign b : kSigns)
              CHECK(boundary_of(m.poset(), m.boundary_set(n, b), k, a) == m.boundary_set(k, a));
    }
  }

  TEST_CASE("roundness") {
    CHECK(paste(arrow(), arrow(), 0).is_round());
    CHECK(!paste(globe(2), arrow(), 0).is_round());
    CHECK(point().is_round());
    CHECK(globe(3).is_round());
    CHECK(gray(arrow(), arrow()).is_round());
  }

  TEST_CASE("paste") {
    auto path = paste(arrow(), arrow(), 0);
    CHECK(path.size() == 5);
    CHECK(path.poset().maximal_elements().count() == 2);
    auto vert = paste(globe(2), globe(2), 1);
    CHECK(vert.size() == 7);
    auto one_two = atom(arrow(), path);
    CHECK(one_two.size() == 7);
    CHECK(error_of([&] { paste(one_two, globe(2), 1); }) == ErrorKind::BoundaryMismatch);
    CHECK(vert.certificate()->kind == Certificate::Kind::Paste);
  }

  TEST_CASE("paste is associative and unital up to unique iso") {
    auto a = arrow();
    auto g = globe(2);
    auto left = paste(paste(g, g, 1), g, 1);
    auto right = paste(g, paste(g, g, 1), 1);
    CHECK(all_isos(left.poset(), right.poset()).size() == 1);
    auto unit = paste(boundary(g, 1, Sign::Minus).source, g, 1);
    CHECK(all_isos(unit.poset(), g.poset()).size() == 1);
    auto whisk = paste(paste(a, g, 0), a, 0);
    CHECK(all_isos(whisk.poset(), paste(a, paste(g, a, 0), 0).poset()).size() == 1);
  }

  TEST_CASE("atom") {
    auto g2 = atom(arrow(), arrow());
    CHECK(g2.size() == 5);
    CHECK(g2.is_atom());
    CHECK(find_iso(g2.poset(), globe(2).poset()));
    CHECK(error_of([&] { atom(arrow(), globe(2)); }) == ErrorKind::DimMismatch);
    auto whisk = paste(globe(2), arrow(), 0);
    CHECK(error_of([&] { atom(whisk, whisk); }) == ErrorKind::NotRound);
    CHECK(error_of([&] { atom(arrow(), point()); }) == ErrorKind::DimMismatch);
  }

  TEST_CASE("merger") {
    auto m = merger(paste(arrow(), arrow(), 0));
    CHECK(find_iso(m.poset(), arrow().poset()));
    CHECK(find_iso(merger(globe(2)).poset(), globe(2).poset()));
    CHECK(error_of([&] { merger(paste(globe(2), arrow(), 0)); }) == ErrorKind::NotRound);
  }

  TEST_CASE("paste at a submolecule") {
    auto path = paste(arrow(), arrow(), 0);
    auto g = globe(2);
    // the first edge of the path
    ElementSet first = path.poset().closure_of(path.poset().at("in0:1"));
    auto iota = inclusion_of(path, first);
    auto res = paste_at(g, iota, path, Side::Left);
    CHECK(res.result.size() == 7);
    CHECK(res.result.dim() == 2);
    CHECK(find_iso(res.result.poset(), paste(g, arrow(), 0).poset()));

    // an isomorphism reduces to plain pasting
    auto whole = inclusion_of(g, g.boundary_set(1, Sign::Minus));
    auto by_iso = paste_at(boundary(g, 1, Sign::Minus).source, whole, g, Side::Left, 1);
    CHECK(find_iso(by_iso.result.poset(), g.poset()));

    // a lower-dimensional hole cannot be rewritten
    ElementSet pt = path.poset().closure_of(path.poset().at("in0:0+"));
    auto low = inclusion_of(path, pt);
    CHECK(error_of([&] { paste_at(g, low, path, Side::Left); }) == ErrorKind::NotRewritable);
  }

  TEST_CASE("generalised pasting recognition") {
    auto g = globe(2);
    auto pasted = paste_with_maps(g, g, 1);
    const auto& p = pasted.result.poset();
    ElementSet u = p.none(), v = p.none();
    for (Index i : pasted.left) u.insert(i);
    for (Index i : pasted.right) v.insert(i);
    Recogniser r(p);
    auto gp = recognise_generalised_pasting(r, u, v, 1);
    REQUIRE(gp);
    auto fac = check_gencp_factorisations(p, *gp);
    CHECK(fac.input_side);
    CHECK(fac.output_side);
    // swapped order is not a pasting at the 1-boundary
    CHECK(!recognise_generalised_pasting(r, v, u, 1));

    // the two halves of ∂2-(I⊗I⊗I)
    auto cube = gray(gray(arrow(), arrow()), arrow());
    GrayProduct gp3(gray(arrow(), arrow()).poset(), arrow().poset());
    auto sides = gray_boundary_split(gray(arrow(), arrow()), arrow(), gp3, 2, 1, Sign::Minus);
    Recogniser rc(gp3.poset());
    auto split = recognise_generalised_pasting(rc, sides.first, sides.second, 1);
    REQUIRE(split);
    CHECK((sides.first | sides.second) == boundary_of(gp3.poset(), gp3.poset().all(), 2, Sign::Minus));
    auto fac3 = check_gencp_factorisations(gp3.poset(), *split);
    CHECK(fac3.input_side);
    CHECK(fac3.output_side);
  }

  TEST_CASE("recogniser") {
    auto sq = gray(arrow(), arrow());
    Recogniser r(sq.poset());
    CHECK(r.is_molecule(sq.poset().all()));
    CHECK(r.is_atom(sq.poset().all()));
    CHECK(r.is_molecule(sq.boundary_set(1, Sign::Minus)));
    CHECK(!r.is_molecule(sq.full_boundary_set()));
    auto edge = sq.poset().closure_of(sq.poset().at("(0-,1)"));
    CHECK(r.is_submolecule(edge, sq.boundary_set(1, Sign::Minus)));
    CHECK(r.is_rewritable(edge, sq.boundary_set(1, Sign::Minus)));
    CHECK(!r.is_submolecule(edge, sq.boundary_set(1, Sign::Plus)));
    auto cert = r.certify(sq.poset().all());
    REQUIRE(cert);
    CHECK(cert->kind == Certificate::Kind::Atom);
    auto whisk = paste(globe(2), arrow(), 0);
    Recogniser rw(whisk.poset());
    auto c2 = rw.certify(whisk.poset().all());
    REQUIRE(c2);
    CHECK(c2->kind == Certificate::Kind::Paste);
  }

  TEST_CASE("rigidity of small molecules") {
    for (const auto& m : {point(), arrow(), globe(2), globe(3), paste(globe(2), arrow(), 0), gray(arrow(), arrow()),
                          paste(globe(2), globe(2), 1)})
      CHECK(all_isos(m.poset(), m.poset()).size() == 1);
  }
}
