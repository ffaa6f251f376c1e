#include "doctest.h"
#include "rdc/gray.hpp"
#include "rdc/horn.hpp"
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

ElementSet of_ids(const Poset& p, std::vector<std::string> names) { return p.set_of(names); }

}  // namespace

TEST_SUITE("horn") {
  TEST_CASE("atomic horns") {
    auto a = arrow();
    auto h = atomic_horn(a, "0+");
    CHECK(h.sign == Sign::Plus);
    CHECK(ids(a.poset(), h.carrier) == std::set<std::string>{"0-"});

    auto g = globe(2);
    auto hg = atomic_horn(g, "1-");
    CHECK(hg.sign == Sign::Minus);
    CHECK(ids(g.poset(), hg.carrier) == std::set<std::string>{"0-", "0+", "1+"});
    CHECK(g.poset().is_closed(hg.carrier));

    auto sq = gray(a, a);
    auto hs = atomic_horn(sq, "(0-,1)");
    CHECK(hs.carrier.count() == 7);
    CHECK(sq.poset().is_closed(hs.carrier));
    CHECK(error_of([&] { atomic_horn(g, "0-"); }) == ErrorKind::NotAFacet);
    CHECK(error_of([&] { atomic_horn(paste(a, a, 0), "in0:0-"); }) == ErrorKind::NotAnAtom);
    CHECK(error_of([&] { atomic_horn(point(), "pt"); }) == ErrorKind::ZeroDimensional);
  }

  TEST_CASE("classified contexts") {
    auto a = arrow();
    auto c = classified_context(atomic_horn(a, "0+"));
    CHECK(c.ambient.size() == 1);
    CHECK(c.hole == c.ambient.poset().all());

    auto g = globe(2);
    auto cg = classified_context(atomic_horn(g, "1-"));
    CHECK(ids(cg.ambient.poset(), cg.ambient.poset().all()) == std::set<std::string>{"0-", "0+", "1-"});
    CHECK(cg.hole == cg.ambient.poset().all());

    auto sq = gray(a, a);
    std::vector<Index> to_atom;
    auto cs = classified_context(atomic_horn(sq, "(0-,1)"), &to_atom);
    CHECK(cs.ambient.size() == 5);
    CHECK(ids(cs.ambient.poset(), cs.hole) == std::set<std::string>{"(0-,1)", "(0-,0-)", "(0-,0+)"});
    CHECK(Recogniser(cs.ambient.poset()).is_rewritable(cs.hole, cs.ambient.poset().all()));
    CHECK(sq.poset().id(to_atom[cs.ambient.poset().at("(1,0+)")]) == "(1,0+)");
  }

  TEST_CASE("context clauses") {
    auto a = arrow();
    auto id = identity_context(a);
    CHECK(id.hole == id.ambient.poset().all());
    CHECK(replay(id));
    auto id2 = identity_context(point(), point());
    CHECK(find_iso(id2.ambient.poset(), a.poset()));

    // the square-horn context: paste an edge after the hole
    auto end = of_ids(a.poset(), {"0+"});
    auto sq_ctx = right_paste(a, end, id, 0);
    CHECK(sq_ctx.ambient.size() == 5);
    CHECK(replay(sq_ctx));
    REQUIRE(sq_ctx.derivation.size() == 1);
    CHECK(sq_ctx.derivation[0].side == Side::Right);
    auto sq = gray(a, a);
    auto classified = classified_context(atomic_horn(sq, "(0-,1)"));
    auto iso = find_iso(sq_ctx.ambient.poset(), classified.ambient.poset());
    REQUIRE(iso);
    ElementSet moved = classified.ambient.poset().none();
    sq_ctx.hole.for_each([&](Index i) { moved.insert((*iso)[i]); });
    CHECK(moved == classified.hole);

    auto both = left_paste(a, sq_ctx.ambient.poset().set_of(std::vector<std::string>{"in0:0-"}), sq_ctx, 0);
    CHECK(both.ambient.size() == 7);
    CHECK(replay(both));
    CHECK(both.derivation.size() == 2);

    // a 2-cell cannot be pasted at level 0
    CHECK(error_of([&] { right_paste(globe(2), end, id, 0); }) == ErrorKind::ClauseViolation);
    // nor along a point that is not on the output side
    auto start = of_ids(a.poset(), {"0-"});
    CHECK(error_of([&] { right_paste(a, start, id, 0); }) == ErrorKind::ClauseViolation);
  }

  TEST_CASE("promotion and composition") {
    auto a = arrow();
    auto p = promote(identity_context(a));
    CHECK(p.hole == p.ambient.poset().all());
    CHECK(find_iso(p.ambient.poset(), globe(2).poset()));

    // whiskering promotes a 1-dimensional pasting context
    auto whisker = right_paste(a, of_ids(a.poset(), {"0+"}), identity_context(a), 0);
    auto up = promote(whisker);
    CHECK(up.ambient.dim() == 2);
    CHECK(find_iso(up.ambient.poset(), paste(globe(2), arrow(), 0).poset()));
    CHECK(replay(up));

    // composing two whiskerings
    auto twice = compose(whisker, right_paste(paste(a, a, 0), whisker.ambient.poset().set_of(
                                                                  std::vector<std::string>{"in1:0+"}),
                                              identity_context(whisker.ambient), 0));
    CHECK(twice.ambient.size() == 9);
    CHECK(twice.hole.count() == 3);
    CHECK(replay(twice));
    CHECK(error_of([&] { compose(identity_context(globe(2)), whisker); }) == ErrorKind::ClauseViolation);
  }

  TEST_CASE("A-contexts") {
    auto a = arrow();
    auto sq = gray(a, a);
    const auto& p = sq.poset();
    auto h = atomic_horn(sq, "(0-,1)");
    auto w = sq.boundary_set(1, Sign::Minus);
    auto hole = p.closure_of(h.facet);
    auto with = find_A_derivation(p, w, hole, of_ids(p, {"(1,0+)"}));
    REQUIRE(with);
    REQUIRE(with->size() == 1);
    CHECK((*with)[0].side == Side::Right);
    CHECK(replay(p, w, hole, *with));
    CHECK(!find_A_derivation(p, w, hole, p.none()));
    // monotone in A
    CHECK(find_A_derivation(p, w, hole, of_ids(p, {"(1,0+)", "(0+,1)", "(1,1)"})));
    // identity contexts need no cells
    CHECK(find_A_derivation(classified_context(atomic_horn(globe(2), "1-")), ElementSet(3)));

    // the 3-cube: the input of the top is three squares
    auto cube = gray(sq, a);
    const auto& q = cube.poset();
    auto hc = atomic_horn(cube, "((1,1),0-)");
    auto wc = cube.boundary_set(2, hc.sign);
    auto all2 = q.grade(wc, 2) | q.grade(wc, 1);
    auto dc = find_A_derivation(q, wc, q.closure_of(hc.facet), all2);
    REQUIRE(dc);
    CHECK(replay(q, wc, q.closure_of(hc.facet), *dc));
  }

  TEST_CASE("marked horns") {
    auto g = globe(2);
    const auto& p = g.poset();
    auto h = atomic_horn(g, "1-");
    auto none = marked_horn(h, p.none());
    CHECK(ids(p, none.enlarged) == std::set<std::string>{"2"});
    auto one = marked_horn(h, of_ids(p, {"1+"}));
    CHECK(ids(p, one.enlarged) == std::set<std::string>{"1-", "1+", "2"});

    auto a = arrow();
    auto ha = atomic_horn(a, "0+");
    auto ma = marked_horn(ha, a.poset().none());
    CHECK(ids(a.poset(), ma.enlarged) == std::set<std::string>{"1"});
    auto inc = ma.inclusion();
    inc.validate();
    CHECK(ids(a.poset(), inc.image()) == std::set<std::string>{"0-"});

    auto sq = gray(a, a);
    auto hs = atomic_horn(sq, "(0-,1)");
    CHECK(error_of([&] { marked_horn(hs, sq.poset().none()); }) == ErrorKind::NotAContext);
    CHECK(error_of([&] { marked_horn(h, of_ids(p, {"1-"})); }) == ErrorKind::BadInput);

    auto back = recognise_marked_horn(one.inclusion());
    REQUIRE(back);
    CHECK(back->horn.facet == h.facet);
    CHECK(back->enlarged == one.enlarged);
    // the wrong enlarged marking is rejected
    std::string why;
    CHECK(!recognise_marked_horn(horn_inclusion(h, of_ids(p, {"1+"}), of_ids(p, {"1+", "2"})), &why));
    CHECK(why.find("rule") != std::string::npos);
  }

  TEST_CASE("pushout-product of horns with boundaries") {
    auto a = arrow();
    auto h = atomic_horn(a, "0-");
    auto left = pp_horn(h, a, Side::Left);
    CHECK(left.atom.poset().id(left.facet) == "(0-,1)");
    CHECK(left.carrier.count() == 7);
    auto right = pp_horn(h, a, Side::Right);
    CHECK(right.atom.poset().id(right.facet) == "(1,0-)");
    CHECK(right.sign == Sign::Plus);
    // V = point gives back the horn
    auto unit = pp_horn(h, point(), Side::Left);
    CHECK(unit.carrier.count() == 1);
    CHECK(unit.atom.poset().id(unit.facet) == "(0-,pt)");
    auto g = globe(2);
    for (const char* x : {"1-", "1+"})
      for (Side s : {Side::Left, Side::Right}) CHECK_NOTHROW(pp_horn(atomic_horn(g, x), a, s));
  }

  TEST_CASE("pushout-product of marked horns") {
    auto a = arrow();
    auto mh = marked_horn(atomic_horn(a, "0+"), a.poset().none());
    auto minbd = make_generator(GeneratorKind::BoundaryMinimal, a);
    auto r = pp_marked_horn(mh, minbd, Side::Left);
    const auto& p = r.horn.atom.poset();
    CHECK(p.id(r.horn.facet) == "(0+,1)");
    CHECK(ids(p, r.marking) == std::set<std::string>{"(1,0-)", "(1,0+)"});
    CHECK(ids(p, r.enlarged) == std::set<std::string>{"(1,0-)", "(1,0+)", "(1,1)"});

    auto g = globe(2);
    auto mg = marked_horn(atomic_horn(g, "1-"), g.poset().set_of(std::vector<std::string>{"1+"}));
    auto markbd = make_generator(GeneratorKind::BoundaryMarked, a);
    auto r2 = pp_marked_horn(mg, markbd, Side::Left);
    const auto& q = r2.horn.atom.poset();
    CHECK(ids(q, r2.enlarged - r2.marking) == std::set<std::string>{"(1-,1)", "(2,1)"});

    for (Side s : {Side::Left, Side::Right}) {
      auto res = pp_marked_horn(mg, markbd, s);
      CHECK(recognise_marked_horn(opposite(res.inclusion())));
    }
    CHECK(error_of([&] { pp_marked_horn(mg, make_generator(GeneratorKind::MarkTop, a), Side::Left); }) ==
          ErrorKind::BadInput);
  }
}
