#include "doctest.h"
#include "rdc/gray.hpp"
#include "rdc/marked.hpp"
#include "support.hpp"

using namespace rdc;
using rdc::testing::ids;

namespace {

MarkedRdc marked(const Molecule& m, std::vector<std::string> names) {
  return MarkedRdc(m.poset_ptr(), m.poset().set_of(names));
}

MarkedInclusion identity(const MarkedRdc& from, const MarkedRdc& to) {
  std::vector<Index> id(from.shape().size());
  for (Index k = 0; k < id.size(); ++k) id[k] = k;
  return {from, to, id};
}

}  // namespace

TEST_SUITE("marked") {
  TEST_CASE("markings live in positive dimension") {
    CHECK_THROWS_AS(marked(arrow(), {"0-"}), Error);
    CHECK(marked(arrow(), {"1"}).marked.count() == 1);
  }

  TEST_CASE("gray marking") {
    auto a = arrow();
    auto m = gray_marked(marked(a, {"1"}), marked(a, {}));
    CHECK(ids(m.shape(), m.marked) == std::set<std::string>{"(1,0-)", "(1,0+)", "(1,1)"});
    CHECK(gray_marked(marked(a, {}), marked(globe(2), {})).marked.empty());
    auto full = gray_marked(marked(a, {"1"}), marked(globe(2), {"2"}));
    // every (x,y) with x = 1, plus (0±,2)
    CHECK(full.marked.count() == 5 + 2);
  }

  TEST_CASE("boundary pushout-product") {
    auto a = arrow();
    auto bd = make_generator(GeneratorKind::BoundaryMinimal, a).inclusion;
    bd.validate();
    CHECK(bd.source.shape().size() == 2);
    auto pp = pushout_product(bd, bd);
    pp.validate();
    CHECK(pp.source.shape().size() == 8);
    CHECK(pp.target.shape().size() == 9);
    auto sq = gray(a, a);
    CHECK(pp.image() == sq.full_boundary_set());
    CHECK(!pp.entire());
    CHECK_THROWS_AS(residual(pp), Error);
  }

  TEST_CASE("residuals") {
    auto a = arrow();
    auto t = make_generator(GeneratorKind::MarkTop, a).inclusion;
    t.validate();
    CHECK(ids(a.poset(), residual(t)) == std::set<std::string>{"1"});
    auto plain = marked(a, {"1"});
    CHECK(residual(identity(plain, plain)).empty());
    auto pa = gray(point(), a);
    auto r = residual(identity(marked(pa, {}), marked(pa, {"(pt,1)"})));
    CHECK(ids(pa.poset(), r) == std::set<std::string>{"(pt,1)"});
    // entire with entire stays entire with an empty residual
    auto tt = pushout_product(t, t);
    CHECK(tt.entire());
    CHECK(residual(tt).empty());
  }

  TEST_CASE("residual of an entire map against a minimal boundary") {
    auto a = arrow();
    auto t = make_generator(GeneratorKind::MarkTop, a).inclusion;
    auto bd = make_generator(GeneratorKind::BoundaryMinimal, globe(2)).inclusion;
    auto pp = pushout_product(t, bd);
    REQUIRE(pp.entire());
    // {1} × (Y ∖ jY′) = {(1,2)}
    CHECK(ids(pp.target.shape(), residual(pp)) == std::set<std::string>{"(1,2)"});
    auto qp = pushout_product(bd, t);
    CHECK(ids(qp.target.shape(), residual(qp)) == std::set<std::string>{"(2,1)"});
  }

  TEST_CASE("residual of an entire map against a marked boundary") {
    // the cell (1,⊤) is already marked in X′⊗Y, so it is not residual
    auto a = arrow();
    auto t = make_generator(GeneratorKind::MarkTop, a).inclusion;
    auto mb = make_generator(GeneratorKind::BoundaryMarked, a).inclusion;
    auto pp = pushout_product(t, mb);
    REQUIRE(pp.entire());
    CHECK(residual(pp).empty());
  }

  TEST_CASE("generator families") {
    std::vector<Molecule> atoms{point(), arrow(), globe(2), paste(arrow(), arrow(), 0), gray(arrow(), arrow())};
    auto m = generators_M(atoms, 2);
    auto mp = generators_Mprime(atoms, 2);
    // point: one minimal boundary; arrow, globe, square: two each; the path is no atom
    CHECK(m.size() == 7);
    CHECK(mp.size() == 7);
    for (const auto& g : m) g.inclusion.validate();
    for (const auto& g : mp) g.inclusion.validate();
    auto t = make_generator(GeneratorKind::MarkTop, arrow()).inclusion;
    CHECK(t.source.marked.empty());
    CHECK(ids(t.target.shape(), t.target.marked) == std::set<std::string>{"1"});
    auto mb = make_generator(GeneratorKind::BoundaryMarked, arrow()).inclusion;
    CHECK(ids(mb.source.shape(), mb.source.shape().all()) == std::set<std::string>{"0-", "0+"});
    auto j1 = generators_J(atoms, 1);
    CHECK(j1.size() == 2);
    for (const auto& g : j1) CHECK(g.atom.dim() > 1);
    CHECK_THROWS_AS(make_generator(GeneratorKind::MarkTop, paste(arrow(), arrow(), 0)), Error);
  }

  TEST_CASE("opposite of a pushout-product") {
    std::vector<Molecule> atoms{point(), arrow(), globe(2)};
    auto gens = generators_M(atoms, 2);
    auto more = generators_Mprime(atoms, 2);
    gens.insert(gens.end(), more.begin(), more.end());
    for (const auto& g : gens)
      for (const auto& h : gens) {
        std::string why;
        CHECK_MESSAGE(op_pp_swap_holds(g.inclusion, h.inclusion, &why), why);
      }
  }
}
