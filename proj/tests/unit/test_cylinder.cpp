#include "doctest.h"
#include "rdc/cylinder.hpp"
#include "rdc/gray.hpp"
#include "support.hpp"

using namespace rdc;
using rdc::testing::face_ids;
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

ElementSet of_ids(const Molecule& m, std::vector<std::string> names) { return m.poset().set_of(names); }

}  // namespace

TEST_SUITE("cylinder") {
  TEST_CASE("extreme collapse sets") {
    for (const auto& u : {point(), arrow(), globe(2), paste(arrow(), arrow(), 0)}) {
      auto none = gray_cylinder(u, u.poset().none());
      CHECK(none.shape.poset() == gray(arrow().poset(), u.poset()));
      auto all = gray_cylinder(u, u.poset().all());
      CHECK(all.shape.poset() == u.poset());
      CHECK(projection_is_valid(none));
      CHECK(projection_is_valid(all));
    }
    auto g = globe(2);
    auto open = g.poset().set_of(std::vector<std::string>{"1-"});
    CHECK(error_of([&] { gray_cylinder(g, open); }) == ErrorKind::KNotClosed);
  }

  TEST_CASE("unit on the arrow") {
    auto c = unit_shape(arrow());
    const auto& p = c.shape.poset();
    CHECK(c.shape.size() == 5);
    CHECK(ids(p, p.all()) == std::set<std::string>{"0-", "0+", "(0-,1)", "(1,1)", "(0+,1)"});
    CHECK(c.shape.is_atom());
    CHECK(face_ids(p, "(1,1)", Sign::Minus) == std::set<std::string>{"(0-,1)"});
    CHECK(face_ids(p, "(1,1)", Sign::Plus) == std::set<std::string>{"(0+,1)"});
    // u => u
    CHECK(find_iso(boundary(c.shape, 1, Sign::Minus).source.poset(), arrow().poset()));
    CHECK(find_iso(boundary(c.shape, 1, Sign::Plus).source.poset(), arrow().poset()));
    CHECK(find_iso(p, globe(2).poset()));
    CHECK(c.base.poset().id(c.tau[p.at("(1,1)")]) == "1");
    CHECK(c.base.poset().id(c.tau[p.at("0-")]) == "0-");
    CHECK(projection_is_valid(c));
    CHECK(find_iso(unit_shape(point()).shape.poset(), arrow().poset()));
  }

  TEST_CASE("left-inverted cylinder on the arrow") {
    auto a = arrow();
    auto c = inverted_cylinder(a, a.boundary_set(0, Sign::Plus), Side::Left);
    const auto& p = c.shape.poset();
    CHECK(c.shape.size() == 7);
    CHECK(c.shape.is_atom());
    CHECK(face_ids(p, "(1,1)", Sign::Minus) == std::set<std::string>{"(0-,1)", "(0+,1)"});
    CHECK(face_ids(p, "(1,1)", Sign::Plus) == std::set<std::string>{"(1,0-)"});
    // input path (0-,0-) -> 0+ -> (0+,0-)
    CHECK(face_ids(p, "(0-,1)", Sign::Minus) == std::set<std::string>{"(0-,0-)"});
    CHECK(face_ids(p, "(0-,1)", Sign::Plus) == std::set<std::string>{"0+"});
    CHECK(face_ids(p, "(0+,1)", Sign::Minus) == std::set<std::string>{"0+"});
    CHECK(face_ids(p, "(0+,1)", Sign::Plus) == std::set<std::string>{"(0+,0-)"});
    Recogniser r(p);
    CHECK(r.is_atom(p.all()));
    CHECK(c.shape.is_round());
    // both input edges lie over the arrow
    for (const char* e : {"(0-,1)", "(0+,1)"}) CHECK(a.poset().id(c.tau[p.at(e)]) == "1");
    CHECK(projection_is_valid(c));
    CHECK(invertor_shape("L", a).shape.poset() == p);
  }

  TEST_CASE("right-inverted cylinder on the arrow") {
    auto a = arrow();
    auto c = inverted_cylinder(a, a.boundary_set(0, Sign::Minus), Side::Right);
    const auto& p = c.shape.poset();
    CHECK(c.shape.size() == 7);
    CHECK(face_ids(p, "(1,1)", Sign::Plus) == std::set<std::string>{"(0-,1)", "(0+,1)"});
    CHECK(face_ids(p, "(1,1)", Sign::Minus) == std::set<std::string>{"(1,0+)"});
    CHECK(Recogniser(p).is_atom(p.all()));
    // output path (0-,0+) -> 0- -> (0+,0+) around the glued input point
    CHECK(face_ids(p, "(0-,1)", Sign::Minus) == std::set<std::string>{"(0-,0+)"});
    CHECK(face_ids(p, "(0-,1)", Sign::Plus) == std::set<std::string>{"0-"});
    CHECK(face_ids(p, "(0+,1)", Sign::Minus) == std::set<std::string>{"0-"});
    CHECK(face_ids(p, "(0+,1)", Sign::Plus) == std::set<std::string>{"(0+,0+)"});
    CHECK(projection_is_valid(c));
  }

  TEST_CASE("left-inverted cylinder on the 2-globe") {
    auto g = globe(2);
    auto c = inverted_cylinder(g, g.boundary_set(1, Sign::Plus), Side::Left);
    CHECK(c.shape.size() == 9);
    CHECK(c.shape.dim() == 3);
    CHECK(c.shape.is_atom());
    CHECK(c.shape.is_round());
    CHECK(Recogniser(c.shape.poset()).is_atom(c.shape.poset().all()));
    CHECK(error_of([&] { inverted_cylinder(g, g.boundary_set(1, Sign::Minus), Side::Left); }) ==
          ErrorKind::BadCollapseSet);
    CHECK(error_of([&] { inverted_cylinder(g, g.boundary_set(1, Sign::Plus), Side::Right); }) ==
          ErrorKind::BadCollapseSet);
  }

  TEST_CASE("inverted cylinders agree with the plain one away from the top") {
    auto g = globe(2);
    const ElementSet k = g.boundary_set(1, Sign::Plus);
    auto plain = gray_cylinder(g, k);
    auto inv = inverted_cylinder(g, k, Side::Left);
    const auto& a = plain.shape.poset();
    const auto& b = inv.shape.poset();
    REQUIRE(a.size() == b.size());
    for (Index i = 0; i < a.size(); ++i) {
      const Index base = plain.tau[i];
      const bool exceptional = g.poset().dim(base) == g.dim() && !k.contains(base) && a.id(i).rfind("(0-,", 0) != 0;
      if (exceptional) continue;
      for (Sign s : kSigns) CHECK(face_ids(a, a.id(i), s) == face_ids(b, a.id(i), s));
    }
  }

  TEST_CASE("higher invertor shapes") {
    std::vector<Molecule> round{arrow(), globe(2), paste(arrow(), arrow(), 0), gray(arrow(), arrow())};
    for (const auto& u : round) {
      for (const char* s : {"", "L", "R", "LL", "LR", "RL", "RR"}) {
        auto c = invertor_shape(s, u);
        const int len = static_cast<int>(std::string_view(s).size());
        CHECK(c.shape.dim() == u.dim() + len);
        CHECK(c.shape.is_round());
        CHECK(c.shape.is_atom() == u.is_atom());
        CHECK(projection_is_valid(c));
        if (c.shape.size() <= 40) CHECK(Recogniser(c.shape.poset()).is_molecule(c.shape.poset().all()));
      }
    }
    CHECK(invertor_shape("", globe(2)).shape.poset() == globe(2).poset());
    CHECK(invertor_shape("", point()).shape.size() == 1);
    CHECK(error_of([&] { invertor_shape("L", point()); }) == ErrorKind::ZeroDimensional);
    CHECK(error_of([&] { invertor_shape("L", paste(globe(2), arrow(), 0)); }) == ErrorKind::NotRound);
    CHECK(error_of([&] { invertor_shape("X", arrow()); }) == ErrorKind::BadInput);
  }

  TEST_CASE("unitors") {
    auto g = globe(2);
    auto whole = unitor_shape(g, g.boundary_set(1, Sign::Minus), Side::Left);
    // K = ∂+U, so the cylinder is the unit on the input only
    CHECK(whole.shape.poset() == gray_cylinder(g, g.boundary_set(1, Sign::Plus)).shape.poset());
    CHECK(whole.shape.is_atom());
    CHECK(projection_is_valid(whole));

    auto path = paste(arrow(), arrow(), 0);
    auto cell = atom(path, arrow());
    // hole: first input edge of the 2-to-1 cell
    auto first = cell.poset().closure_of(cell.poset().at("in0:in0:1"));
    auto left = unitor_shape(cell, first, Side::Left);
    CHECK(left.shape.dim() == 3);
    CHECK(left.shape.is_atom());
    CHECK(Recogniser(left.shape.poset()).is_atom(left.shape.poset().all()));
    // u => εv ◁ u
    CHECK(find_iso(boundary(left.shape, 2, Sign::Minus).source.poset(), cell.poset()));
    CHECK(boundary(left.shape, 2, Sign::Plus).source.poset().maximal_elements().count() == 2);
    CHECK(error_of([&] { unitor_shape(cell, first, Side::Right); }) == ErrorKind::NotRewritable);
    auto pt = of_ids(cell, {"in0:in0:0-"});
    CHECK(error_of([&] { unitor_shape(cell, pt, Side::Left); }) == ErrorKind::NotRewritable);
  }
}
