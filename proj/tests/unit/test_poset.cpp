#include <random>

#include "doctest.h"
#include "rdc/gray.hpp"
#include "rdc/iso.hpp"
#include "rdc/molecule.hpp"
#include "support.hpp"

using namespace rdc;
using rdc::testing::ids;

namespace {

Poset arrow_poset() {
  return Poset::build({{"0-", 0, {}, {}}, {"0+", 0, {}, {}}, {"1", 1, {"0-"}, {"0+"}}});
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("arrow and point build") {
    auto a = arrow_poset();
    CHECK(a.size() == 3);
    CHECK(a.dim() == 1);
    CHECK(rdc::testing::face_ids(a, "1", Sign::Minus) == std::set<std::string>{"0-"});
    auto pt = Poset::build({{"pt", 0, {}, {}}});
    CHECK(pt.size() == 1);
    CHECK(pt.dim() == 0);
    CHECK(Poset().dim() == -1);
  }

  TEST_CASE("validation errors") {
    auto kind_of = [](std::vector<ElementSpec> specs) {
      try {
        Poset::build(std::move(specs));
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::BadInput;
    };
    CHECK(kind_of({{"a", 0, {}, {}}, {"e", 1, {}, {"a"}}}) == ErrorKind::EmptySide);
    CHECK(kind_of({{"a", 0, {}, {}}, {"e", 1, {"zz"}, {"a"}}}) == ErrorKind::DanglingFace);
    CHECK(kind_of({{"a", 0, {}, {}}, {"b", 0, {}, {}}, {"e", 2, {"a"}, {"b"}}}) == ErrorKind::BadGrading);
    CHECK(kind_of({{"a", 0, {}, {}}, {"e", 1, {"a"}, {"a"}}}) == ErrorKind::Overlap);
    CHECK(kind_of({{"a", 0, {}, {}}, {"a", 0, {}, {}}}) == ErrorKind::DuplicateId);
  }

  TEST_CASE("closure") {
    auto a = arrow_poset();
    std::vector<std::string> top{"1"}, src{"0-"};
    CHECK(ids(a, a.closure(a.set_of(top))) == std::set<std::string>{"0-", "0+", "1"});
    CHECK(ids(a, a.closure(a.set_of(src))) == std::set<std::string>{"0-"});
    auto sq = gray(a, a);
    std::vector<std::string> edge{"(0-,1)"};
    CHECK(ids(sq, sq.closure(sq.set_of(edge))) == std::set<std::string>{"(0-,1)", "(0-,0-)", "(0-,0+)"});
    std::vector<std::string> bogus{"nope"};
    CHECK_THROWS_AS(a.set_of(bogus), Error);
  }

  TEST_CASE("closure of an element is the union of closures of its faces") {
    auto sq = gray(globe(2).poset(), arrow_poset());
    for (Index x = 0; x < sq.size(); ++x) {
      if (sq.dim(x) == 0) continue;
      auto below = sq.closure_of(x);
      below.erase(x);
      ElementSet faces = sq.none();
      for (Sign s : kSigns)
        for (Index f : sq.faces(x, s)) faces |= sq.closure_of(f);
      CHECK(below == faces);
    }
  }

  TEST_CASE("cofaces") {
    auto a = arrow_poset();
    CHECK(a.cofaces(a.at("0-"), Sign::Minus).size() == 1);
    CHECK(a.cofaces(a.at("0-"), Sign::Plus).empty());
    auto sq = gray(a, a);
    CHECK(sq.cofaces(sq.at("(0-,1)"), Sign::Plus).empty());
    CHECK(sq.cofaces(sq.at("(0-,1)"), Sign::Minus).size() == 1);
  }

  TEST_CASE("maximal elements") {
    auto a = arrow_poset();
    CHECK(ids(a, a.maximal_elements()) == std::set<std::string>{"1"});
    auto path = paste(arrow(), arrow(), 0);
    CHECK(path.poset().maximal_elements().count() == 2);
    CHECK(point().poset().maximal_elements().count() == 1);
  }

  TEST_CASE("duals") {
    auto a = arrow_poset();
    auto op = a.opposite();
    CHECK(rdc::testing::face_ids(op, "1", Sign::Minus) == std::set<std::string>{"0+"});
    CHECK(rdc::testing::face_ids(op, "1", Sign::Plus) == std::set<std::string>{"0-"});
    CHECK(a.dual(std::vector<int>{}) == a);
    auto g = gray(globe(2).poset(), a);
    std::vector<int> j{1, 3};
    CHECK(g.dual(j).dual(j) == g);
    CHECK(g.opposite().opposite() == g);
  }

  TEST_CASE("iso search") {
    auto a = arrow_poset();
    auto iso = find_iso(a, a.opposite());
    REQUIRE(iso);
    CHECK(a.opposite().id((*iso)[a.at("0-")]) == "0+");
    CHECK(a.opposite().id((*iso)[a.at("0+")]) == "0-");
    CHECK(!find_iso(a, globe(2).poset()));
    auto sq = gray(a, a);
    auto autos = all_isos(sq, sq);
    REQUIRE(autos.size() == 1);
    for (Index i = 0; i < sq.size(); ++i) CHECK(autos[0][i] == i);
  }

  TEST_CASE("iso search is symmetric") {
    auto p = paste(globe(2), arrow(), 0).poset();
    auto q = p.relabel([](const std::string& s) { return "x" + s; });
    auto f = find_iso(p, q);
    auto g = find_iso(q, p);
    REQUIRE(f);
    REQUIRE(g);
    CHECK(invert(*f) == *g);
  }

  TEST_CASE("backtracking agrees with brute force") {
    std::vector<Poset> pool{point().poset(), arrow_poset(), globe(2).poset(), globe(3).poset(),
                            paste(arrow(), arrow(), 0).poset(), paste(globe(2), arrow(), 0).poset(),
                            gray(arrow_poset(), arrow_poset()), paste(globe(2), globe(2), 1).poset(),
                            atom(arrow(), paste(arrow(), arrow(), 0)).poset()};
    // shuffled relabelings of the same shapes, and orientation flips
    std::mt19937 rng(7);
    const std::size_t base = pool.size();
    for (std::size_t i = 0; i < base; ++i) {
      pool.push_back(pool[i].relabel([](const std::string& s) { return "r" + s; }));
      pool.push_back(pool[i].opposite());
    }
    for (const auto& p : pool) {
      for (const auto& q : pool) {
        if (p.size() != q.size() || p.size() > 12) continue;
        CHECK(all_isos(p, q).size() == rdc::testing::brute_force_iso_count(p, q));
      }
    }
  }

  TEST_CASE("structured ids") {
    CHECK(pair_id("a", "b") == "(a,b)");
    CHECK(tag_id("in0", "a") == "in0:a");
    auto s = split_pair_id("((a,b),c)");
    REQUIRE(s);
    CHECK(s->first == "(a,b)");
    CHECK(s->second == "c");
    CHECK(flatten_pair_id("((x,y),z)") == flatten_pair_id("(x,(y,z))"));
    CHECK(!split_pair_id("in0:a"));
  }
}
