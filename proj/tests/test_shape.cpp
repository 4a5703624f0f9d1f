#include <doctest.h>

#include "ggl/error.hpp"
#include "ggl/shape.hpp"

using namespace ggl;

namespace {

  Element ints(std::initializer_list<std::int64_t> xs) {
    Element e;
    for (auto x : xs) {
      e.entries.push_back(Value::residue(x));
    }
    return e;
  }

  Value r(std::int64_t x) {
    return Value::residue(x);
  }

}  // namespace

TEST_CASE("shape grammar") {
  for (auto text : {"scalar", "mat:2x3", "poly:4:entrywise", "poly:2:shuffle", "poly:3:conv"}) {
    CHECK(parse_shape(text).name() == text);
  }
  CHECK(parse_shape("mat:5x1").entry_count() == 5);
  CHECK(parse_shape("poly:4:shuffle").entry_count() == 5);
  CHECK_THROWS_AS(parse_shape("mat:0x2"), ParseError);
  CHECK_THROWS_AS(parse_shape("poly:2:sideways"), ParseError);
  CHECK_THROWS_AS(parse_shape("cube"), ParseError);
}

TEST_CASE("row matrix star over Z_4") {
  auto c = Carrier::modular(4);
  auto s = Shape::matrix(1, 3);
  CHECK(star(c, s, r(2), r(3), ints({3, 2, 1}), ints({1, 0, 3})) == ints({1, 0, 3}));
}

TEST_CASE("column matrix star over Z_12") {
  auto c  = Carrier::modular(12);
  auto s  = Shape::matrix(5, 1);
  auto a  = ints({10, 2, 0, 0, 1});
  auto b  = ints({3, 2, 11, 0, 0});
  auto cc = ints({1, 0, 9, 2, 0});
  CHECK(star(c, s, r(2), r(3), star(c, s, r(2), r(3), a, b), cc) == ints({1, 8, 9, 6, 4}));
  CHECK(star(c, s, r(2), r(3), a, star(c, s, r(2), r(3), b, cc)) == ints({11, 4, 3, 6, 2}));
}

TEST_CASE("shuffle product over Z_5") {
  auto c = Carrier::modular(5);
  auto s = Shape::poly(4, ProductKind::Shuffle);
  auto f = ints({1, 4, 3, 0, 0});
  auto g = ints({4, 0, 0, 1, 4});
  CHECK(star(c, s, r(2), r(3), f, g) == ints({0, 0, 3, 0, 0}));
  CHECK(star(c, s, r(2), r(3), g, f) == ints({1, 0, 0, 0, 4}));
  // independent of the parameters
  CHECK(star(c, s, r(1), r(4), f, g) == star(c, s, r(3), r(0), f, g));
}

TEST_CASE("convolution sums colliding exponents and truncates") {
  auto c = Carrier::modular(7);
  auto s = Shape::poly(2, ProductKind::Convolution);
  auto x = ints({1, 2, 3});
  auto y = ints({4, 5, 6});
  std::int64_t t = 2, u = 3;
  std::vector<std::int64_t> expect(3, 0);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      if (i + j <= 2) {
        expect[i + j] += t * x.entries[i].a + u * y.entries[j].a;
      }
    }
  }
  CHECK(star(c, s, r(t), r(u), x, y) == ints({expect[0] % 7, expect[1] % 7, expect[2] % 7}));
}

TEST_CASE("convolution at degree zero is the entrywise star") {
  auto c  = Carrier::modular(6);
  auto cv = Shape::poly(0, ProductKind::Convolution);
  for (int t = 0; t < 6; ++t) {
    for (int u = 0; u < 6; ++u) {
      for (int x = 0; x < 6; ++x) {
        for (int y = 0; y < 6; ++y) {
          CHECK(star(c, cv, r(t), r(u), ints({x}), ints({y})) == star(c, Shape::scalar(), r(t), r(u), ints({x}), ints({y})));
        }
      }
    }
  }
}

TEST_CASE("entrywise star acts per entry and stays canonical") {
  auto c = Carrier::modular(3);
  auto s = Shape::matrix(2, 2);
  ElementSpace space(c, s);
  REQUIRE(space.count() == 81);
  for (std::uint64_t i = 0; i < 81; i += 5) {
    for (std::uint64_t j = 0; j < 81; j += 7) {
      auto x = space.at(i);
      auto y = space.at(j);
      auto z = star(c, s, r(2), r(1), x, y);
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(z.entries[k].a == (2 * x.entries[k].a + y.entries[k].a) % 3);
      }
      CHECK_NOTHROW(check_element(c, s, z));
    }
  }
}

TEST_CASE("projection pair returns the left operand") {
  auto c = Carrier::modular(5);
  for (auto const& s : {Shape::scalar(), Shape::matrix(1, 2), Shape::poly(1), Shape::poly(1, ProductKind::Convolution)}) {
    ElementSpace space(c, s);
    for (std::uint64_t i = 0; i < space.count(); ++i) {
      for (std::uint64_t j = 0; j < space.count(); ++j) {
        if (s.product == ProductKind::Convolution) {
          continue;
        }
        CHECK(star(c, s, r(1), r(0), space.at(i), space.at(j)) == space.at(i));
      }
    }
  }
}

TEST_CASE("element spaces") {
  CHECK(ElementSpace(Carrier::modular(3), Shape::matrix(2, 2)).count() == 81);
  CHECK(ElementSpace(Carrier::mixed_neutrosophic(4), Shape::scalar()).count() == 16);
  ElementSpace big(Carrier::modular(12), Shape::matrix(3, 8));
  CHECK(big.too_large());
  CHECK_THROWS_AS(big.at(0), BudgetExceeded);
  ElementSpace sp(Carrier::modular(4), Shape::matrix(1, 3));
  CHECK(sp.at(1) == ints({0, 0, 1}));
  CHECK(sp.at(16) == ints({1, 0, 0}));
  for (std::uint64_t i = 0; i < sp.count(); ++i) {
    CHECK(sp.index_of(sp.at(i)) == i);
  }
}

TEST_CASE("scalar projection") {
  CHECK(scalar_projection(Shape::matrix(4, 3)) == Liftability::Liftable);
  CHECK(scalar_projection(Shape::poly(7, ProductKind::Shuffle)) == Liftability::NotLiftable);
  CHECK(scalar_projection(Shape::poly(5)) == Liftability::Liftable);
  CHECK(scalar_projection(Shape::poly(2, ProductKind::Convolution)) == Liftability::NotLiftable);
}

TEST_CASE("element text round-trips") {
  auto c = Carrier::mixed_neutrosophic(3);
  for (auto const& s : {Shape::matrix(2, 2), Shape::poly(2, ProductKind::Shuffle), Shape::scalar()}) {
    ElementSpace space(c, s);
    for (std::uint64_t i = 0; i < space.count(); i += 37) {
      auto x = space.at(i);
      CHECK(parse_element(c, s, format_element(c, s, x)) == x);
    }
  }
  CHECK_THROWS(parse_element(Carrier::modular(4), Shape::matrix(1, 3), "[[1,2]]"));
  CHECK_THROWS_AS(check_element(Carrier::modular(4), Shape::matrix(1, 3), ints({1, 2})), ShapeError);
  CHECK_THROWS(check_element(Carrier::modular(4), Shape::scalar(), ints({9})));
}
