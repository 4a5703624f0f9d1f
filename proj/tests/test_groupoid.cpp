#include <doctest.h>

#include <sstream>

#include "ggl/error.hpp"
#include "ggl/groupoid.hpp"
#include "oracle.hpp"

using namespace ggl;

namespace {

  GroupoidSpec spec(char const* carrier, char const* shape, char const* t, char const* u) {
    GroupoidSpec s;
    s.carrier = parse_carrier(carrier);
    s.shape   = parse_shape(shape);
    s.t       = parse_param(s.carrier, t);
    s.u       = parse_param(s.carrier, u);
    return s;
  }

  // Rows of a printed table, labels separated by single spaces.
  std::vector<std::vector<std::string>> rows_of(std::string const& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream                    in(text);
    std::string                           line;
    while (std::getline(in, line)) {
      std::istringstream       ls(line);
      std::vector<std::string> row;
      std::string              cell;
      while (ls >> cell) {
        row.push_back(cell);
      }
      out.push_back(row);
    }
    return out;
  }

  void check_table(Groupoid const& g, std::string const& printed) {
    auto rows = rows_of(printed);
    auto t    = cayley_table(g);
    REQUIRE(rows.size() == t.labels.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == t.labels.size());
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        CHECK(t.labels[t.cells[i][j]] == rows[i][j]);
      }
    }
  }

}  // namespace

TEST_CASE("printed 7x7 table equals Z_7 (3,4)") {
  // a_k written as k
  std::string const printed =
      "0 4 1 5 2 6 3\n"
      "3 0 4 1 5 2 6\n"
      "6 3 0 4 1 5 2\n"
      "2 6 3 0 4 1 5\n"
      "5 2 6 3 0 4 1\n"
      "1 5 2 6 3 0 4\n"
      "4 1 5 2 6 3 0\n";
  auto g = Groupoid::build(Carrier::modular(7), Shape::scalar(), 3, 4);
  check_table(g, printed);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      CHECK(g.star(i, j) == static_cast<std::uint64_t>(oracle::star(7, 3, 4, i, j)));
    }
  }
}

TEST_CASE("printed pure neutrosophic tables") {
  check_table(Groupoid::build(spec("zni:3", "scalar", "I", "2I")),
              "0 2I I\nI 0 2I\n2I I 0\n");
  check_table(Groupoid::build(spec("zni:3", "scalar", "2I", "I")),
              "0 I 2I\n2I 0 I\nI 2I 0\n");
  check_table(Groupoid::build(spec("zni:5", "scalar", "2I", "2I")),
              "0 2I 4I I 3I\n"
              "2I 4I I 3I 0\n"
              "4I I 3I 0 2I\n"
              "I 3I 0 2I 4I\n"
              "3I 0 2I 4I I\n");
}

TEST_CASE("build validates and classifies") {
  auto g = Groupoid::build(Carrier::modular(4), Shape::matrix(1, 3), 2, 3);
  CHECK(g.order() == 64);
  CHECK(classify_level(Carrier::modular(4), plain_param(2), plain_param(3)) == Level::One);
  CHECK(classify_level(Carrier::modular(8), plain_param(2), plain_param(4)) == Level::Three);
  CHECK(classify_level(Carrier::modular(8), plain_param(3), plain_param(5)) == Level::One);
  CHECK(classify_level(Carrier::modular(8), plain_param(1), plain_param(5)) == Level::Two);
  auto z5i = Carrier::pure_neutrosophic(5);
  CHECK(classify_level(z5i, parse_param(z5i, "2I"), parse_param(z5i, "2I")) == Level::Four);
  CHECK(classify_level(Carrier::modular(8), plain_param(0), plain_param(5)) == Level::Five);
  CHECK_THROWS_AS(Groupoid::build(Carrier::modular(5), Shape::scalar(), 0, 0), DomainError);
  CHECK_THROWS_AS(Groupoid::build(Carrier::modular(5), Shape::scalar(), 5, 0), DomainError);

  auto pinned  = make_spec(Carrier::modular(8), Shape::scalar(), 2, 4);
  pinned.level = Level::One;
  CHECK_THROWS_AS(Groupoid::build(pinned), DomainError);
  pinned.level = Level::Three;
  CHECK_NOTHROW(Groupoid::build(pinned));
}

TEST_CASE("pure neutrosophic parameters are units, not zeros") {
  auto g = Groupoid::build(spec("zni:4", "scalar", "0", "I"));
  CHECK(g.order() == 4);
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t y = 0; y < 4; ++y) {
      CHECK(g.star(x, y) == y);
    }
  }
}

TEST_CASE("from_table") {
  auto trivial = Groupoid::from_table({"e"}, {{0}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.star(0, 0) == 0);
  CHECK_THROWS_AS(Groupoid::from_table({"a", "b"}, {{0, 1}}), ShapeError);
  CHECK_THROWS_AS(Groupoid::from_table({"a", "b"}, {{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Groupoid::from_table({"a", "a"}, {{0, 1}, {1, 0}}), DomainError);
  CHECK_FALSE(trivial.has_spec());
  CHECK_FALSE(trivial.zero_index().has_value());
}

TEST_CASE("table round-trips through TSV and JSON") {
  std::vector<Groupoid> gs = {
      Groupoid::build(Carrier::modular(7), Shape::scalar(), 3, 4),
      Groupoid::build(spec("nzn:3", "scalar", "1", "1+I")),
      Groupoid::build(spec("o(zn:6)", "scalar", "2", "5")),
      Groupoid::build(Carrier::modular(2), Shape::matrix(2, 2), 1, 1),
      Groupoid::build(spec("zn:3", "poly:1:shuffle", "1", "1")),
  };
  for (auto const& g : gs) {
    CAPTURE(g.describe());
    auto t = cayley_table(g);
    CHECK(table_from_tsv(to_tsv(t)) == t);
    CHECK(table_from_json_text(to_json_text(t)) == t);
    auto h = from_table(t);
    for (std::uint64_t i = 0; i < g.size(); ++i) {
      for (std::uint64_t j = 0; j < g.size(); ++j) {
        CHECK(h.star(i, j) == g.star(i, j));
      }
    }
  }
  CHECK_THROWS_AS(cayley_table(Groupoid::build(Carrier::modular(300), Shape::scalar(), 1, 2)), BudgetExceeded);
  CHECK_THROWS(table_from_tsv("*\ta\na\tb\n"));
  CHECK_THROWS(table_from_json_text("{\"labels\":[\"a\"]}"));
}

TEST_CASE("equal parameters give commutative groupoids") {
  for (auto c : {"zn:6", "zni:5", "nzn:2", "o(zn:4)"}) {
    auto carrier = parse_carrier(c);
    for (std::int64_t t = 1; t < carrier.modulus(); ++t) {
      auto g = Groupoid::build(carrier, Shape::scalar(), t, t);
      for (std::uint64_t x = 0; x < g.size(); ++x) {
        for (std::uint64_t y = 0; y < g.size(); ++y) {
          CHECK(g.star(x, y) == g.star(y, x));
        }
      }
    }
  }
}

TEST_CASE("element indexing agrees with element products") {
  auto g = Groupoid::build(Carrier::modular(3), Shape::matrix(2, 2), 2, 1);
  CHECK(g.size() == 81);
  for (std::uint64_t i = 0; i < 81; i += 4) {
    for (std::uint64_t j = 0; j < 81; j += 3) {
      CHECK(g.index_of(g.star(g.element(i), g.element(j))) == g.star(i, j));
    }
  }
  CHECK(g.zero_index() == 0);
  CHECK(g.describe() == "zn:3 mat:2x2 (2,1)");
}

TEST_CASE("rational groupoids evaluate but do not enumerate") {
  auto q = Carrier::rational();
  GroupoidSpec s{q, Shape::scalar(), parse_param(q, "1/2"), parse_param(q, "3"), std::nullopt};
  auto         g = Groupoid::build(s);
  CHECK_FALSE(g.enumerable());
  CHECK_FALSE(g.order().has_value());
  Element x{{parse_value(q, "2/3")}};
  Element y{{parse_value(q, "1/9")}};
  CHECK(g.format(g.star(x, y)) == "2/3");
  CHECK_THROWS_AS(g.size(), DomainError);
}

TEST_CASE("indeterminate flags") {
  auto g = Groupoid::build(spec("nzn:3", "scalar", "1", "2"));
  for (std::uint64_t i = 0; i < g.size(); ++i) {
    auto l = g.label(i);
    CHECK(g.has_indeterminate(i) == (l.find('I') != std::string::npos));
    bool pure = l != "0" && l.find('I') != std::string::npos && l.find('+') == std::string::npos;
    CHECK(g.is_pure_indeterminate(i) == pure);
  }
}

TEST_CASE("level names") {
  for (auto l : {Level::One, Level::Two, Level::Three, Level::Four, Level::Five}) {
    CHECK(parse_level(level_name(l)) == l);
  }
  CHECK_THROWS_AS(parse_level("six"), ParseError);
}
