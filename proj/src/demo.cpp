#include "ggl/demo.hpp"

#include <functional>
#include <map>

#include "ggl/error.hpp"
#include "ggl/groupoid.hpp"
#include "ggl/identities.hpp"
#include "ggl/structure.hpp"

namespace ggl {

  namespace {

    constexpr char const* kStar = "∗";

    Element elem(Carrier const& c, std::initializer_list<std::int64_t> xs) {
      Element out;
      for (auto x : xs) {
        out.entries.push_back(reduce(c, {x}));
      }
      return out;
    }

    std::string tuple(Carrier const& c, Element const& x) {
      std::string out = "(";
      for (std::size_t i = 0; i < x.entries.size(); ++i) {
        out += (i ? "," : "") + format_value(c, x.entries[i]);
      }
      return out + ")";
    }

    std::string interval_row(Carrier const& c, Element const& x) {
      std::string out = "[";
      for (std::size_t i = 0; i < x.entries.size(); ++i) {
        out += (i ? "," : "") + format_value(c, x.entries[i]);
      }
      return out + "]";
    }

    std::string poly_text(Element const& x) {
      std::string out;
      for (std::size_t k = 0; k < x.entries.size(); ++k) {
        auto c = x.entries[k].a;
        if (c == 0) {
          continue;
        }
        if (!out.empty()) {
          out += "+";
        }
        if (k == 0) {
          out += std::to_string(c);
        } else {
          out += c == 1 ? "" : std::to_string(c);
          out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
      }
      return out.empty() ? "0" : out;
    }

    std::string table_text(Groupoid const& g) {
      return to_tsv(cayley_table(g));
    }

    std::string subset_text(Groupoid const& g, SubsetHandle const& s) {
      std::string out = "{";
      bool        first = true;
      for (auto i : s.members()) {
        out += (first ? "" : ",") + g.label(i);
        first = false;
      }
      return out + "}";
    }

    GroupoidSpec native(Carrier const& c, char const* t, char const* u) {
      return GroupoidSpec{c, Shape::scalar(), parse_param(c, t), parse_param(c, u), std::nullopt};
    }

    struct Entry {
      std::string                  title;
      std::function<std::string()> render;
      std::string                  golden;
    };

    std::map<std::string, Entry, std::less<>> const& demos() {
      static std::map<std::string, Entry, std::less<>> const registry = [] {
        std::map<std::string, Entry, std::less<>> m;

        m["1.1.1"] = {
            "Cayley table of Z_7 with x*y = 3x + 4y and its simplicity",
            [] {
              auto g   = Groupoid::build(Carrier::modular(7), Shape::scalar(), 3, 4);
              auto out = std::string("Z_7 scalar (3,4)\n") + table_text(g);
              out += std::string("simple: ") + (is_simple(g).simple ? "yes" : "no") + "\n";
              return out;
            },
            "Z_7 scalar (3,4)\n"
            "*\t0\t1\t2\t3\t4\t5\t6\n"
            "0\t0\t4\t1\t5\t2\t6\t3\n"
            "1\t3\t0\t4\t1\t5\t2\t6\n"
            "2\t6\t3\t0\t4\t1\t5\t2\n"
            "3\t2\t6\t3\t0\t4\t1\t5\n"
            "4\t5\t2\t6\t3\t0\t4\t1\n"
            "5\t1\t5\t2\t6\t3\t0\t4\n"
            "6\t4\t1\t5\t2\t6\t3\t0\n"
            "simple: yes\n"};

        m["2.1.1"] = {
            "1x3 row matrices over Z_4 with (2,3)",
            [] {
              auto c = Carrier::modular(4);
              auto g = Groupoid::build(c, Shape::matrix(1, 3), 2, 3);
              auto x = elem(c, {3, 2, 1});
              auto y = elem(c, {1, 0, 3});
              auto z = elem(c, {0, 2, 2});
              auto l = g.star(g.star(x, y), z);
              auto r = g.star(x, g.star(y, z));
              std::string out;
              out += tuple(c, x) + kStar + tuple(c, y) + " = " + tuple(c, g.star(x, y)) + "\n";
              out += "[" + tuple(c, x) + kStar + tuple(c, y) + "]" + kStar + tuple(c, z) + " = " + tuple(c, l) + "\n";
              out += tuple(c, x) + kStar + "[" + tuple(c, y) + kStar + tuple(c, z) + "] = " + tuple(c, r) + "\n";
              out += std::string("associative: ") + (l == r ? "yes" : "no") + "\n";
              return out;
            },
            "(3,2,1)∗(1,0,3) = (1,0,3)\n"
            "[(3,2,1)∗(1,0,3)]∗(0,2,2) = (2,2,0)\n"
            "(3,2,1)∗[(1,0,3)∗(0,2,2)] = (0,2,2)\n"
            "associative: no\n"};

        m["2.1.5"] = {
            "5x1 column matrices over Z_12 with (2,3)",
            [] {
              auto c = Carrier::modular(12);
              auto g = Groupoid::build(c, Shape::matrix(5, 1), 2, 3);
              auto a = elem(c, {10, 2, 0, 0, 1});
              auto b = elem(c, {3, 2, 11, 0, 0});
              auto d = elem(c, {1, 0, 9, 2, 0});
              std::string out;
              out += "a = " + tuple(c, a) + "ᵗ b = " + tuple(c, b) + "ᵗ c = " + tuple(c, d) + "ᵗ\n";
              out += "(a" + std::string(kStar) + "b)" + kStar + "c = " + tuple(c, g.star(g.star(a, b), d)) + "ᵗ\n";
              out += "a" + std::string(kStar) + "(b" + kStar + "c) = " + tuple(c, g.star(a, g.star(b, d))) + "ᵗ\n";
              return out;
            },
            "a = (10,2,0,0,1)ᵗ b = (3,2,11,0,0)ᵗ c = (1,0,9,2,0)ᵗ\n"
            "(a∗b)∗c = (1,8,9,6,4)ᵗ\n"
            "a∗(b∗c) = (11,4,3,6,2)ᵗ\n"};

        m["2.2.1"] = {
            "shuffle product of degree-4 polynomials over Z_5",
            [] {
              auto c = Carrier::modular(5);
              auto g = Groupoid::build(c, Shape::poly(4, ProductKind::Shuffle), 1, 1);
              auto f = elem(c, {1, 4, 3, 0, 0});
              auto q = elem(c, {4, 0, 0, 1, 4});
              auto h = elem(c, {1, 4, 1, 2, 3});
              std::string s(kStar);
              std::string out;
              out += "f = " + poly_text(f) + " g = " + poly_text(q) + " h = " + poly_text(h) + "\n";
              out += "f" + s + "g = " + poly_text(g.star(f, q)) + "\n";
              out += "g" + s + "f = " + poly_text(g.star(q, f)) + "\n";
              out += "(f" + s + "g)" + s + "h = " + poly_text(g.star(g.star(f, q), h)) + "\n";
              out += "f" + s + "(g" + s + "h) = " + poly_text(g.star(f, g.star(q, h))) + "\n";
              return out;
            },
            "f = 1+4x+3x^2 g = 4+x^3+4x^4 h = 1+4x+x^2+2x^3+3x^4\n"
            "f∗g = 3x^2\n"
            "g∗f = 1+4x^4\n"
            "(f∗g)∗h = x^2\n"
            "f∗(g∗h) = 4x^2\n"};

        m["2.3.51"] = {
            "idempotent interval groupoid over Z_8 with (4,5)",
            [] {
              auto c = Carrier::interval_of(Carrier::modular(8));
              auto g = Groupoid::build(c, Shape::scalar(), 4, 5);
              std::string out = "o(Z_8) scalar (4,5)\n";
              for (std::uint64_t i = 0; i < g.size(); ++i) {
                out += g.label(i) + kStar + g.label(i) + " = " + g.label(g.star(i, i)) + "\n";
              }
              auto v = check_identity(g, IdentityId::Idempotent, CheckMode::exhaustive());
              return out + "idempotent: " + status_name(v.status) + "\n";
            },
            "o(Z_8) scalar (4,5)\n"
            "[0,0]∗[0,0] = [0,0]\n"
            "[0,1]∗[0,1] = [0,1]\n"
            "[0,2]∗[0,2] = [0,2]\n"
            "[0,3]∗[0,3] = [0,3]\n"
            "[0,4]∗[0,4] = [0,4]\n"
            "[0,5]∗[0,5] = [0,5]\n"
            "[0,6]∗[0,6] = [0,6]\n"
            "[0,7]∗[0,7] = [0,7]\n"
            "idempotent: holds\n"};

        m["2.5.20"] = {
            "1x3 interval row matrices over Z_5 with (2,3)",
            [] {
              auto c = Carrier::interval_of(Carrier::modular(5));
              auto g = Groupoid::build(c, Shape::matrix(1, 3), 2, 3);
              auto a = elem(c, {1, 3, 2});
              auto b = elem(c, {4, 1, 2});
              return interval_row(c, a) + kStar + interval_row(c, b) + " = "
                     + interval_row(c, g.star(a, b)) + "\n";
            },
            "[[0,1],[0,3],[0,2]]∗[[0,4],[0,1],[0,2]] = [[0,4],[0,4],[0,0]]\n"};

        m["2.6.4"] = {
            "Bol identity on Z_4 with (2,3) and its semigroup witness",
            [] {
              auto g = Groupoid::build(Carrier::modular(4), Shape::scalar(), 2, 3);
              auto v = check_identity(g, IdentityId::Bol, CheckMode::exhaustive());
              auto s = smarandache_identity(g, IdentityId::Bol);
              std::string out = "Z_4 scalar (2,3), bol " + identity_equation(IdentityId::Bol) + "\n";
              out += "exhaustive: " + status_name(v.status);
              if (v.fails()) {
                out += " at (x,y,z) = (" + v.witness_labels[0] + "," + v.witness_labels[1] + ","
                       + v.witness_labels[2] + ")";
              }
              out += "\nsmarandache: " + smarandache_status_name(s.status);
              if (s.witness) {
                out += " " + subset_text(g, *s.witness);
              }
              return out + "\n";
            },
            "Z_4 scalar (2,3), bol ((xy)z)y = x((yz)y)\n"
            "exhaustive: fails at (x,y,z) = (1,0,0)\n"
            "smarandache: holds-on-semigroup-witness {0,2}\n"};

        m["2.6.5"] = {
            "Moufang identity on Z_10 with (5,6)",
            [] {
              auto g = Groupoid::build(Carrier::modular(10), Shape::scalar(), 5, 6);
              auto v = check_identity(g, IdentityId::Moufang, CheckMode::exhaustive());
              auto s = smarandache_identity(g, IdentityId::Moufang);
              std::string out = "Z_10 scalar (5,6), moufang " + identity_equation(IdentityId::Moufang) + "\n";
              out += "exhaustive: " + status_name(v.status) + "\n";
              out += "smarandache: " + smarandache_status_name(s.status) + "\n";
              return out;
            },
            "Z_10 scalar (5,6), moufang (xy)(zx) = (x(yz))x\n"
            "exhaustive: holds\n"
            "smarandache: strong-holds\n"};

        m["3.2.1"] = {
            "the two pure neutrosophic groupoids over Z_3I",
            [] {
              auto c = Carrier::pure_neutrosophic(3);
              return "Z_3I (I,2I)\n" + table_text(Groupoid::build(native(c, "I", "2I")))
                     + "Z_3I (2I,I)\n" + table_text(Groupoid::build(native(c, "2I", "I")));
            },
            "Z_3I (I,2I)\n"
            "*\t0\tI\t2I\n"
            "0\t0\t2I\tI\n"
            "I\tI\t0\t2I\n"
            "2I\t2I\tI\t0\n"
            "Z_3I (2I,I)\n"
            "*\t0\tI\t2I\n"
            "0\t0\tI\t2I\n"
            "I\t2I\t0\tI\n"
            "2I\tI\t2I\t0\n"};

        m["3.2.4"] = {
            "idempotent pure neutrosophic groupoid Z_6I with (2I,5I)",
            [] {
              auto g = Groupoid::build(native(Carrier::pure_neutrosophic(6), "2I", "5I"));
              std::string out = "Z_6I (2I,5I)\n";
              for (std::uint64_t i = 0; i < g.size(); ++i) {
                out += g.label(i) + kStar + g.label(i) + " = " + g.label(g.star(i, i)) + "\n";
              }
              auto v = check_identity(g, IdentityId::Idempotent, CheckMode::exhaustive());
              return out + "idempotent: " + status_name(v.status) + "\n";
            },
            "Z_6I (2I,5I)\n"
            "0∗0 = 0\n"
            "I∗I = I\n"
            "2I∗2I = 2I\n"
            "3I∗3I = 3I\n"
            "4I∗4I = 4I\n"
            "5I∗5I = 5I\n"
            "idempotent: holds\n"};

        m["3.2.7"] = {
            "equal special neutrosophic groupoid Z_5I with (2I,2I)",
            [] {
              auto c = Carrier::pure_neutrosophic(5);
              auto g = Groupoid::build(native(c, "2I", "2I"));
              auto v = [&](char const* s) { return g.index_of(Element{{parse_value(c, s)}}); };
              auto a = v("2I");
              auto b = v("3I");
              auto d = v("4I");
              std::string s(kStar);
              std::string out = "Z_5I (2I,2I)\n" + table_text(g);
              out += "(2I" + s + "3I)" + s + "4I = " + g.label(g.star(g.star(a, b), d)) + "\n";
              out += "2I" + s + "(3I" + s + "4I) = " + g.label(g.star(a, g.star(b, d))) + "\n";
              return out;
            },
            "Z_5I (2I,2I)\n"
            "*\t0\tI\t2I\t3I\t4I\n"
            "0\t0\t2I\t4I\tI\t3I\n"
            "I\t2I\t4I\tI\t3I\t0\n"
            "2I\t4I\tI\t3I\t0\t2I\n"
            "3I\tI\t3I\t0\t2I\t4I\n"
            "4I\t3I\t0\t2I\t4I\tI\n"
            "(2I∗3I)∗4I = 3I\n"
            "2I∗(3I∗4I) = 2I\n"};

        return m;
      }();
      return registry;
    }

  }  // namespace

  std::vector<std::string> demo_names() {
    std::vector<std::string> out;
    for (auto const& [name, entry] : demos()) {
      out.push_back(name);
    }
    return out;
  }

  DemoResult run_demo(std::string_view name) {
    auto const& m  = demos();
    auto        it = m.find(name);
    if (it == m.end()) {
      throw DomainError("unknown example '" + std::string(name) + "'");
    }
    DemoResult out;
    out.name    = it->first;
    out.title   = it->second.title;
    out.output  = it->second.render();
    out.golden  = it->second.golden;
    out.matches = out.output == out.golden;
    return out;
  }

}  // namespace ggl
