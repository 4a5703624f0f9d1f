// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ggl/cli.hpp"
#include "ggl/demo.hpp"
#include "ggl/error.hpp"
#include "ggl/identities.hpp"
#include "ggl/structure.hpp"
#include "ggl/theorems.hpp"
#include "oracle.hpp"

using namespace ggl;

namespace {

  struct Verdict {
    bool        ok = true;
    std::string note;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok   = false;
        note = what;
      }
    }
  };

  Groupoid zn(int n, int t, int u) {
    return Groupoid::build(Carrier::modular(n), Shape::scalar(), t, u);
  }

  Element row(std::initializer_list<std::int64_t> xs) {
    Element e;
    for (auto x : xs) {
      e.entries.push_back(Value::residue(x));
    }
    return e;
  }

  bool holds(Groupoid const& g, IdentityId id) {
    return check_identity(g, id, CheckMode::exhaustive()).status == Status::Holds;
  }

  Verdict golden_examples() {
    Verdict o;
    for (auto name : {"2.1.1", "2.1.5", "2.2.1", "2.5.20"}) {
      auto t0 = std::chrono::steady_clock::now();
      auto r  = run_demo(name);
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      o.require(r.matches, std::string("demo ") + name + " differs from its golden output");
      o.require(ms < 1000, std::string("demo ") + name + " took over 1 s");
    }
    // direct recomputation of the quoted values
    auto z4 = Groupoid::build(Carrier::modular(4), Shape::matrix(1, 3), 2, 3);
    auto x = row({3, 2, 1}), y = row({1, 0, 3}), z = row({0, 2, 2});
    o.require(z4.star(x, y) == row({1, 0, 3}), "(3,2,1)*(1,0,3)");
    o.require(z4.star(z4.star(x, y), z) == row({2, 2, 0}), "left bracketing");
    o.require(z4.star(x, z4.star(y, z)) == row({0, 2, 2}), "right bracketing");

    auto z12 = Groupoid::build(Carrier::modular(12), Shape::matrix(5, 1), 2, 3);
    auto a = row({10, 2, 0, 0, 1}), b = row({3, 2, 11, 0, 0}), c = row({1, 0, 9, 2, 0});
    o.require(z12.star(z12.star(a, b), c) == row({1, 8, 9, 6, 4}), "(a*b)*c over Z_12");
    o.require(z12.star(a, z12.star(b, c)) == row({11, 4, 3, 6, 2}), "a*(b*c) over Z_12");

    auto z5 = Groupoid::build(Carrier::modular(5), Shape::poly(4, ProductKind::Shuffle), 1, 1);
    auto f = row({1, 4, 3, 0, 0}), g = row({4, 0, 0, 1, 4}), h = row({1, 4, 1, 2, 3});
    o.require(z5.star(f, g) == row({0, 0, 3, 0, 0}), "f*g = 3x^2");
    o.require(z5.star(g, f) == row({1, 0, 0, 0, 4}), "g*f = 1+4x^4");
    o.require(z5.star(z5.star(f, g), h) == row({0, 0, 1, 0, 0}), "(f*g)*h = x^2");
    o.require(z5.star(f, z5.star(g, h)) == row({0, 0, 4, 0, 0}), "f*(g*h) = 4x^2");

    auto o5 = Carrier::interval_of(Carrier::modular(5));
    auto iv = Groupoid::build(o5, Shape::matrix(1, 3), 2, 3);
    auto p  = parse_element(o5, Shape::matrix(1, 3), "[[[0,1],[0,3],[0,2]]]");
    auto q  = parse_element(o5, Shape::matrix(1, 3), "[[[0,4],[0,1],[0,2]]]");
    o.require(iv.format(iv.star(p, q)) == "[[[0,4],[0,4],[0,0]]]", "interval row product");
    return o;
  }

  Groupoid printed_table() {
    std::vector<std::vector<std::uint64_t>> rows = {
        {0, 4, 1, 5, 2, 6, 3}, {3, 0, 4, 1, 5, 2, 6}, {6, 3, 0, 4, 1, 5, 2}, {2, 6, 3, 0, 4, 1, 5},
        {5, 2, 6, 3, 0, 4, 1}, {1, 5, 2, 6, 3, 0, 4}, {4, 1, 5, 2, 6, 3, 0}};
    return Groupoid::from_table({"a0", "a1", "a2", "a3", "a4", "a5", "a6"}, rows);
  }

  Verdict table_simple() {
    Verdict o;
    auto    printed = printed_table();
    auto    g       = zn(7, 3, 4);
    for (std::uint64_t i = 0; i < 7; ++i) {
      for (std::uint64_t j = 0; j < 7; ++j) {
        o.require(g.star(i, j) == printed.star(i, j), "cell mismatch");
      }
    }
    o.require(is_simple(printed).simple, "printed table groupoid not simple");
    o.require(is_simple(g).simple, "Z_7(3,4) not simple");
    return o;
  }

  Verdict iff_sweeps() {
    Verdict o;
    std::uint64_t instances = 0;
    for (int n = 3; n <= 16; ++n) {
      for (auto carrier : {Carrier::modular(n), Carrier::pure_neutrosophic(n)}) {
        for (int t = 0; t < n; ++t) {
          for (int u = 0; u < n; ++u) {
            if (t == 0 && u == 0) {
              continue;
            }
            auto g = Groupoid::build(carrier, Shape::scalar(), t, u);
            ++instances;
            auto tag = carrier.name() + " (" + std::to_string(t) + "," + std::to_string(u) + ")";
            o.require(holds(g, IdentityId::Associative) == ((t * t - t) % n == 0 && (u * u - u) % n == 0),
                      "associativity disagrees at " + tag);
            o.require(holds(g, IdentityId::Idempotent) == ((t + u) % n == 1), "idempotency disagrees at " + tag);
          }
        }
      }
    }
    if (o.ok) {
      o.note = std::to_string(instances) + " groupoids, 0 disagreements";
    }
    return o;
  }

  Verdict equal_pair_laws() {
    Verdict o;
    for (int n = 3; n <= 16; ++n) {
      for (auto carrier : {Carrier::modular(n), Carrier::pure_neutrosophic(n)}) {
        for (int t = 1; t < n; ++t) {
          auto g = Groupoid::build(carrier, Shape::scalar(), t, t);
          o.require(holds(g, IdentityId::PIdentity), "P-identity fails at " + g.describe());
        }
      }
    }
    for (int p = 3; p <= 23; ++p) {
      if (!oracle::is_prime(p)) {
        continue;
      }
      for (int t = 2; t < p; ++t) {
        auto g = zn(p, t, t);
        o.require(!holds(g, IdentityId::LeftAlternative), "left alternative holds at " + g.describe());
        o.require(!holds(g, IdentityId::RightAlternative), "right alternative holds at " + g.describe());
      }
    }
    return o;
  }

  Verdict ideal_duality() {
    Verdict o;
    for (int n = 3; n <= 12; ++n) {
      for (int t = 0; t < n; ++t) {
        for (int u = 0; u < n; ++u) {
          if (t == 0 && u == 0) {
            continue;
          }
          auto a = enumerate_ideals(zn(n, t, u));
          auto b = enumerate_ideals(zn(n, u, t));
          o.require(a.left == b.right, "duality fails at Z_" + std::to_string(n));
          o.require(a.right == b.left, "duality fails at Z_" + std::to_string(n));
        }
      }
    }
    return o;
  }

  Verdict simplicity() {
    Verdict o;
    o.require(is_simple(zn(5, 2, 3)).simple, "Z_5(2,3)");
    o.require(is_simple(zn(7, 2, 5)).simple, "Z_7(2,5)");
    o.require(is_simple(zn(13, 2, 11)).simple, "Z_13(2,11)");
    o.require(is_simple(printed_table()).simple, "printed table");
    // Z_8(2,6): {0,2,4,6} is the only subgroupoid of order 4; whether it is
    // normal is a report-only matter and must not abort the run
    auto z8 = zn(8, 2, 6);
    std::vector<SubsetHandle> order4;
    for (auto const& s : enumerate_subgroupoids(z8)) {
      if (s.size() == 4) {
        order4.push_back(s);
      }
    }
    o.require(order4.size() == 1 && order4[0] == SubsetHandle(8, {0, 2, 4, 6}), "order-4 subgroupoids of Z_8(2,6)");
    o.require(!is_simple(z8).simple, "Z_8(2,6) reported simple");
    bool seen = false;
    for (auto const& i : verify_theorem("T9", parse_range("n=8..8"))) {
      o.require(i.outcome != ggl::Outcome::Fail, "T9 instance failed");
      if (i.instance.find("(2,6)") != std::string::npos) {
        seen = true;
        if (o.ok) {
          o.note = "Z_8(2,6) " + ggl::outcome_name(i.outcome) + ": " + i.details;
        }
      }
    }
    o.require(seen, "T9 has no Z_8(2,6) instance");
    return o;
  }

  Verdict smarandache() {
    Verdict o;
    auto    check = [&](Groupoid const& g, std::vector<IdentityId> ids, SmarandacheStatus expect) {
      auto v = smarandache_identity(g, ids);
      o.require(v.status == expect, g.describe() + " gave " + smarandache_status_name(v.status));
      if (v.witness) {
        auto m = v.witness->members();
        o.require(is_semigroup(g, *v.witness), "witness is not a semigroup");
        if (v.status == SmarandacheStatus::HoldsOnSemigroupWitness) {
          for (auto id : ids) {
            o.require(holds_on_subset(g, id, m), "witness does not satisfy the identity");
          }
        }
      }
      return v;
    };
    check(zn(10, 5, 6), {IdentityId::Moufang}, SmarandacheStatus::StrongHolds);
    auto bol = check(zn(4, 2, 3), {IdentityId::Bol}, SmarandacheStatus::HoldsOnSemigroupWitness);
    o.require(bol.witness && *bol.witness == SubsetHandle(4, {0, 2}), "Bol witness is not {0,2}");
    check(zn(6, 4, 3), {IdentityId::PIdentity}, SmarandacheStatus::StrongHolds);
    check(zn(14, 7, 8), {IdentityId::LeftAlternative, IdentityId::RightAlternative}, SmarandacheStatus::StrongHolds);
    return o;
  }

  Verdict counting() {
    Verdict o;
    auto    count = [](char const* c, ClassKind k, bool eq = false) {
      return count_class({parse_carrier(c), k, eq});
    };
    o.require(count("zni:3", ClassKind::AllPairs) == 2, "Z_3I all pairs");
    o.require(count("nzn:3", ClassKind::AllPairs) == 56, "N(Z_3) all pairs");
    o.require(count("nzn:4", ClassKind::AllPairs) == 210, "N(Z_4) all pairs");
    o.require(count("zn:4", ClassKind::LevelOnePairs) == 6, "Z_4 level-one pairs");
    o.require(count("zni:6", ClassKind::IdempotentPairs, true) == 4, "Z_6I idempotent pairs");
    o.require(count("zni:9", ClassKind::IdempotentPairs, true) == 7, "Z_9I idempotent pairs");
    for (int n = 3; n <= 50; ++n) {
      auto c = count(("zni:" + std::to_string(n)).c_str(), ClassKind::IdempotentPairs, true);
      o.require(c % 2 == static_cast<std::uint64_t>(n % 2), "parity fails at n=" + std::to_string(n));
    }
    return o;
  }

  Verdict lifting() {
    Verdict o;
    int     compared = 0;
    auto    c        = Carrier::modular(3);
    for (int t = 0; t < 3; ++t) {
      for (int u = 0; u < 3; ++u) {
        if (t == 0 && u == 0) {
          continue;
        }
        auto scalar = Groupoid::build(c, Shape::scalar(), t, u);
        auto lifted = Groupoid::build(c, Shape::matrix(2, 2), t, u);
        for (auto id : kAllIdentities) {
          auto a = check_identity(scalar, id, CheckMode::exhaustive());
          auto b = check_identity(lifted, id, CheckMode::exhaustive());
          o.require(b.method == Method::Exhaustive, "lifted verdict was not exhaustive");
          o.require(a.status == b.status, "verdicts differ for " + identity_name(id) + " at " + lifted.describe());
          ++compared;
        }
      }
    }
    if (o.ok) {
      o.note = std::to_string(compared) + " verdicts on 81 elements; (0,0) is not a groupoid";
    }
    return o;
  }

  Verdict determinism() {
    Verdict                  o;
    std::vector<std::string> args = {"verify", "--suite", "default", "--seed", "42", "--no-timing"};
    std::ostringstream       out1, out2, err;
    int                      c1 = cli::run(args, out1, err);
    int                      c2 = cli::run(args, out2, err);
    o.require(c1 == 0 && c2 == 0, "exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
    o.require(out1.str() == out2.str(), "reports differ");
    o.require(!out1.str().empty(), "empty report");
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    char const*              title;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria = {
      {"golden worked examples", golden_examples},
      {"printed 7x7 table and simplicity", table_simple},
      {"iff sweeps for associativity and idempotency", iff_sweeps},
      {"equal-pair laws", equal_pair_laws},
      {"ideal duality", ideal_duality},
      {"simplicity instances", simplicity},
      {"Smarandache identity suite", smarandache},
      {"class counting", counting},
      {"lifting soundness", lifting},
      {"suite determinism", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    t0 = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o.ok   = false;
      o.note = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    all     = all && o.ok;
    std::printf("criterion %2zu %s  %-46s %8.0f ms%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].title, ms,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
