#include "ggl/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <thread>

#include "ggl/demo.hpp"
#include "ggl/error.hpp"
#include "ggl/groupoid.hpp"
#include "ggl/identities.hpp"
#include "ggl/structure.hpp"
#include "parallel.hpp"

namespace ggl {

  namespace {

    bool is_prime(std::uint64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    using Sink = std::vector<InstanceVerdict>;

    void record(Sink& out, std::string instance, bool ok, std::string details = {}) {
      out.push_back({std::move(instance), ok ? Outcome::Pass : Outcome::Fail, std::move(details)});
    }

    void disagree(Sink& out, std::string instance, std::string details) {
      out.push_back({std::move(instance), Outcome::ReportedDisagreement, std::move(details)});
    }

    std::uint64_t budget_of(SuiteConfig const& cfg) {
      return cfg.budget != 0 ? cfg.budget : evaluation_budget();
    }

    bool holds(Groupoid const& g, IdentityId id, SuiteConfig const& cfg) {
      return !check_identity(g, id, CheckMode::exhaustive(), budget_of(cfg)).fails();
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    // Every ordered (t, u) != (0, 0) over Z_n.
    template <typename Fn>
    void for_pairs(std::uint32_t n, Fn&& fn) {
      for (std::uint32_t t = 0; t < n; ++t) {
        for (std::uint32_t u = 0; u < n; ++u) {
          if (t != 0 || u != 0) {
            fn(t, u);
          }
        }
      }
    }

    std::vector<Carrier> integer_carriers(std::uint32_t n) {
      return {Carrier::modular(n), Carrier::pure_neutrosophic(n),
              Carrier::interval_of(Carrier::modular(n))};
    }

    std::string name_of(Groupoid const& g) {
      return g.describe();
    }

    std::string subset_text(Groupoid const& g, SubsetHandle const& s) {
      return subset_json(g, s).dump();
    }

    //////////////////////////////////////////////////////////////////////
    // Individual checks
    //////////////////////////////////////////////////////////////////////

    void t1_idempotent(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        for (auto const& c : integer_carriers(n)) {
          for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
            auto g     = Groupoid::build(c, Shape::scalar(), t, u);
            bool brute = holds(g, IdentityId::Idempotent, cfg);
            bool pred  = closed_form(ClosedForm::IdempotentIff, n, t, u);
            record(out, name_of(g), brute == pred,
                   "idempotent " + yes_no(brute) + ", t+u=1 " + yes_no(pred));
          });
        }
      }
    }

    void t2_semigroup(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        for (auto const& c : integer_carriers(n)) {
          for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
            auto g     = Groupoid::build(c, Shape::scalar(), t, u);
            bool brute = holds(g, IdentityId::Associative, cfg);
            bool pred  = closed_form(ClosedForm::SemigroupIff, n, t, u);
            record(out, name_of(g), brute == pred,
                   "associative " + yes_no(brute) + ", t^2=t and u^2=u " + yes_no(pred));
          });
        }
      }
    }

    void t3_equal_pair_p(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        for (auto const& c : {Carrier::modular(n), Carrier::pure_neutrosophic(n)}) {
          for (std::uint32_t t = 1; t < n; ++t) {
            auto g = Groupoid::build(c, Shape::scalar(), t, t);
            record(out, name_of(g), holds(g, IdentityId::PIdentity, cfg), "P-identity");
          }
        }
        if (n <= 5) {
          auto c = Carrier::mixed_neutrosophic(n);
          for (auto const& v : enumerate(c)) {
            if (is_zero(c, v)) {
              continue;
            }
            Param p{v, true};
            auto  g = Groupoid::build(GroupoidSpec{c, Shape::scalar(), p, p, std::nullopt});
            record(out, name_of(g), holds(g, IdentityId::PIdentity, cfg), "P-identity");
          }
        }
        if (n <= 4) {
          for (std::uint32_t t = 1; t < n; ++t) {
            auto g = Groupoid::build(Carrier::modular(n), Shape::matrix(3, 3), t, t);
            auto v = check_identity(g, IdentityId::PIdentity, CheckMode::sampled(2000, cfg.seed));
            record(out, name_of(g) + " sampled", !v.fails(),
                   "P-identity " + status_name(v.status) + " seed " + std::to_string(v.seed));
          }
        }
      }
    }

    void t4_not_alternative(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto p : r.moduli()) {
        if (!is_prime(p)) {
          continue;
        }
        for (auto const& c : {Carrier::modular(p), Carrier::pure_neutrosophic(p)}) {
          for (std::uint32_t t = 2; t < p; ++t) {
            auto g = Groupoid::build(c, Shape::scalar(), t, t);
            bool l = holds(g, IdentityId::LeftAlternative, cfg);
            bool rr = holds(g, IdentityId::RightAlternative, cfg);
            record(out, name_of(g), !l && !rr,
                   "left alternative " + yes_no(l) + ", right alternative " + yes_no(rr));
          }
        }
      }
    }

    void t5_alternative_iff(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        for (std::uint32_t t = 1; t < n; ++t) {
          auto g     = Groupoid::build(Carrier::modular(n), Shape::scalar(), t, t);
          bool brute = holds(g, IdentityId::LeftAlternative, cfg) && holds(g, IdentityId::RightAlternative, cfg);
          bool pred  = closed_form(ClosedForm::AlternativeIff, n, t, t);
          record(out, name_of(g), brute == pred,
                 "alternative " + yes_no(brute) + ", t^2=t " + yes_no(pred));
        }
      }
    }

    void t6_type_three(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        for (std::uint32_t t = 1; t < n; ++t) {
          bool pred = closed_form(ClosedForm::TypeIIIPAltIff, n, t, 0);
          for (auto [a, b] : {std::pair{t, 0U}, std::pair{0U, t}}) {
            auto g = Groupoid::build(Carrier::modular(n), Shape::scalar(), a, b);
            bool p = holds(g, IdentityId::PIdentity, cfg);
            bool l = holds(g, IdentityId::LeftAlternative, cfg);
            bool q = holds(g, IdentityId::RightAlternative, cfg);
            record(out, name_of(g), p == pred && l == pred && q == pred,
                   "P " + yes_no(p) + ", left " + yes_no(l) + ", right " + yes_no(q)
                       + ", t^2=t " + yes_no(pred));
          }
        }
      }
    }

    void duality_instance(GroupoidSpec const& spec, Sink& out) {
      auto g       = Groupoid::build(spec);
      auto swapped = spec;
      std::swap(swapped.t, swapped.u);
      swapped.level.reset();
      auto h  = Groupoid::build(swapped);
      auto gi = enumerate_ideals(g);
      auto hi = enumerate_ideals(h);
      record(out, name_of(g), gi.left == hi.right && gi.right == hi.left,
             std::to_string(gi.left.size()) + " left ideals vs "
                 + std::to_string(hi.right.size()) + " right ideals of the swapped pair");
    }

    void t7_ideal_duality(Range const& r, SuiteConfig const&, Sink& out) {
      for (auto n : r.moduli()) {
        for (auto const& c : {Carrier::modular(n), Carrier::pure_neutrosophic(n)}) {
          for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
            duality_instance(make_spec(c, Shape::scalar(), t, u), out);
          });
        }
      }
      auto c = Carrier::mixed_neutrosophic(3);
      for (auto const& t : enumerate(c)) {
        for (auto const& u : enumerate(c)) {
          if (is_zero(c, t) && is_zero(c, u)) {
            continue;
          }
          duality_instance(GroupoidSpec{c, Shape::scalar(), Param{t, true}, Param{u, true}, std::nullopt}, out);
        }
      }
    }

    void t8_simple(Range const& r, SuiteConfig const&, Sink& out) {
      for (auto n : r.moduli()) {
        for (std::uint32_t t = 2; t + 2 <= n; ++t) {
          auto u = n - t;
          if (!is_prime(t) || !is_prime(u)) {
            continue;
          }
          auto g = Groupoid::build(Carrier::modular(n), Shape::scalar(), t, u);
          auto v = is_simple(g);
          record(out, name_of(g), v.simple,
                 v.simple ? "simple" : "normal subgroupoid " + subset_text(g, *v.witness));
        }
      }
    }

    void t9_unique_subgroupoid(Range const& r, SuiteConfig const&, Sink& out) {
      for (auto n : r.moduli()) {
        if (n % 2 != 0) {
          continue;
        }
        for (std::uint32_t t = 2; 2 * t <= n; ++t) {
          auto u = n - t;
          if (u % t != 0) {
            continue;
          }
          auto g      = Groupoid::build(Carrier::modular(n), Shape::scalar(), t, u);
          auto subs   = enumerate_subgroupoids(g);
          auto target = n / t;
          std::vector<SubsetHandle> of_order;
          for (auto const& s : subs) {
            if (s.size() == target) {
              of_order.push_back(s);
            }
          }
          auto simple = is_simple(g);
          bool unique = of_order.size() == 1;
          bool normal = unique && is_normal_subgroupoid(g, of_order[0]);
          bool only   = simple.normal.size() == 1 && unique && simple.normal[0] == of_order[0];
          std::string details = std::to_string(of_order.size()) + " subgroupoid(s) of order "
                                + std::to_string(target);
          if (unique) {
            details += " " + subset_text(g, of_order[0]) + (normal ? " normal" : " not normal");
          }
          details += "; normal subgroupoids:";
          for (auto const& s : simple.normal) {
            details += " " + subset_text(g, s);
          }
          if (unique && normal && only) {
            record(out, name_of(g), true, details);
          } else {
            disagree(out, name_of(g), details);
          }
        }
      }
    }

    void t10_singletons(Range const& r, SuiteConfig const&, Sink& out) {
      for (auto n : r.moduli()) {
        if (n <= 5) {
          continue;
        }
        for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
          if ((t + u) % n != 1 || t == 0 || u == 0) {
            return;
          }
          auto g = Groupoid::build(Carrier::modular(n), Shape::scalar(), t, u);
          auto v = smarandache_identity(g, std::optional<IdentityId>{});
          bool ok = v.status == SmarandacheStatus::SGroupoidOnly && v.witness && v.witness->size() == 1;
          record(out, name_of(g), ok,
                 smarandache_status_name(v.status)
                     + (v.witness ? " " + subset_text(g, *v.witness) : std::string()));
        });
      }
    }

    void t11_smarandache_iff(Range const& r, SuiteConfig const& cfg, Sink& out) {
      IdentityId const alt[] = {IdentityId::LeftAlternative, IdentityId::RightAlternative};
      for (auto n : r.moduli()) {
        for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
          if ((t + u) % n != 1 % n) {
            return;
          }
          auto g    = Groupoid::build(Carrier::modular(n), Shape::scalar(), t, u);
          bool pred = closed_form(ClosedForm::SemigroupIff, n, t, u);
          auto p    = smarandache_identity(g, IdentityId::PIdentity);
          auto a    = smarandache_identity(g, std::span<IdentityId const>(alt));
          bool ps   = p.status == SmarandacheStatus::StrongHolds;
          bool as   = a.status == SmarandacheStatus::StrongHolds;
          std::string details = "P " + smarandache_status_name(p.status) + ", alternative "
                                + smarandache_status_name(a.status) + ", t^2=t and u^2=u "
                                + yes_no(pred);
          if (pred) {
            bool ids_hold = holds(g, IdentityId::PIdentity, cfg) && holds(g, alt[0], cfg)
                            && holds(g, alt[1], cfg);
            if (!ids_hold) {
              record(out, name_of(g), false, details);
            } else if (!ps || !as) {
              disagree(out, name_of(g), details + "; identities hold but no proper semigroup besides {0}");
            } else {
              record(out, name_of(g), true, details);
            }
            return;
          }
          if (as) {
            record(out, name_of(g), false, details);
          } else if (ps) {
            disagree(out, name_of(g), details + "; P holds on all of G without t^2=t and u^2=u");
          } else {
            record(out, name_of(g), true, details);
          }
        });
      }
    }

    void t12_interval_semigroup(Range const& r, SuiteConfig const&, Sink& out) {
      bool any = false;
      for (auto n : r.moduli()) {
        if (n % 2 != 0) {
          continue;
        }
        any       = true;
        auto m    = n / 2;
        auto g    = Groupoid::build(Carrier::interval_of(Carrier::modular(n)), Shape::scalar(), 2, 0);
        auto s    = SubsetHandle(g.size(), {0, m});
        auto cls  = classify_subset(g, s);
        auto sg   = smarandache_identity(g, std::optional<IdentityId>{});
        record(out, name_of(g) + " " + subset_text(g, s),
               cls.semigroup && sg.status != SmarandacheStatus::NotSmarandache,
               std::string("semigroup ") + yes_no(cls.semigroup) + ", " + smarandache_status_name(sg.status));
      }
      if (any) {
        disagree(out, "printed witness set",
                 "the stated set includes [m,m], which is not a [0,a] interval; checked with {[0,0],[0,m]}");
      }
    }

    void t13_counting(Range const& r, SuiteConfig const&, Sink& out) {
      struct Known {
        char const* carrier;
        ClassKind   kind;
        bool        equal;
        std::uint64_t expected;
      };
      Known const known[] = {
          {"zni:3", ClassKind::AllPairs, false, 2},
          {"nzn:3", ClassKind::AllPairs, false, 56},
          {"nzn:4", ClassKind::AllPairs, false, 210},
          {"zn:4", ClassKind::LevelOnePairs, false, 6},
          {"zni:6", ClassKind::IdempotentPairs, true, 4},
          {"zni:9", ClassKind::IdempotentPairs, true, 7},
      };
      for (auto const& k : known) {
        auto got = count_class({parse_carrier(k.carrier), k.kind, k.equal});
        record(out, std::string(k.carrier) + " " + class_kind_name(k.kind), got == k.expected,
               "count " + std::to_string(got) + ", expected " + std::to_string(k.expected));
      }
      for (auto n : r.moduli()) {
        auto got = count_class({Carrier::pure_neutrosophic(n), ClassKind::IdempotentPairs, true});
        record(out, "zni:" + std::to_string(n) + " idempotent-pairs parity", got % 2 == n % 2,
               "count " + std::to_string(got));
        if (n <= 20) {
          std::uint64_t const s  = n;
          auto                zp = count_class({Carrier::pure_neutrosophic(n), ClassKind::AllPairs, false});
          record(out, "zni:" + std::to_string(n) + " all-pairs", zp == (s - 1) * (s - 2),
                 "count " + std::to_string(zp));
          auto mx = count_class({Carrier::mixed_neutrosophic(n), ClassKind::AllPairs, false});
          record(out, "nzn:" + std::to_string(n) + " all-pairs", mx == (s * s - 1) * (s * s - 2),
                 "count " + std::to_string(mx));
        }
      }
    }

    void t14_zero_and_pseudo(Range const& r, SuiteConfig const&, Sink& out) {
      for (auto n : r.moduli()) {
        for (auto const& c : {Carrier::modular(n), Carrier::pure_neutrosophic(n)}) {
          for (std::uint32_t t = 1; t < n; ++t) {
            for (std::uint32_t u = 1; u < n; ++u) {
              auto g   = Groupoid::build(c, Shape::scalar(), t, u);
              auto cls = classify_subset(g, SubsetHandle(g.size(), {0}));
              record(out, name_of(g) + " {0}", !cls.ideal, "ideal " + yes_no(cls.ideal));
            }
          }
        }
        auto c = Carrier::mixed_neutrosophic(n);
        for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
          auto         g = Groupoid::build(c, Shape::scalar(), t, u);
          SubsetHandle real(g.size());
          for (std::uint32_t a = 0; a < n; ++a) {
            real.insert(g.index_of(Element{{Value::mixed(a, 0)}}));
          }
          auto cls = classify_subset(g, real);
          record(out, name_of(g) + " Z_n", cls.closed && cls.pseudo,
                 "closed " + yes_no(cls.closed) + ", pseudo " + yes_no(cls.pseudo));
        });
      }
    }

    void t15_ideally_simple(Range const&, SuiteConfig const&, Sink& out) {
      for (std::uint32_t n : {4U, 8U}) {
        auto c = Carrier::pure_neutrosophic(n);
        for_pairs(n, [&](std::uint32_t t, std::uint32_t u) {
          if (!is_prime(t + u)) {
            return;
          }
          auto g      = Groupoid::build(c, Shape::scalar(), t, u);
          auto ideals = enumerate_ideals(g);
          bool none   = ideals.left.empty() && ideals.right.empty();
          std::string details = std::to_string(ideals.left.size()) + " left, "
                                + std::to_string(ideals.right.size()) + " right ideals";
          if (none) {
            record(out, name_of(g), true, details);
          } else {
            disagree(out, name_of(g), details);
          }
        });
      }
    }

    void t16_equal_pairs(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        for (auto const& c : {Carrier::modular(n), Carrier::pure_neutrosophic(n)}) {
          for (std::uint32_t t = 1; t < n; ++t) {
            auto g = Groupoid::build(c, Shape::scalar(), t, t);
            record(out, name_of(g), holds(g, IdentityId::Commutative, cfg), "commutative");
          }
        }
        if (n <= 4) {
          auto c = Carrier::mixed_neutrosophic(n);
          for (auto const& v : enumerate(c)) {
            if (!is_zero(c, v)) {
              auto g = Groupoid::build(GroupoidSpec{c, Shape::scalar(), Param{v, true}, Param{v, true}, std::nullopt});
              record(out, name_of(g), holds(g, IdentityId::Commutative, cfg), "commutative");
            }
          }
        }
        if (is_prime(n) && n <= 13) {
          for (std::uint32_t t = 1; t < n; ++t) {
            auto g = Groupoid::build(Carrier::pure_neutrosophic(n), Shape::scalar(), t, t);
            record(out, name_of(g) + " normal", is_normal_groupoid(g), "normal groupoid");
          }
        }
      }
    }

    void t17_ssc(Range const& r, SuiteConfig const& cfg, Sink& out) {
      for (auto n : r.moduli()) {
        std::uint32_t found = 0;
        for (std::uint32_t t = 1; t < n; ++t) {
          auto g    = Groupoid::build(Carrier::modular(n), Shape::poly(2), t, 0);
          auto v    = check_identity(g, IdentityId::Associative, CheckMode::automatic(cfg.seed), budget_of(cfg));
          bool pred = closed_form(ClosedForm::SemigroupIff, n, t, 0);
          if (!v.fails() && pred && found == 0) {
            found = t;
          }
          record(out, name_of(g), v.fails() != pred,
                 "associative " + status_name(v.status) + " (" + method_name(v.method)
                     + "), t^2=t " + yes_no(pred));
        }
        record(out, "zn:" + std::to_string(n) + " family", found != 0,
               found ? "semigroup at t=" + std::to_string(found) : "no semigroup in the family");
        if (n <= 4) {
          auto g = Groupoid::build(Carrier::modular(n), Shape::poly(2), 1, 0);
          record(out, name_of(g) + " exhaustive", holds(g, IdentityId::Associative, cfg), "associative");
        }
      }
    }

    void lift_check(Range const&, SuiteConfig const& cfg, Sink& out) {
      auto c = Carrier::modular(3);
      for_pairs(3, [&](std::uint32_t t, std::uint32_t u) {
        auto scalar = Groupoid::build(c, Shape::scalar(), t, u);
        auto matrix = Groupoid::build(c, Shape::matrix(2, 2), t, u);
        for (auto id : kAllIdentities) {
          bool s = holds(scalar, id, cfg);
          bool m = holds(matrix, id, cfg);
          record(out, name_of(matrix) + " " + identity_name(id), s == m,
                 "scalar " + yes_no(s) + ", 2x2 " + yes_no(m));
        }
      });
    }

    void example_check(std::string const& name, Sink& out) {
      auto d = run_demo(name);
      std::string details = d.matches ? "output matches" : "output:\n" + d.output + "expected:\n" + d.golden;
      record(out, "example " + name, d.matches, details);
      if (name == "1.1.1") {
        auto printed = CayleyTable{};
        std::vector<std::vector<std::uint64_t>> rows = {
            {0, 4, 1, 5, 2, 6, 3}, {3, 0, 4, 1, 5, 2, 6}, {6, 3, 0, 4, 1, 5, 2},
            {2, 6, 3, 0, 4, 1, 5}, {5, 2, 6, 3, 0, 4, 1}, {1, 5, 2, 6, 3, 0, 4},
            {4, 1, 5, 2, 6, 3, 0}};
        std::vector<std::string> labels;
        for (int k = 0; k < 7; ++k) {
          labels.push_back("a" + std::to_string(k));
        }
        auto table = Groupoid::from_table(labels, rows);
        record(out, "example 1.1.1 table groupoid", is_simple(table).simple, "printed table is simple");
      }
    }

    void example_2_1_20(Range const&, SuiteConfig const&, Sink& out) {
      auto c = Carrier::modular(21);
      auto g = Groupoid::build(c, Shape::matrix(1, 7), 8, 8);
      auto mk = [&](std::initializer_list<std::int64_t> xs) {
        Element e;
        for (auto x : xs) {
          e.entries.push_back(reduce(c, {x}));
        }
        return e;
      };
      auto z       = mk({1, 1, 3, 2, 2, 0, 1});
      auto x       = mk({3, 2, 0, 1, 20, 18, 7});
      auto y       = mk({1, 20, 4, 0, 7, 17, 3});
      auto lhs     = g.star(z, g.star(x, y));
      auto rhs     = g.star(g.star(z, x), y);
      auto printed1 = mk({19, 11, 6, 19, 1, 14, 18});
      auto printed2 = mk({19, 16, 14, 3, 1, 7, 4});
      auto text    = [&](Element const& e) { return g.format(e); };
      std::string details = "recomputed Z*(X*Y) = " + text(lhs) + ", (Z*X)*Y = " + text(rhs)
                            + "; printed " + text(printed1) + " and " + text(printed2);
      if (lhs == printed1 && rhs == printed2) {
        record(out, "example 2.1.20", true, details);
      } else {
        disagree(out, "example 2.1.20", details);
      }
      record(out, "example 2.1.20 non-associativity", lhs != rhs, details);
    }

    std::vector<TheoremCheck> make_registry() {
      std::vector<TheoremCheck> r;
      auto add = [&r](std::string id, std::string source, Tier tier, std::string claim, Range range, auto fn) {
        r.push_back(TheoremCheck{std::move(id), std::move(source), tier, std::move(claim), range, fn});
      };
      Range const fixed{0, 0, false};
      add("T1", "Thm 2.1.6, Thm 2.3.3, Thm 3.2.6", Tier::Asserted,
          "idempotent iff t+u = 1 (mod n)", Range{3, 30, false}, t1_idempotent);
      add("T2", "Thm 2.1.5", Tier::Asserted,
          "semigroup iff t^2 = t and u^2 = u (mod n)", Range{3, 16, false}, t2_semigroup);
      add("T3", "Thm 2.1.1, Thm 3.2.14", Tier::Asserted,
          "(t,t) groupoids satisfy the P-identity", Range{3, 16, false}, t3_equal_pair_p);
      add("T4", "Thm 2.1.2, Thm 3.2.16", Tier::Asserted,
          "(t,t) over a prime modulus with 1 < t < p is not alternative", Range{3, 23, true},
          t4_not_alternative);
      add("T5", "Thm 2.1.3", Tier::Asserted,
          "(t,t) is alternative iff t^2 = t (mod n), brute force as ground truth", Range{3, 16, false},
          t5_alternative_iff);
      add("T6", "Thm 2.1.4, Thm 2.3.6, Thm 3.5.9", Tier::Asserted,
          "(t,0) and (0,t) are P and alternative iff t^2 = t (mod n)", Range{3, 16, false},
          t6_type_three);
      add("T7", "Thm 2.1.7, Thm 3.2.3, Thm 3.5.4", Tier::Asserted,
          "left ideals of (t,u) are the right ideals of (u,t)", Range{3, 12, false}, t7_ideal_duality);
      add("T8", "Thm 2.1.8", Tier::Asserted,
          "n = t+u with t, u prime gives a simple groupoid", Range{5, 19, true}, t8_simple);
      add("T9", "Thm 2.1.9", Tier::ReportOnly,
          "n even, t+u = n, (t,u) = t: unique normal subgroupoid of order n/t", Range{4, 16, false},
          t9_unique_subgroupoid);
      add("T10", "Thm 2.6.1, Thm 2.7.1", Tier::Asserted,
          "t+u = 1 (mod n), n > 5: Smarandache with a singleton semigroup", Range{6, 20, false},
          t10_singletons);
      add("T11", "Thm 2.6.2, Thm 2.6.3", Tier::Asserted,
          "t+u = 1: Smarandache strong P and alternative iff t^2 = t and u^2 = u", Range{3, 16, false},
          t11_smarandache_iff);
      add("T12", "Thm 2.6.5", Tier::ReportOnly,
          "(2,0) over intervals of Z_2m has the semigroup {[0,0],[0,m]}", Range{4, 20, false},
          t12_interval_semigroup);
      add("T13", "Thm 3.2.1, Thm 3.2.2, Thm 3.2.7, Example 2.1.1", Tier::Asserted,
          "class counts and idempotent-count parity", Range{3, 50, false}, t13_counting);
      add("T14", "Thm 3.2.5, Thm 3.3.2", Tier::Asserted,
          "{0} is never an ideal; Z_n is a pseudo neutrosophic subgroupoid of N(Z_n)", Range{3, 10, false},
          t14_zero_and_pseudo);
      add("T15", "Thm 3.1.1", Tier::ReportOnly,
          "Z_4I and Z_8I with m+n prime have no proper ideals", fixed, t15_ideally_simple);
      add("T16", "Thm 3.2.11, Thm 3.2.13", Tier::Asserted,
          "equal pairs are commutative; Z_pI(t,t) is a normal groupoid", Range{3, 13, false},
          t16_equal_pairs);
      add("T17", "Thm 2.2.1", Tier::Asserted,
          "the (t,0) polynomial family over Z_n contains a semigroup", Range{3, 20, false}, t17_ssc);
      add("LIFT", "Thms 2.5.x, 3.4.x, 3.6.x", Tier::Asserted,
          "2x2 matrices over Z_3 share every identity verdict with Z_3", fixed, lift_check);
      for (auto const& name : demo_names()) {
        add("EX-" + name, "Example " + name, Tier::Asserted, "worked example reproduces exactly", fixed,
            [name](Range const&, SuiteConfig const&, Sink& out) { example_check(name, out); });
      }
      add("EX-2.1.20", "Example 2.1.20", Tier::ReportOnly,
          "printed intermediate vectors of the (8,8) example over Z_21", fixed, example_2_1_20);
      return r;
    }

  }  // namespace

  std::string tier_name(Tier t) {
    return t == Tier::Asserted ? "asserted" : "report-only";
  }

  std::string outcome_name(Outcome o) {
    switch (o) {
      case Outcome::Pass:
        return "pass";
      case Outcome::Fail:
        return "fail";
      case Outcome::ReportedDisagreement:
        return "reported-disagreement";
    }
    return {};
  }

  std::string Range::text() const {
    if (lo == 0 && hi == 0) {
      return "fixed";
    }
    return std::string(primes_only ? "p=" : "n=") + std::to_string(lo) + ".." + std::to_string(hi);
  }

  std::vector<std::uint32_t> Range::moduli() const {
    std::vector<std::uint32_t> out;
    for (auto n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n) {
      if (!primes_only || is_prime(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  Range parse_range(std::string_view text) {
    auto bad = [&] { return ParseError("malformed range '" + std::string(text) + "', expected n=LO..HI"); };
    if (text.size() < 2 || text[1] != '=' || (text[0] != 'n' && text[0] != 'p')) {
      throw bad();
    }
    auto body = text.substr(2);
    auto dots = body.find("..");
    if (dots == std::string_view::npos) {
      throw bad();
    }
    auto num = [&](std::string_view s) {
      std::uint32_t v = 0;
      auto [p, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
        throw bad();
      }
      return v;
    };
    Range r{num(body.substr(0, dots)), num(body.substr(dots + 2)), text[0] == 'p'};
    if (r.lo < 2 || r.hi < r.lo || r.hi > 1000) {
      throw ParseError("range '" + std::string(text) + "' must satisfy 2 <= LO <= HI <= 1000");
    }
    return r;
  }

  std::vector<TheoremCheck> const& registry() {
    static std::vector<TheoremCheck> const r = make_registry();
    return r;
  }

  TheoremCheck const& find_check(std::string_view id) {
    for (auto const& c : registry()) {
      if (c.id == id) {
        return c;
      }
    }
    throw DomainError("unknown check id '" + std::string(id) + "'");
  }

  SuiteConfig default_config(std::uint64_t seed) {
    SuiteConfig cfg;
    cfg.seed = seed;
    for (auto const& c : registry()) {
      cfg.checks.push_back({c.id, std::nullopt});
    }
    return cfg;
  }

  SuiteConfig parse_suite_config(std::string_view json_text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed suite config: ") + e.what());
    }
    if (!j.is_object()) {
      throw ParseError("suite config must be a JSON object");
    }
    SuiteConfig cfg;
    try {
      if (j.contains("seed")) {
        cfg.seed = j.at("seed").get<std::uint64_t>();
      }
      if (j.contains("budgets")) {
        auto const& b = j.at("budgets");
        cfg.budget    = b.is_object() ? b.value("evaluations", std::uint64_t{0}) : b.get<std::uint64_t>();
      }
      if (j.contains("checks")) {
        for (auto const& c : j.at("checks")) {
          CheckRequest req;
          req.id = c.at("id").get<std::string>();
          find_check(req.id);
          if (c.contains("range") && !c.at("range").is_null()) {
            req.range = parse_range(c.at("range").get<std::string>());
          }
          cfg.checks.push_back(std::move(req));
        }
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed suite config: ") + e.what());
    } catch (DomainError const& e) {
      throw ParseError(e.what());
    }
    return cfg;
  }

  std::vector<InstanceVerdict> verify_theorem(std::string_view     id,
                                              std::optional<Range> range,
                                              std::optional<Tier>  tier_override,
                                              SuiteConfig const&   config) {
    auto const& check = find_check(id);
    Sink        out;
    check.run(range.value_or(check.default_range), config, out);
    if (tier_override.value_or(check.tier) == Tier::ReportOnly) {
      for (auto& v : out) {
        if (v.outcome == Outcome::Fail) {
          v.outcome = Outcome::ReportedDisagreement;
        }
      }
    }
    return out;
  }

  bool SuiteReport::asserted_ok() const noexcept {
    return std::none_of(results.begin(), results.end(), [](CheckResult const& r) {
      return r.tier == Tier::Asserted && r.status == Outcome::Fail;
    });
  }

  SuiteReport run_suite(SuiteConfig const& config) {
    SuiteReport report;
    report.config = config;
    report.results.resize(config.checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      detail::in_worker = true;
      for (auto i = next.fetch_add(1); i < config.checks.size(); i = next.fetch_add(1)) {
        auto const& req   = config.checks[i];
        auto&       res   = report.results[i];
        auto const& check = find_check(req.id);
        res.id            = check.id;
        res.source        = check.source;
        res.claim         = check.claim;
        res.tier          = check.tier;
        res.range         = req.range.value_or(check.default_range);
        auto start        = std::chrono::steady_clock::now();
        try {
          for (auto& v : verify_theorem(check.id, res.range, std::nullopt, config)) {
            ++res.instances;
            switch (v.outcome) {
              case Outcome::Pass:
                ++res.passed;
                continue;
              case Outcome::Fail:
                ++res.failed;
                break;
              case Outcome::ReportedDisagreement:
                ++res.disagreements;
                break;
            }
            if (res.notable.size() < kNotableCap) {
              res.notable.push_back(std::move(v));
            }
          }
        } catch (Error const& e) {
          res.error = e.what();
          if (check.tier == Tier::Asserted) {
            ++res.failed;
          } else {
            ++res.disagreements;
          }
        }
        res.status = res.failed ? Outcome::Fail
                     : res.disagreements ? Outcome::ReportedDisagreement
                                         : Outcome::Pass;
        res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
    };
    auto const               workers = std::min<std::size_t>(detail::worker_count(), config.checks.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
    return report;
  }

  nlohmann::json to_json(SuiteReport const& r, bool timing) {
    nlohmann::json j;
    auto&          cfg = j["config"];
    cfg["seed"]        = r.config.seed;
    cfg["budget"]      = r.config.budget != 0 ? r.config.budget : evaluation_budget();
    cfg["checks"]      = nlohmann::json::array();
    for (auto const& c : r.config.checks) {
      nlohmann::json e{{"id", c.id}};
      if (c.range) {
        e["range"] = c.range->text();
      }
      cfg["checks"].push_back(e);
    }
    auto&  checks = j["checks"] = nlohmann::json::array();
    double total  = 0;
    std::vector<std::string> failed;
    std::vector<std::string> disagreed;
    for (auto const& res : r.results) {
      nlohmann::json c;
      c["id"]            = res.id;
      c["source"]        = res.source;
      c["claim"]         = res.claim;
      c["tier"]          = tier_name(res.tier);
      c["range"]         = res.range.text();
      c["status"]        = outcome_name(res.status);
      c["instances"]     = res.instances;
      c["passed"]        = res.passed;
      c["failed"]        = res.failed;
      c["disagreements"] = res.disagreements;
      auto& notable      = c["notable"] = nlohmann::json::array();
      for (auto const& v : res.notable) {
        notable.push_back({{"instance", v.instance}, {"outcome", outcome_name(v.outcome)}, {"details", v.details}});
      }
      if (!res.error.empty()) {
        c["error"] = res.error;
      }
      if (timing) {
        c["millis"] = res.millis;
      }
      total += res.millis;
      if (res.status == Outcome::Fail) {
        failed.push_back(res.id);
      } else if (res.status == Outcome::ReportedDisagreement) {
        disagreed.push_back(res.id);
      }
      checks.push_back(std::move(c));
    }
    j["summary"] = {{"checks", r.results.size()},
                    {"asserted_ok", r.asserted_ok()},
                    {"failed", failed},
                    {"disagreements", disagreed}};
    if (timing) {
      j["timing"] = {{"check_millis_total", total}};
    }
    return j;
  }

  std::string class_kind_name(ClassKind k) {
    switch (k) {
      case ClassKind::AllPairs:
        return "all-pairs";
      case ClassKind::LevelOnePairs:
        return "level-one-pairs";
      case ClassKind::IdempotentPairs:
        return "idempotent-pairs";
    }
    return {};
  }

  ClassKind parse_class_kind(std::string_view text) {
    for (auto k : {ClassKind::AllPairs, ClassKind::LevelOnePairs, ClassKind::IdempotentPairs}) {
      if (text == class_kind_name(k)) {
        return k;
      }
    }
    throw ParseError("unknown class '" + std::string(text) + "'");
  }

  std::uint64_t count_class(ClassCountQuery const& q) {
    if (!q.carrier.is_finite()) {
      throw DomainError("class counts need a finite carrier");
    }
    auto const c = q.carrier.inner();
    std::vector<Value> values;
    for (auto const& v : enumerate(c)) {
      if (!is_zero(c, v)) {
        values.push_back(v);
      }
    }
    if (values.size() > 10'000) {
      throw BudgetExceeded("class count over " + c.name(), values.size() * values.size(), 100'000'000);
    }
    auto const    one   = unit(c);
    std::uint64_t count = 0;
    for (auto const& t : values) {
      for (auto const& u : values) {
        if (t == u && !q.equal_pairs) {
          continue;
        }
        switch (q.kind) {
          case ClassKind::AllPairs:
            ++count;
            break;
          case ClassKind::LevelOnePairs:
            count += coprimality_class(c, t, u).is_unit ? 1 : 0;
            break;
          case ClassKind::IdempotentPairs:
            count += add(c, t, u) == one ? 1 : 0;
            break;
        }
      }
    }
    return count;
  }

}  // namespace ggl
