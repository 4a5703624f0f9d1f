#include "ggl/structure.hpp"

#include <algorithm>
#include <set>

#include "ggl/error.hpp"

namespace ggl {

  namespace {

    // Dense local copy of the operation for small groupoids.
    struct Table {
      std::uint64_t              n = 0;
      std::vector<std::uint32_t> cells;

      explicit Table(Groupoid const& g) : n(g.size()), cells(n * n) {
        for (std::uint64_t i = 0; i < n; ++i) {
          for (std::uint64_t j = 0; j < n; ++j) {
            cells[i * n + j] = static_cast<std::uint32_t>(g.star(i, j));
          }
        }
      }
      std::uint32_t operator()(std::uint64_t i, std::uint64_t j) const {
        return cells[i * n + j];
      }
    };

    void require_power_set(Groupoid const& g) {
      if (g.size() > kPowerSetLimit) {
        throw BudgetExceeded("power-set search on " + g.describe(), g.size(), kPowerSetLimit);
      }
    }

    // Calls fn(mask) for every nonempty proper subset, ordered by
    // cardinality and then numerically.
    template <typename Fn>
    void for_each_proper_mask(std::uint64_t n, Fn&& fn) {
      for (std::uint64_t k = 1; k < n; ++k) {
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        std::uint64_t const limit = std::uint64_t{1} << n;
        while (mask < limit) {
          fn(mask);
          std::uint64_t c = mask & (~mask + 1);
          std::uint64_t r = mask + c;
          mask            = (((r ^ mask) >> 2) / c) | r;
        }
      }
    }

    template <typename Fn>
    void for_bits(std::uint64_t mask, Fn&& fn) {
      while (mask != 0) {
        fn(static_cast<std::uint64_t>(std::countr_zero(mask)));
        mask &= mask - 1;
      }
    }

    bool mask_closed(Table const& t, std::uint64_t mask) {
      bool ok = true;
      for_bits(mask, [&](std::uint64_t a) {
        if (!ok) {
          return;
        }
        for_bits(mask, [&](std::uint64_t b) {
          if (ok && ((mask >> t(a, b)) & 1U) == 0) {
            ok = false;
          }
        });
      });
      return ok;
    }

    bool mask_associative(Table const& t, std::uint64_t mask) {
      bool ok = true;
      for_bits(mask, [&](std::uint64_t a) {
        for_bits(mask, [&](std::uint64_t b) {
          for_bits(mask, [&](std::uint64_t c) {
            if (ok && t(t(a, b), c) != t(a, t(b, c))) {
              ok = false;
            }
          });
        });
      });
      return ok;
    }

    using Image = std::vector<bool>;

    Image image(std::uint64_t n) {
      return Image(n, false);
    }

    std::vector<SubsetHandle> generated_closures(Groupoid const& g) {
      auto const             n = g.size();
      std::set<SubsetHandle> seen;
      for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a; b < n; ++b) {
          auto c = closure(g, SubsetHandle(n, {a, b}));
          if (!c.is_full()) {
            seen.insert(c);
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    bool is_zero_singleton(Groupoid const& g, SubsetHandle const& s) {
      auto z = g.zero_index();
      return z && s.size() == 1 && s.contains(*z);
    }

    bool holds_on_all(Groupoid const& g, std::span<IdentityId const> ids) {
      for (auto id : ids) {
        auto v = check_identity(g, id, CheckMode::automatic());
        if (v.status != Status::Holds) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  bool is_closed(Groupoid const& g, SubsetHandle const& s) {
    auto m = s.members();
    for (auto a : m) {
      for (auto b : m) {
        if (!s.contains(g.star(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  SubsetHandle closure(Groupoid const& g, SubsetHandle const& s) {
    auto out     = s;
    auto members = s.members();
    // Each newly added element is combined with everything seen so far.
    for (std::size_t next = 0; next < members.size(); ++next) {
      auto a = members[next];
      for (std::size_t k = 0; k <= next; ++k) {
        auto b = members[k];
        for (auto r : {g.star(a, b), g.star(b, a)}) {
          if (!out.contains(r)) {
            out.insert(r);
            members.push_back(r);
          }
        }
      }
    }
    return out;
  }

  std::vector<SubsetHandle> enumerate_subgroupoids(Groupoid const& g, SubgroupoidOptions const& opts) {
    auto const n = g.size();
    if (opts.strategy == SubgroupoidStrategy::PowerSet) {
      require_power_set(g);
      Table                     t(g);
      std::vector<SubsetHandle> out;
      for_each_proper_mask(n, [&](std::uint64_t mask) {
        if (mask_closed(t, mask)) {
          out.push_back(SubsetHandle::from_mask(n, mask));
        }
      });
      return out;
    }
    if (n > opts.max_order) {
      throw BudgetExceeded("generated-closure search on " + g.describe(), n, opts.max_order);
    }
    return generated_closures(g);
  }

  bool is_left_ideal(Groupoid const& g, SubsetHandle const& s) {
    if (s.empty() || s.is_full()) {
      return false;
    }
    auto const n = g.size();
    for (auto a : s.members()) {
      for (std::uint64_t x = 0; x < n; ++x) {
        if (!s.contains(g.star(x, a))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_right_ideal(Groupoid const& g, SubsetHandle const& s) {
    if (s.empty() || s.is_full()) {
      return false;
    }
    auto const n = g.size();
    for (auto a : s.members()) {
      for (std::uint64_t x = 0; x < n; ++x) {
        if (!s.contains(g.star(a, x))) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_normal_subgroupoid(Groupoid const& g, SubsetHandle const& s) {
    if (s.empty() || !is_closed(g, s)) {
      return false;
    }
    auto const n = g.size();
    auto const m = s.members();
    for (auto a : m) {
      auto lhs = image(n);
      auto rhs = image(n);
      for (auto v : m) {
        lhs[g.star(a, v)] = true;
        rhs[g.star(v, a)] = true;
      }
      if (lhs != rhs) {
        return false;
      }
    }
    for (auto x : m) {
      for (auto y : m) {
        auto xy = g.star(x, y);
        auto yx = g.star(y, x);
        auto l1 = image(n);
        auto r1 = image(n);
        auto l2 = image(n);
        auto r2 = image(n);
        for (auto v : m) {
          l1[g.star(g.star(v, x), y)] = true;
          r1[g.star(v, xy)]           = true;
          l2[g.star(y, g.star(x, v))] = true;
          r2[g.star(yx, v)]           = true;
        }
        if (l1 != r1 || l2 != r2) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_semigroup(Groupoid const& g, SubsetHandle const& s) {
    if (s.empty() || !is_closed(g, s)) {
      return false;
    }
    auto m = s.members();
    return holds_on_subset(g, IdentityId::Associative, m);
  }

  SubsetClassification classify_subset(Groupoid const& g, SubsetHandle const& s) {
    SubsetClassification c;
    c.closed             = !s.empty() && is_closed(g, s);
    c.left_ideal         = is_left_ideal(g, s);
    c.right_ideal        = is_right_ideal(g, s);
    c.ideal              = c.left_ideal && c.right_ideal;
    c.normal_subgroupoid = c.closed && is_normal_subgroupoid(g, s);
    c.semigroup          = c.closed && is_semigroup(g, s);
    bool any_indet       = false;
    bool all_pure        = !s.empty();
    for (auto i : s.members()) {
      if (g.has_indeterminate(i)) {
        any_indet = true;
      }
      if (!g.is_pure_indeterminate(i) && g.zero_index() != i) {
        all_pure = false;
      }
    }
    bool neutro = g.has_spec() && g.spec().carrier.is_neutrosophic();
    c.pure_neutrosophic = neutro && any_indet && all_pure;
    c.pseudo            = neutro && c.closed && !any_indet;
    return c;
  }

  IdealSets enumerate_ideals(Groupoid const& g) {
    require_power_set(g);
    auto const                 n = g.size();
    Table                      t(g);
    std::vector<std::uint64_t> col(n, 0);  // {x * a : x in G}
    std::vector<std::uint64_t> row(n, 0);  // {a * x : x in G}
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t x = 0; x < n; ++x) {
        col[a] |= std::uint64_t{1} << t(x, a);
        row[a] |= std::uint64_t{1} << t(a, x);
      }
    }
    IdealSets out;
    for_each_proper_mask(n, [&](std::uint64_t mask) {
      bool left  = true;
      bool right = true;
      for_bits(mask, [&](std::uint64_t a) {
        left  = left && (col[a] & ~mask) == 0;
        right = right && (row[a] & ~mask) == 0;
      });
      if (left) {
        out.left.push_back(SubsetHandle::from_mask(n, mask));
      }
      if (right) {
        out.right.push_back(SubsetHandle::from_mask(n, mask));
      }
      if (left && right) {
        out.two_sided.push_back(SubsetHandle::from_mask(n, mask));
      }
    });
    return out;
  }

  SimplicityVerdict is_simple(Groupoid const& g, std::uint64_t max_order) {
    SimplicityVerdict out;
    auto const        n = g.size();
    std::vector<SubsetHandle> candidates;
    if (n <= kPowerSetLimit) {
      candidates = enumerate_subgroupoids(g, {max_order, SubgroupoidStrategy::PowerSet});
    } else {
      candidates   = enumerate_subgroupoids(g, {max_order, SubgroupoidStrategy::GeneratedClosure});
      out.complete = false;
    }
    for (auto const& s : candidates) {
      if (s.size() >= 2 && is_normal_subgroupoid(g, s)) {
        out.normal.push_back(s);
      }
    }
    if (!out.normal.empty()) {
      out.simple  = false;
      out.witness = out.normal.front();
    }
    return out;
  }

  bool is_normal_groupoid(Groupoid const& g) {
    auto const n = g.size();
    if (n > 2048) {
      throw BudgetExceeded("normal-groupoid check on " + g.describe(), n * n * n, std::uint64_t{2048} * 2048 * 2048);
    }
    Table t(g);
    for (std::uint64_t x = 0; x < n; ++x) {
      auto l = image(n);
      auto r = image(n);
      for (std::uint64_t h = 0; h < n; ++h) {
        l[t(x, h)] = true;
        r[t(h, x)] = true;
      }
      if (l != r) {
        return false;
      }
    }
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::uint64_t y = 0; y < n; ++y) {
        auto xy = t(x, y);
        auto yx = t(y, x);
        auto l1 = image(n);
        auto r1 = image(n);
        auto l2 = image(n);
        auto r2 = image(n);
        for (std::uint64_t h = 0; h < n; ++h) {
          l1[t(h, xy)]      = true;
          r1[t(t(h, x), y)] = true;
          l2[t(y, t(x, h))] = true;
          r2[t(yx, h)]      = true;
        }
        if (l1 != r1 || l2 != r2) {
          return false;
        }
      }
    }
    return true;
  }

  std::string smarandache_status_name(SmarandacheStatus s) {
    switch (s) {
      case SmarandacheStatus::StrongHolds:
        return "strong-holds";
      case SmarandacheStatus::HoldsOnSemigroupWitness:
        return "holds-on-semigroup-witness";
      case SmarandacheStatus::SGroupoidOnly:
        return "s-groupoid-only";
      case SmarandacheStatus::NotSmarandache:
        return "not-smarandache";
    }
    return {};
  }

  namespace {

    // Visits proper closed associative subsets in canonical order until fn
    // returns true.
    template <typename Fn>
    void visit_semigroups(Groupoid const& g, std::uint64_t max_order, bool& complete, Fn&& fn) {
      auto const n = g.size();
      if (n <= kPowerSetLimit) {
        complete = true;
        Table t(g);
        bool  stop = false;
        for_each_proper_mask(n, [&](std::uint64_t mask) {
          if (stop || !mask_closed(t, mask) || !mask_associative(t, mask)) {
            return;
          }
          auto s = SubsetHandle::from_mask(n, mask);
          if (!is_zero_singleton(g, s)) {
            stop = fn(s);
          }
        });
        return;
      }
      complete = false;
      for (auto const& s : enumerate_subgroupoids(g, {max_order, SubgroupoidStrategy::GeneratedClosure})) {
        if (!is_zero_singleton(g, s) && is_semigroup(g, s) && fn(s)) {
          return;
        }
      }
    }

  }  // namespace

  std::vector<SubsetHandle> semigroup_subsets(Groupoid const& g, std::uint64_t max_order, bool* complete) {
    std::vector<SubsetHandle> out;
    bool                      done = true;
    visit_semigroups(g, max_order, done, [&out](SubsetHandle const& s) {
      out.push_back(s);
      return false;
    });
    if (complete) {
      *complete = done;
    }
    return out;
  }

  SmarandacheVerdict smarandache_identity(Groupoid const& g, std::span<IdentityId const> ids, std::uint64_t max_order) {
    SmarandacheVerdict          out;
    std::optional<SubsetHandle> first;
    visit_semigroups(g, max_order, out.complete, [&first](SubsetHandle const& s) {
      first = s;
      return true;
    });
    if (!first) {
      out.status = SmarandacheStatus::NotSmarandache;
      return out;
    }
    out.witness = first;
    if (ids.empty()) {
      out.status = SmarandacheStatus::SGroupoidOnly;
      return out;
    }
    if (holds_on_all(g, ids)) {
      out.status = SmarandacheStatus::StrongHolds;
      return out;
    }
    out.status = SmarandacheStatus::SGroupoidOnly;
    visit_semigroups(g, max_order, out.complete, [&](SubsetHandle const& s) {
      if (s.size() < 2) {
        return false;
      }
      auto m = s.members();
      if (std::all_of(ids.begin(), ids.end(), [&](IdentityId id) { return holds_on_subset(g, id, m); })) {
        out.status  = SmarandacheStatus::HoldsOnSemigroupWitness;
        out.witness = s;
        return true;
      }
      return false;
    });
    return out;
  }

  SmarandacheVerdict smarandache_identity(Groupoid const& g, std::optional<IdentityId> id, std::uint64_t max_order) {
    if (!id) {
      return smarandache_identity(g, std::span<IdentityId const>{}, max_order);
    }
    IdentityId one[1] = {*id};
    return smarandache_identity(g, std::span<IdentityId const>(one), max_order);
  }

  ConjugacyResult are_conjugate(Groupoid const& g, SubsetHandle const& h, SubsetHandle const& k) {
    ConjugacyResult out;
    out.disjoint = !h.intersects(k);
    auto const n = g.size();
    auto const m = k.members();
    for (std::uint64_t x = 0; x < n; ++x) {
      SubsetHandle left(n);
      SubsetHandle right(n);
      for (auto v : m) {
        left.insert(g.star(x, v));
        right.insert(g.star(v, x));
      }
      if (left == h || right == h) {
        // a translate that overlaps is still reported, but never as conjugate
        out.conjugate = out.disjoint;
        out.witness   = x;
        out.side      = left == h ? ConjugateSide::Left : ConjugateSide::Right;
        return out;
      }
    }
    return out;
  }

  HomomorphismResult check_homomorphism(Groupoid const& g, Groupoid const& h, std::span<std::uint64_t const> map) {
    auto const n = g.size();
    auto const m = h.size();
    if (map.size() != n) {
      throw DomainError("homomorphism map covers " + std::to_string(map.size())
                        + " of " + std::to_string(n) + " elements");
    }
    for (auto v : map) {
      if (v >= m) {
        throw DomainError("homomorphism image " + std::to_string(v)
                          + " is not an element of the target");
      }
    }
    HomomorphismResult out;
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        if (map[g.star(a, b)] != h.star(map[a], map[b])) {
          out.valid     = false;
          out.violation = std::pair{a, b};
          out.reason    = "star";
          return out;
        }
      }
    }
    bool both_neutro = g.has_spec() && h.has_spec() && g.spec().carrier.is_neutrosophic()
                       && h.spec().carrier.is_neutrosophic();
    if (both_neutro) {
      for (std::uint64_t a = 0; a < n; ++a) {
        if (g.is_pure_indeterminate(a) && !h.is_pure_indeterminate(map[a])) {
          out.valid     = false;
          out.violation = std::pair{a, a};
          out.reason    = "indeterminate";
          return out;
        }
      }
    }
    return out;
  }

  nlohmann::json subset_json(Groupoid const& g, SubsetHandle const& s) {
    auto arr = nlohmann::json::array();
    for (auto i : s.members()) {
      arr.push_back(g.label(i));
    }
    return arr;
  }

  nlohmann::json to_json(Groupoid const& g, SmarandacheVerdict const& v) {
    nlohmann::json j;
    j["status"] = smarandache_status_name(v.status);
    if (v.witness) {
      j["witness"] = subset_json(g, *v.witness);
    }
    j["complete"] = v.complete;
    return j;
  }

  nlohmann::json structure_report(Groupoid const& g, std::uint64_t max_order) {
    auto const n = g.size();
    if (n > max_order) {
      throw BudgetExceeded("structure analysis of " + g.describe(), n, max_order);
    }
    bool const     power = n <= kPowerSetLimit;
    nlohmann::json j;
    j["order"] = n;
    auto list  = [&g](std::vector<SubsetHandle> const& v) {
      auto arr = nlohmann::json::array();
      for (auto const& s : v) {
        arr.push_back(subset_json(g, s));
      }
      return arr;
    };
    auto subs = enumerate_subgroupoids(
        g, {max_order, power ? SubgroupoidStrategy::PowerSet : SubgroupoidStrategy::GeneratedClosure});
    j["subgroupoids"] = list(subs);

    IdealSets ideals;
    if (power) {
      ideals = enumerate_ideals(g);
    } else {
      for (auto const& s : subs) {
        bool l = is_left_ideal(g, s);
        bool r = is_right_ideal(g, s);
        if (l) {
          ideals.left.push_back(s);
        }
        if (r) {
          ideals.right.push_back(s);
        }
        if (l && r) {
          ideals.two_sided.push_back(s);
        }
      }
    }
    j["ideals"] = {{"left", list(ideals.left)},
                   {"right", list(ideals.right)},
                   {"two_sided", list(ideals.two_sided)}};

    auto simple       = is_simple(g, max_order);
    j["normal"]       = list(simple.normal);
    j["simple"]       = simple.simple;
    j["normal_groupoid"] = is_normal_groupoid(g);

    auto sg           = smarandache_identity(g, std::optional<IdentityId>{}, max_order);
    j["smarandache"]  = to_json(g, sg);
    j["complete"]     = power;
    return j;
  }

}  // namespace ggl
