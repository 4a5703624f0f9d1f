#include "ggl/identities.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "ggl/error.hpp"
#include "parallel.hpp"

namespace ggl {

  namespace {

    template <typename T, typename Star>
    std::pair<T, T> sides(IdentityId id, Star&& s, T const& x, T const& y, T const& z) {
      switch (id) {
        case IdentityId::Associative:
          return {s(s(x, y), z), s(x, s(y, z))};
        case IdentityId::Commutative:
          return {s(x, y), s(y, x)};
        case IdentityId::Idempotent:
          return {s(x, x), x};
        case IdentityId::LeftAlternative:
          return {s(s(x, x), y), s(x, s(x, y))};
        case IdentityId::RightAlternative:
          return {s(s(x, y), y), s(x, s(y, y))};
        case IdentityId::Moufang:
          return {s(s(x, y), s(z, x)), s(s(x, s(y, z)), x)};
        case IdentityId::Bol:
          return {s(s(s(x, y), z), y), s(x, s(s(y, z), y))};
        case IdentityId::PIdentity:
          return {s(s(x, y), x), s(x, s(y, x))};
      }
      return {x, x};
    }

    std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
      std::uint64_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        out *= base;
      }
      return out;
    }

    void fill_witness(Groupoid const& g, IdentityVerdict& v) {
      for (auto i : v.witness_indices) {
        v.witness_labels.push_back(g.label(i));
        if (g.has_spec()) {
          v.witness.push_back(g.element(i));
        }
      }
    }

    IdentityVerdict exhaustive(Groupoid const& g, IdentityId id, std::uint64_t budget) {
      auto const k = arity(id);
      if (!g.enumerable()) {
        auto order = g.order();
        if (!order) {
          throw DomainError("exhaustive checks need a finite carrier");
        }
        throw BudgetExceeded("exhaustive " + identity_name(id) + " check on "
                                 + g.describe(),
                             checked_pow(*order, k),
                             budget);
      }
      auto const n     = g.size();
      auto const total = checked_pow(n, k);
      if (total > budget) {
        throw BudgetExceeded("exhaustive " + identity_name(id) + " check on "
                                 + g.describe(),
                             total,
                             budget);
      }
      auto const star = [&g](std::uint64_t a, std::uint64_t b) { return g.star(a, b); };
      std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
      detail::parallel_ranges(total, 4096, [&](std::uint64_t lo, std::uint64_t hi) {
        for (auto idx = lo; idx < hi; ++idx) {
          if ((idx & 1023) == 0 && idx > best.load(std::memory_order_relaxed)) {
            return;
          }
          std::uint64_t x = idx % n;
          std::uint64_t y = k > 1 ? (idx / n) % n : 0;
          std::uint64_t z = k > 2 ? idx / n / n : 0;
          auto [l, r]     = sides<std::uint64_t>(id, star, x, y, z);
          if (l != r) {
            auto cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
        }
      });
      IdentityVerdict v;
      v.identity = id;
      v.method   = Method::Exhaustive;
      auto first = best.load();
      if (first == std::numeric_limits<std::uint64_t>::max()) {
        v.status = Status::Holds;
        return v;
      }
      v.status = Status::Fails;
      for (std::size_t i = 0; i < k; ++i) {
        v.witness_indices.push_back(first % n);
        first /= n;
      }
      fill_witness(g, v);
      return v;
    }

    IdentityVerdict sampled(Groupoid const& g, IdentityId id, std::uint64_t trials, std::uint64_t seed) {
      auto const      k = arity(id);
      std::mt19937_64 rng(seed);
      IdentityVerdict v;
      v.identity = id;
      v.method   = Method::Sampled;
      v.trials   = trials;
      v.seed     = seed;
      v.status   = Status::SampledNoCounterexample;
      if (g.enumerable()) {
        auto const                                   n = g.size();
        std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
        auto const star = [&g](std::uint64_t a, std::uint64_t b) { return g.star(a, b); };
        for (std::uint64_t t = 0; t < trials; ++t) {
          std::uint64_t xs[3] = {0, 0, 0};
          for (std::size_t i = 0; i < k; ++i) {
            xs[i] = pick(rng);
          }
          auto [l, r] = sides<std::uint64_t>(id, star, xs[0], xs[1], xs[2]);
          if (l != r) {
            v.status = Status::Fails;
            v.witness_indices.assign(xs, xs + k);
            fill_witness(g, v);
            return v;
          }
        }
        return v;
      }
      auto const star = [&g](Element const& a, Element const& b) { return g.star(a, b); };
      for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Element> xs;
        for (std::size_t i = 0; i < 3; ++i) {
          xs.push_back(i < k ? g.random_element(rng) : Element{});
        }
        if (k < 3) {
          xs[2] = xs[0];
        }
        if (k < 2) {
          xs[1] = xs[0];
        }
        auto [l, r] = sides<Element>(id, star, xs[0], xs[1], xs[2]);
        if (l != r) {
          v.status = Status::Fails;
          xs.resize(k);
          for (auto const& e : xs) {
            v.witness_labels.push_back(g.format(e));
          }
          v.witness = std::move(xs);
          return v;
        }
      }
      return v;
    }

    Groupoid scalar_counterpart(Groupoid const& g) {
      auto spec  = g.spec();
      spec.shape = Shape::scalar();
      spec.level.reset();
      return Groupoid::build(spec);
    }

    IdentityVerdict lifted(Groupoid const& g, IdentityId id, CheckMode mode, std::uint64_t budget) {
      auto scalar = scalar_counterpart(g);
      auto inner  = check_identity(scalar, id, mode, budget);
      IdentityVerdict v;
      v.identity = id;
      v.method   = Method::Lifted;
      v.status   = inner.status;
      v.trials   = inner.trials;
      v.seed     = inner.seed;
      if (inner.fails()) {
        auto const& shape = g.spec().shape;
        for (auto const& w : inner.witness) {
          v.witness.push_back(constant_element(shape, w.entries[0]));
          v.witness_labels.push_back(g.format(v.witness.back()));
          if (g.enumerable()) {
            v.witness_indices.push_back(g.index_of(v.witness.back()));
          }
        }
      }
      return v;
    }

    bool lift_applies(Groupoid const& g) {
      return g.has_spec() && g.spec().shape.kind != ShapeKind::Scalar
             && scalar_projection(g.spec().shape) == Liftability::Liftable;
    }

    // Single integer coefficient of an embedded parameter, if the closed
    // forms apply to the carrier.
    std::optional<std::uint64_t> coefficient(Carrier const& c, Param const& p) {
      auto v = embed(c, p);
      switch (c.kind()) {
        case CarrierKind::Modular:
          return static_cast<std::uint64_t>(v.a);
        case CarrierKind::PureNeutrosophic:
          return static_cast<std::uint64_t>(v.b);
        default:
          return std::nullopt;
      }
    }

  }  // namespace

  std::size_t arity(IdentityId id) noexcept {
    switch (id) {
      case IdentityId::Idempotent:
        return 1;
      case IdentityId::Commutative:
      case IdentityId::LeftAlternative:
      case IdentityId::RightAlternative:
      case IdentityId::PIdentity:
        return 2;
      default:
        return 3;
    }
  }

  std::string identity_name(IdentityId id) {
    switch (id) {
      case IdentityId::Associative:
        return "associative";
      case IdentityId::Commutative:
        return "commutative";
      case IdentityId::Idempotent:
        return "idempotent";
      case IdentityId::LeftAlternative:
        return "left-alternative";
      case IdentityId::RightAlternative:
        return "right-alternative";
      case IdentityId::Moufang:
        return "moufang";
      case IdentityId::Bol:
        return "bol";
      case IdentityId::PIdentity:
        return "p-identity";
    }
    return {};
  }

  std::string identity_equation(IdentityId id) {
    switch (id) {
      case IdentityId::Associative:
        return "(xy)z = x(yz)";
      case IdentityId::Commutative:
        return "xy = yx";
      case IdentityId::Idempotent:
        return "xx = x";
      case IdentityId::LeftAlternative:
        return "(xx)y = x(xy)";
      case IdentityId::RightAlternative:
        return "(xy)y = x(yy)";
      case IdentityId::Moufang:
        return "(xy)(zx) = (x(yz))x";
      case IdentityId::Bol:
        return "((xy)z)y = x((yz)y)";
      case IdentityId::PIdentity:
        return "(xy)x = x(yx)";
    }
    return {};
  }

  IdentityId parse_identity(std::string_view text) {
    for (auto id : kAllIdentities) {
      if (text == identity_name(id)) {
        return id;
      }
    }
    if (text == "p" || text == "P") {
      return IdentityId::PIdentity;
    }
    throw ParseError("unknown identity '" + std::string(text) + "'");
  }

  std::vector<IdentityId> parse_identity_set(std::string_view text) {
    if (text == "alternative") {
      return {IdentityId::LeftAlternative, IdentityId::RightAlternative};
    }
    return {parse_identity(text)};
  }

  std::pair<std::uint64_t, std::uint64_t> identity_sides(Groupoid const&                g,
                                                         IdentityId                     id,
                                                         std::span<std::uint64_t const> vars) {
    if (vars.size() != arity(id)) {
      throw ShapeError(identity_name(id) + " takes " + std::to_string(arity(id))
                       + " variables");
    }
    auto const    star = [&g](std::uint64_t a, std::uint64_t b) { return g.star(a, b); };
    std::uint64_t xs[3] = {vars[0], vars[0], vars[0]};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      xs[i] = vars[i];
    }
    return sides<std::uint64_t>(id, star, xs[0], xs[1], xs[2]);
  }

  std::pair<Element, Element> identity_sides(Groupoid const&          g,
                                             IdentityId               id,
                                             std::span<Element const> vars) {
    if (vars.size() != arity(id)) {
      throw ShapeError(identity_name(id) + " takes " + std::to_string(arity(id))
                       + " variables");
    }
    auto const star = [&g](Element const& a, Element const& b) { return g.star(a, b); };
    auto const& x   = vars[0];
    auto const& y   = vars.size() > 1 ? vars[1] : vars[0];
    auto const& z   = vars.size() > 2 ? vars[2] : vars[0];
    return sides<Element>(id, star, x, y, z);
  }

  std::string method_name(Method m) {
    switch (m) {
      case Method::Exhaustive:
        return "exhaustive";
      case Method::Lifted:
        return "lifted";
      case Method::Sampled:
        return "sampled";
    }
    return {};
  }

  std::string status_name(Status s) {
    switch (s) {
      case Status::Holds:
        return "holds";
      case Status::Fails:
        return "fails";
      case Status::SampledNoCounterexample:
        return "sampled-no-counterexample";
    }
    return {};
  }

  CheckMode parse_mode(std::string_view text) {
    if (text == "exhaustive") {
      return CheckMode::exhaustive();
    }
    if (text == "auto") {
      return CheckMode::automatic();
    }
    if (text.starts_with("sampled")) {
      std::uint64_t trials = 10'000;
      std::uint64_t seed   = 0;
      auto          rest   = text.substr(7);
      auto          num    = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [p, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
          throw ParseError("malformed mode '" + std::string(text) + "'");
        }
        return v;
      };
      if (!rest.empty()) {
        if (rest.front() != ':') {
          throw ParseError("malformed mode '" + std::string(text) + "'");
        }
        rest       = rest.substr(1);
        auto colon = rest.find(':');
        trials     = num(rest.substr(0, colon));
        if (colon != std::string_view::npos) {
          seed = num(rest.substr(colon + 1));
        }
      }
      return CheckMode::sampled(trials, seed);
    }
    throw ParseError("unknown mode '" + std::string(text) + "'");
  }

  std::uint64_t evaluation_budget() {
    if (char const* env = std::getenv("GGL_BUDGET")) {
      char*         end = nullptr;
      std::uint64_t v   = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return v;
      }
    }
    return kDefaultBudget;
  }

  IdentityVerdict check_identity(Groupoid const& g, IdentityId id, CheckMode mode, std::uint64_t budget) {
    switch (mode.kind) {
      case CheckMode::Kind::Exhaustive:
        return exhaustive(g, id, budget);
      case CheckMode::Kind::Sampled:
        return sampled(g, id, mode.trials, mode.seed);
      case CheckMode::Kind::Auto:
        break;
    }
    if (lift_applies(g)) {
      return lifted(g, id, mode, budget);
    }
    if (g.enumerable() && checked_pow(g.size(), arity(id)) <= budget) {
      return exhaustive(g, id, budget);
    }
    return sampled(g, id, mode.trials, mode.seed);
  }

  bool witness_violates(Groupoid const& g, IdentityVerdict const& v) {
    if (!v.fails()) {
      return false;
    }
    if (!v.witness_indices.empty()) {
      auto [l, r] = identity_sides(g, v.identity, v.witness_indices);
      return l != r;
    }
    if (v.witness.empty()) {
      return false;
    }
    auto [l, r] = identity_sides(g, v.identity, std::span<Element const>(v.witness));
    return l != r;
  }

  bool holds_on_subset(Groupoid const&                g,
                       IdentityId                     id,
                       std::span<std::uint64_t const> members) {
    auto const k    = arity(id);
    auto const m    = members.size();
    auto const star = [&g](std::uint64_t a, std::uint64_t b) { return g.star(a, b); };
    auto const total = checked_pow(m, k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      auto x = members[idx % m];
      auto y = k > 1 ? members[(idx / m) % m] : x;
      auto z = k > 2 ? members[idx / m / m] : x;
      auto [l, r] = sides<std::uint64_t>(id, star, x, y, z);
      if (l != r) {
        return false;
      }
    }
    return true;
  }

  std::string closed_form_name(ClosedForm p) {
    switch (p) {
      case ClosedForm::IdempotentIff:
        return "idempotent-iff";
      case ClosedForm::SemigroupIff:
        return "semigroup-iff";
      case ClosedForm::AlternativeIff:
        return "alternative-iff";
      case ClosedForm::TypeIIIPAltIff:
        return "type-iii-p-alt-iff";
      case ClosedForm::EqualPairP:
        return "equal-pair-p";
    }
    return {};
  }

  bool closed_form(ClosedForm p, std::uint64_t n, std::uint64_t t, std::uint64_t u) {
    t %= n;
    u %= n;
    auto sq = [n](std::uint64_t x) { return (x * x) % n == x; };
    switch (p) {
      case ClosedForm::IdempotentIff:
        return (t + u) % n == 1 % n;
      case ClosedForm::SemigroupIff:
        return sq(t) && sq(u);
      case ClosedForm::AlternativeIff:
        return t == u && sq(t);
      case ClosedForm::TypeIIIPAltIff:
        return (t == 0) != (u == 0) && sq(t == 0 ? u : t);
      case ClosedForm::EqualPairP:
        return t == u;
    }
    return false;
  }

  ConsistencyReport cross_validate(Groupoid const& g, IdentityId id) {
    ConsistencyReport out;
    out.identity = id;
    auto record  = [&out](std::string method, bool holds, bool implication = false) {
      out.results.push_back(MethodResult{std::move(method), holds, implication});
    };
    std::optional<bool> truth;
    try {
      auto v = exhaustive(g, id, evaluation_budget());
      truth  = !v.fails();
      record("exhaustive", *truth);
    } catch (Error const& e) {
      out.detail = std::string("exhaustive skipped: ") + e.what();
    }
    if (g.has_spec() && scalar_projection(g.spec().shape) == Liftability::Liftable
        && g.spec().carrier.is_finite()) {
      try {
        if (g.spec().shape.kind == ShapeKind::Scalar) {
          auto spec  = g.spec();
          spec.shape = Shape::matrix(1, 2);
          spec.level.reset();
          auto wide = Groupoid::build(spec);
          record("lifted", !exhaustive(wide, id, evaluation_budget()).fails());
        } else {
          record("lifted", !lifted(g, id, CheckMode::exhaustive(), evaluation_budget()).fails());
        }
      } catch (Error const& e) {
        out.detail += std::string(out.detail.empty() ? "" : "; ")
                      + "lifted skipped: " + e.what();
      }
      auto const& spec = g.spec();
      auto        base = spec.carrier.inner();
      auto        t    = coefficient(base, spec.t);
      auto        u    = coefficient(base, spec.u);
      if (t && u) {
        auto const n     = base.modulus();
        bool const one0  = (*t == 0) != (*u == 0);
        auto       apply = [&](ClosedForm p, bool implication = false) {
          record("closed-form:" + closed_form_name(p), closed_form(p, n, *t, *u), implication);
        };
        switch (id) {
          case IdentityId::Idempotent:
            apply(ClosedForm::IdempotentIff);
            break;
          case IdentityId::Associative:
            apply(ClosedForm::SemigroupIff);
            break;
          case IdentityId::LeftAlternative:
          case IdentityId::RightAlternative:
            if (*t == *u) {
              apply(ClosedForm::AlternativeIff);
            } else if (one0) {
              apply(ClosedForm::TypeIIIPAltIff);
            }
            break;
          case IdentityId::PIdentity:
            if (*t == *u) {
              apply(ClosedForm::EqualPairP, true);
            } else if (one0) {
              apply(ClosedForm::TypeIIIPAltIff);
            }
            break;
          default:
            break;
        }
      }
    }
    if (!truth && !out.results.empty()) {
      truth = out.results.front().holds;
    }
    for (auto const& r : out.results) {
      bool ok = r.implication ? (!r.holds || *truth) : r.holds == *truth;
      if (!ok) {
        out.agree = false;
        out.detail += std::string(out.detail.empty() ? "" : "; ") + r.method
                      + " disagrees with " + out.results.front().method;
      }
    }
    return out;
  }

  nlohmann::json to_json(IdentityVerdict const& v) {
    nlohmann::json j;
    j["identity"] = identity_name(v.identity);
    j["method"]   = method_name(v.method);
    j["status"]   = status_name(v.status);
    if (v.fails()) {
      j["witness"] = v.witness_labels;
    }
    if (v.method == Method::Sampled || v.trials != 0) {
      j["trials"] = v.trials;
      j["seed"]   = v.seed;
    }
    return j;
  }

  nlohmann::json to_json(ConsistencyReport const& r) {
    nlohmann::json j;
    j["identity"] = identity_name(r.identity);
    j["agree"]    = r.agree;
    auto& arr     = j["results"] = nlohmann::json::array();
    for (auto const& m : r.results) {
      arr.push_back({{"method", m.method},
                     {"holds", m.holds},
                     {"implication", m.implication}});
    }
    if (!r.detail.empty()) {
      j["detail"] = r.detail;
    }
    return j;
  }

}  // namespace ggl
