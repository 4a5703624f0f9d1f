#include "ggl/groupoid.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ggl/error.hpp"
#include "parallel.hpp"

namespace ggl {

  namespace {

    constexpr std::uint64_t kDenseCap        = 2048;
    constexpr std::uint64_t kScalarTableCap  = 4096;

    bool is_prime(std::int64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    // A value with exactly one nonzero coefficient, that coefficient prime.
    bool is_prime_value(Carrier const& c, Value const& v) {
      switch (c.kind()) {
        case CarrierKind::Modular:
          return is_prime(v.a);
        case CarrierKind::PureNeutrosophic:
          return is_prime(v.b);
        case CarrierKind::MixedNeutrosophic:
          return (v.a == 0 && is_prime(v.b)) || (v.b == 0 && is_prime(v.a));
        case CarrierKind::RationalDemo:
          return v.b == 1 && is_prime(v.a);
      }
      return false;
    }

  }  // namespace

  std::string level_name(Level l) {
    static char const* const names[] = {"one", "two", "three", "four", "five"};
    return names[static_cast<int>(l) - 1];
  }

  Level parse_level(std::string_view text) {
    for (int k = 1; k <= 5; ++k) {
      auto l = static_cast<Level>(k);
      if (text == level_name(l) || text == std::to_string(k)) {
        return l;
      }
    }
    throw ParseError("unknown level '" + std::string(text) + "'");
  }

  Level classify_level(Carrier const& c, Param const& t, Param const& u) {
    auto const base = c.inner();
    auto       tv   = embed(c, t);
    auto       uv   = embed(c, u);
    bool       tz   = is_zero(base, tv);
    bool       uz   = is_zero(base, uv);
    if (tz && uz) {
      throw DomainError("the parameter pair (0, 0) does not define a groupoid");
    }
    if (tz != uz) {
      return Level::Five;
    }
    if (tv == uv) {
      return Level::Four;
    }
    auto cls = coprimality_class(base, tv, uv);
    if (!cls.is_unit) {
      return Level::Three;
    }
    return is_prime_value(base, tv) && is_prime_value(base, uv) ? Level::One
                                                                : Level::Two;
  }

  GroupoidSpec make_spec(Carrier const& c, Shape const& s, std::int64_t t, std::int64_t u) {
    return GroupoidSpec{c, s, plain_param(t), plain_param(u), std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Impl
  ////////////////////////////////////////////////////////////////////////

  struct Groupoid::Impl {
    // spec-built
    std::optional<GroupoidSpec> spec;
    Value                       t;
    Value                       u;
    std::optional<ElementSpace> space;
    std::uint64_t               base = 0;  // carrier size
    std::vector<std::uint32_t>  scalar;    // base x base, entrywise shapes

    // explicit table
    std::vector<std::string>   table_labels;
    std::vector<std::uint32_t> table;

    std::uint64_t n = 0;  // order when enumerable

    std::once_flag                     dense_once;
    std::vector<std::uint32_t>         dense;

    bool enumerable() const {
      return !spec || (space && !space->too_large());
    }

    std::uint64_t scalar_star(std::uint64_t a, std::uint64_t b) const {
      if (!scalar.empty()) {
        return scalar[a * base + b];
      }
      auto const& c  = spec->carrier;
      auto        va = value_at(c, a);
      auto        vb = value_at(c, b);
      return code_of(c, add(c, mul(c, t, va), mul(c, u, vb)));
    }

    std::uint64_t compute(std::uint64_t i, std::uint64_t j) const {
      if (!spec) {
        return table[i * n + j];
      }
      if (scalar_projection(spec->shape) == Liftability::Liftable) {
        auto const    m   = spec->shape.entry_count();
        std::uint64_t out = 0;
        std::uint64_t pw  = 1;
        for (std::size_t k = 0; k < m; ++k) {
          out += scalar_star(i % base, j % base) * pw;
          i /= base;
          j /= base;
          pw *= base;
        }
        return out;
      }
      auto const& s = spec->shape;
      auto        r = ggl::star(spec->carrier, s, t, u, space->at(i), space->at(j));
      return space->index_of(r);
    }

    void build_dense() {
      dense.resize(n * n);
      detail::parallel_ranges(n, 16, [this](std::uint64_t lo, std::uint64_t hi) {
        for (auto i = lo; i < hi; ++i) {
          for (std::uint64_t j = 0; j < n; ++j) {
            dense[i * n + j] = static_cast<std::uint32_t>(compute(i, j));
          }
        }
      });
    }
  };

  Groupoid Groupoid::build(GroupoidSpec const& spec_in) {
    auto spec  = spec_in;
    auto level = classify_level(spec.carrier, spec.t, spec.u);
    if (spec.level && *spec.level != level) {
      throw DomainError("pinned level " + level_name(*spec.level)
                        + " does not match the parameters (level "
                        + level_name(level) + ")");
    }
    spec.level = level;

    auto impl  = std::make_shared<Impl>();
    impl->t    = embed(spec.carrier, spec.t);
    impl->u    = embed(spec.carrier, spec.u);
    impl->spec = spec;
    if (spec.carrier.is_finite()) {
      impl->space.emplace(spec.carrier, spec.shape);
      impl->base = spec.carrier.size();
      if (!impl->space->too_large()) {
        impl->n = impl->space->count();
        if (scalar_projection(spec.shape) == Liftability::Liftable
            && impl->base <= kScalarTableCap && spec.shape.entry_count() > 1) {
          auto const& c = spec.carrier;
          auto const  s = impl->base;
          impl->scalar.resize(s * s);
          for (std::uint64_t a = 0; a < s; ++a) {
            for (std::uint64_t b = 0; b < s; ++b) {
              auto r = add(c, mul(c, impl->t, value_at(c, a)),
                           mul(c, impl->u, value_at(c, b)));
              impl->scalar[a * s + b] = static_cast<std::uint32_t>(code_of(c, r));
            }
          }
        }
      }
    }
    return Groupoid(std::move(impl));
  }

  Groupoid Groupoid::build(Carrier const& c, Shape const& s, std::int64_t t, std::int64_t u) {
    return build(make_spec(c, s, t, u));
  }

  Groupoid Groupoid::from_table(std::vector<std::string>                labels,
                                std::vector<std::vector<std::uint64_t>> table) {
    auto const n = labels.size();
    if (n == 0) {
      throw ShapeError("a groupoid table needs at least one element");
    }
    if (table.size() != n) {
      throw ShapeError("table has " + std::to_string(table.size())
                       + " rows for " + std::to_string(n) + " labels");
    }
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.emplace(labels[i], i).second) {
        throw DomainError("duplicate element label '" + labels[i] + "'");
      }
    }
    auto impl = std::make_shared<Impl>();
    impl->n   = n;
    impl->table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw ShapeError("table row " + std::to_string(i) + " has "
                         + std::to_string(table[i].size()) + " cells, expected "
                         + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw DomainError("table cell (" + std::to_string(i) + ", "
                            + std::to_string(j) + ") = "
                            + std::to_string(table[i][j])
                            + " is not an element index");
        }
        impl->table[i * n + j] = static_cast<std::uint32_t>(table[i][j]);
      }
    }
    impl->table_labels = std::move(labels);
    return Groupoid(std::move(impl));
  }

  bool Groupoid::has_spec() const noexcept {
    return impl_->spec.has_value();
  }

  GroupoidSpec const& Groupoid::spec() const {
    if (!impl_->spec) {
      throw DomainError("table groupoids have no spec");
    }
    return *impl_->spec;
  }

  std::optional<std::uint64_t> Groupoid::order() const noexcept {
    if (!impl_->spec) {
      return impl_->n;
    }
    if (!impl_->space) {
      return std::nullopt;
    }
    return impl_->space->count();
  }

  bool Groupoid::enumerable() const noexcept {
    return impl_->enumerable();
  }

  std::uint64_t Groupoid::size() const {
    if (!impl_->enumerable()) {
      if (!impl_->space) {
        throw DomainError("the rational demo carrier cannot be enumerated");
      }
      throw BudgetExceeded("groupoid " + describe() + " is too large to enumerate",
                           impl_->space->count(),
                           kDefaultElementCap);
    }
    return impl_->n;
  }

  std::uint64_t Groupoid::star(std::uint64_t i, std::uint64_t j) const {
    auto const n = size();
    if (i >= n || j >= n) {
      throw DomainError("element index out of range");
    }
    if (!impl_->spec) {
      return impl_->table[i * n + j];
    }
    if (n <= kDenseCap) {
      std::call_once(impl_->dense_once, [this] { impl_->build_dense(); });
      return impl_->dense[i * n + j];
    }
    return impl_->compute(i, j);
  }

  std::string Groupoid::label(std::uint64_t i) const {
    if (!impl_->spec) {
      return impl_->table_labels.at(i);
    }
    return format(element(i));
  }

  std::vector<std::string> Groupoid::labels() const {
    std::vector<std::string> out;
    auto const               n = size();
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      out.push_back(label(i));
    }
    return out;
  }

  Element Groupoid::element(std::uint64_t i) const {
    if (!impl_->spec) {
      throw DomainError("table groupoids have no element values");
    }
    size();
    return impl_->space->at(i);
  }

  std::uint64_t Groupoid::index_of(Element const& x) const {
    if (!impl_->spec) {
      throw DomainError("table groupoids have no element values");
    }
    size();
    return impl_->space->index_of(x);
  }

  Element Groupoid::star(Element const& x, Element const& y) const {
    auto const& s = spec();
    return ggl::star(s.carrier, s.shape, impl_->t, impl_->u, x, y);
  }

  Element Groupoid::random_element(std::mt19937_64& rng) const {
    auto const& s = spec();
    Element     out;
    out.entries.resize(s.shape.entry_count());
    if (s.carrier.is_finite()) {
      std::uniform_int_distribution<std::uint64_t> pick(0, impl_->base - 1);
      for (auto& v : out.entries) {
        v = value_at(s.carrier, pick(rng));
      }
    } else {
      std::uniform_int_distribution<std::int64_t> num(-20, 20);
      std::uniform_int_distribution<std::int64_t> den(1, 9);
      for (auto& v : out.entries) {
        auto p = num(rng);
        auto q = den(rng);
        v      = reduce(s.carrier, {p, q});
      }
    }
    return out;
  }

  std::string Groupoid::format(Element const& x) const {
    auto const& s = spec();
    return format_element(s.carrier, s.shape, x);
  }

  std::optional<std::uint64_t> Groupoid::zero_index() const noexcept {
    if (impl_->spec && impl_->enumerable()) {
      return 0;
    }
    return std::nullopt;
  }

  bool Groupoid::is_pure_indeterminate(std::uint64_t i) const {
    if (!impl_->spec || !impl_->spec->carrier.is_neutrosophic()) {
      return false;
    }
    auto x       = element(i);
    bool nonzero = false;
    for (auto const& v : x.entries) {
      if (v.a != 0) {
        return false;
      }
      nonzero = nonzero || v.b != 0;
    }
    return nonzero;
  }

  bool Groupoid::has_indeterminate(std::uint64_t i) const {
    if (!impl_->spec || !impl_->spec->carrier.is_neutrosophic()) {
      return false;
    }
    auto x = element(i);
    for (auto const& v : x.entries) {
      if (v.b != 0) {
        return true;
      }
    }
    return false;
  }

  std::string Groupoid::describe() const {
    if (!impl_->spec) {
      return "table(" + std::to_string(impl_->n) + ")";
    }
    auto const& s = *impl_->spec;
    return s.carrier.name() + " " + s.shape.name() + " ("
           + format_param(s.carrier, s.t) + "," + format_param(s.carrier, s.u)
           + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley tables
  ////////////////////////////////////////////////////////////////////////

  CayleyTable cayley_table(Groupoid const& g, std::uint64_t cap) {
    auto order = g.order();
    if (!order) {
      throw DomainError("the rational demo carrier has no Cayley table");
    }
    if (*order > cap) {
      throw BudgetExceeded("Cayley table of " + g.describe() + " is too large",
                           *order,
                           cap);
    }
    auto const  n = g.size();
    CayleyTable out;
    out.labels = g.labels();
    out.cells.assign(n, std::vector<std::uint64_t>(n));
    detail::parallel_ranges(n, 8, [&](std::uint64_t lo, std::uint64_t hi) {
      for (auto i = lo; i < hi; ++i) {
        for (std::uint64_t j = 0; j < n; ++j) {
          out.cells[i][j] = g.star(i, j);
        }
      }
    });
    return out;
  }

  std::string to_tsv(CayleyTable const& t) {
    std::string out = "*";
    for (auto const& l : t.labels) {
      out += "\t" + l;
    }
    out += "\n";
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      out += t.labels[i];
      for (auto c : t.cells[i]) {
        out += "\t" + t.labels[c];
      }
      out += "\n";
    }
    return out;
  }

  CayleyTable table_from_tsv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty()) {
        continue;
      }
      std::vector<std::string> cells;
      std::size_t              start = 0;
      while (true) {
        auto tab = line.find('\t', start);
        cells.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) {
          break;
        }
        start = tab + 1;
      }
      rows.push_back(std::move(cells));
    }
    if (rows.empty()) {
      throw ParseError("empty TSV table");
    }
    CayleyTable out;
    out.labels.assign(rows[0].begin() + 1, rows[0].end());
    std::map<std::string, std::uint64_t> index;
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
      index.emplace(out.labels[i], i);
    }
    if (rows.size() != out.labels.size() + 1) {
      throw ShapeError("TSV table has " + std::to_string(rows.size() - 1)
                       + " rows for " + std::to_string(out.labels.size())
                       + " labels");
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].empty() || rows[r][0] != out.labels[r - 1]) {
        throw ParseError("TSV row " + std::to_string(r)
                         + " does not start with its label");
      }
      std::vector<std::uint64_t> cells;
      for (std::size_t k = 1; k < rows[r].size(); ++k) {
        auto it = index.find(rows[r][k]);
        if (it == index.end()) {
          throw DomainError("table cell (" + std::to_string(r - 1) + ", "
                            + std::to_string(k - 1) + ") = '" + rows[r][k]
                            + "' is not an element label");
        }
        cells.push_back(it->second);
      }
      out.cells.push_back(std::move(cells));
    }
    return out;
  }

  std::string to_json_text(CayleyTable const& t) {
    nlohmann::json j;
    j["labels"] = t.labels;
    j["table"]  = t.cells;
    return j.dump();
  }

  CayleyTable table_from_json_text(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed table JSON: ") + e.what());
    }
    CayleyTable out;
    try {
      out.labels = j.at("labels").get<std::vector<std::string>>();
      out.cells  = j.at("table").get<std::vector<std::vector<std::uint64_t>>>();
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("table JSON needs labels and table: ") + e.what());
    }
    return out;
  }

  Groupoid from_table(CayleyTable const& t) {
    return Groupoid::from_table(t.labels, t.cells);
  }

}  // namespace ggl
