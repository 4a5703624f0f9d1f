#include "ggl/shape.hpp"

#include <charconv>
#include <limits>

#include "ggl/error.hpp"

namespace ggl {

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::uint32_t parse_dim(std::string_view s, std::string_view whole) {
      std::uint32_t out = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), out);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed shape '" + std::string(whole) + "'");
      }
      return out;
    }

    // Splits on sep at bracket depth zero.
    std::vector<std::string_view> split_top(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      int                           depth = 0;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[' || s[i] == '(') {
          ++depth;
        } else if (s[i] == ']' || s[i] == ')') {
          --depth;
        } else if (s[i] == sep && depth == 0) {
          out.push_back(trim(s.substr(start, i - start)));
          start = i + 1;
        }
      }
      out.push_back(trim(s.substr(start)));
      return out;
    }

    std::string_view unwrap(std::string_view s, std::string_view whole) {
      s = trim(s);
      if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw ParseError("expected a bracketed list in '" + std::string(whole)
                         + "'");
      }
      return trim(s.substr(1, s.size() - 2));
    }

    std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
      std::uint64_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        out *= base;
      }
      return out;
    }

  }  // namespace

  Shape Shape::scalar() {
    return Shape{};
  }

  Shape Shape::matrix(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("matrix dimensions must be positive");
    }
    return Shape{ShapeKind::Matrix, rows, cols, 0, ProductKind::Entrywise};
  }

  Shape Shape::poly(std::uint32_t max_deg, ProductKind product) {
    return Shape{ShapeKind::Poly, 1, max_deg + 1, max_deg, product};
  }

  std::size_t Shape::entry_count() const noexcept {
    switch (kind) {
      case ShapeKind::Scalar:
        return 1;
      case ShapeKind::Matrix:
        return static_cast<std::size_t>(rows) * cols;
      case ShapeKind::Poly:
        return static_cast<std::size_t>(max_deg) + 1;
    }
    return 1;
  }

  std::string Shape::name() const {
    switch (kind) {
      case ShapeKind::Scalar:
        return "scalar";
      case ShapeKind::Matrix:
        return "mat:" + std::to_string(rows) + "x" + std::to_string(cols);
      case ShapeKind::Poly: {
        char const* p = product == ProductKind::Entrywise ? "entrywise"
                        : product == ProductKind::Shuffle ? "shuffle"
                                                          : "conv";
        return "poly:" + std::to_string(max_deg) + ":" + p;
      }
    }
    return "scalar";
  }

  Shape parse_shape(std::string_view text) {
    auto whole = text;
    text       = trim(text);
    if (text == "scalar") {
      return Shape::scalar();
    }
    if (text.starts_with("mat:")) {
      auto dims = text.substr(4);
      auto x    = dims.find('x');
      if (x == std::string_view::npos) {
        throw ParseError("malformed shape '" + std::string(whole) + "'");
      }
      auto r = parse_dim(dims.substr(0, x), whole);
      auto c = parse_dim(dims.substr(x + 1), whole);
      if (r == 0 || c == 0) {
        throw ParseError("matrix dimensions must be positive in '"
                         + std::string(whole) + "'");
      }
      return Shape::matrix(r, c);
    }
    if (text.starts_with("poly:")) {
      auto rest  = text.substr(5);
      auto colon = rest.find(':');
      auto deg   = parse_dim(rest.substr(0, colon), whole);
      auto kind  = ProductKind::Entrywise;
      if (colon != std::string_view::npos) {
        auto p = rest.substr(colon + 1);
        if (p == "entrywise") {
          kind = ProductKind::Entrywise;
        } else if (p == "shuffle") {
          kind = ProductKind::Shuffle;
        } else if (p == "conv") {
          kind = ProductKind::Convolution;
        } else {
          throw ParseError("unknown polynomial product in '"
                           + std::string(whole) + "'");
        }
      }
      return Shape::poly(deg, kind);
    }
    throw ParseError("unknown shape '" + std::string(whole) + "'");
  }

  void check_element(Carrier const& c, Shape const& s, Element const& x) {
    if (x.entries.size() != s.entry_count()) {
      throw ShapeError("element has " + std::to_string(x.entries.size())
                       + " entries, shape " + s.name() + " needs "
                       + std::to_string(s.entry_count()));
    }
    for (auto const& v : x.entries) {
      if (!belongs(c, v)) {
        throw ShapeError("element entry is not a canonical " + c.name()
                         + " value");
      }
    }
  }

  Element star(Carrier const& c,
               Shape const&   s,
               Value const&   t,
               Value const&   u,
               Element const& x,
               Element const& y) {
    check_element(c, s, x);
    check_element(c, s, y);
    auto const m = s.entry_count();
    Element    out;
    out.entries.resize(m, zero(c));
    auto lin = [&](Value const& a, Value const& b) {
      return add(c, mul(c, t, a), mul(c, u, b));
    };
    if (s.kind != ShapeKind::Poly || s.product == ProductKind::Entrywise) {
      for (std::size_t i = 0; i < m; ++i) {
        out.entries[i] = lin(x.entries[i], y.entries[i]);
      }
    } else if (s.product == ProductKind::Shuffle) {
      auto const d = s.max_deg;
      for (std::size_t i = 0; i < d; ++i) {
        out.entries[i] = mul(c, x.entries[i], y.entries[i + 1]);
      }
      out.entries[d] = x.entries[d];
    } else {
      auto const d = s.max_deg;
      for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; i + j <= d; ++j) {
          out.entries[i + j] =
              add(c, out.entries[i + j], lin(x.entries[i], y.entries[j]));
        }
      }
    }
    return out;
  }

  Liftability scalar_projection(Shape const& s) noexcept {
    if (s.kind == ShapeKind::Poly && s.product != ProductKind::Entrywise) {
      return Liftability::NotLiftable;
    }
    return Liftability::Liftable;
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSpace
  ////////////////////////////////////////////////////////////////////////

  ElementSpace::ElementSpace(Carrier c, Shape s, std::uint64_t cap)
      : carrier_(c), shape_(s), base_(0), count_(0), cap_(cap) {
    if (!c.is_finite()) {
      throw DomainError("the rational demo carrier cannot be enumerated");
    }
    base_      = c.size();
    count_     = saturating_pow(base_, s.entry_count());
    too_large_ = count_ > cap_;
  }

  void ElementSpace::require_enumerable() const {
    if (too_large_) {
      throw BudgetExceeded("element space of " + carrier_.name() + " "
                               + shape_.name() + " is too large to enumerate",
                           count_,
                           cap_);
    }
  }

  Element ElementSpace::at(std::uint64_t index) const {
    require_enumerable();
    if (index >= count_) {
      throw DomainError("element index out of range");
    }
    auto const m = shape_.entry_count();
    Element    out;
    out.entries.resize(m);
    for (std::size_t k = m; k-- > 0;) {
      out.entries[k] = value_at(carrier_, index % base_);
      index /= base_;
    }
    return out;
  }

  std::uint64_t ElementSpace::index_of(Element const& x) const {
    require_enumerable();
    check_element(carrier_, shape_, x);
    std::uint64_t out = 0;
    for (auto const& v : x.entries) {
      out = out * base_ + code_of(carrier_, v);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string format_element(Carrier const& c, Shape const& s, Element const& x) {
    check_element(c, s, x);
    switch (s.kind) {
      case ShapeKind::Scalar:
        return format_value(c, x.entries[0]);
      case ShapeKind::Matrix: {
        std::string out = "[";
        for (std::uint32_t r = 0; r < s.rows; ++r) {
          out += r == 0 ? "[" : ";[";
          for (std::uint32_t k = 0; k < s.cols; ++k) {
            if (k != 0) {
              out += ",";
            }
            out += format_value(c, x.entries[r * s.cols + k]);
          }
          out += "]";
        }
        return out + "]";
      }
      case ShapeKind::Poly: {
        std::string out = "poly[";
        for (std::size_t k = 0; k < x.entries.size(); ++k) {
          if (k != 0) {
            out += ",";
          }
          out += format_value(c, x.entries[k]);
        }
        return out + "]";
      }
    }
    return {};
  }

  Element parse_element(Carrier const& c, Shape const& s, std::string_view text) {
    auto    whole = text;
    Element out;
    text = trim(text);
    switch (s.kind) {
      case ShapeKind::Scalar:
        out.entries.push_back(parse_value(c, text));
        break;
      case ShapeKind::Matrix: {
        auto rows = split_top(unwrap(text, whole), ';');
        for (auto row : rows) {
          for (auto cell : split_top(unwrap(row, whole), ',')) {
            out.entries.push_back(parse_value(c, cell));
          }
        }
        if (rows.size() != s.rows) {
          throw ParseError("expected " + std::to_string(s.rows)
                           + " matrix rows in '" + std::string(whole) + "'");
        }
        break;
      }
      case ShapeKind::Poly: {
        if (!text.starts_with("poly")) {
          throw ParseError("polynomials are written poly[c0,c1,...]: '"
                           + std::string(whole) + "'");
        }
        for (auto cell : split_top(unwrap(text.substr(4), whole), ',')) {
          out.entries.push_back(parse_value(c, cell));
        }
        break;
      }
    }
    try {
      check_element(c, s, out);
    } catch (ShapeError const& e) {
      throw ParseError(std::string(e.what()) + " in '" + std::string(whole)
                       + "'");
    }
    return out;
  }

  Element constant_element(Shape const& s, Value const& v) {
    return Element{std::vector<Value>(s.entry_count(), v)};
  }

}  // namespace ggl
