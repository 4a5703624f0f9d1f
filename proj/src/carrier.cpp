#include "ggl/carrier.hpp"

#include <charconv>
#include <numeric>

#include "ggl/error.hpp"

namespace ggl {

  namespace {

    std::int64_t mod(std::int64_t x, std::uint32_t n) {
      auto r = x % static_cast<std::int64_t>(n);
      return r < 0 ? r + n : r;
    }

    // Inputs are canonical residues below n <= 10^6, so x * y fits.
    std::int64_t mulmod(std::int64_t x, std::int64_t y, std::uint32_t n) {
      return (x * y) % static_cast<std::int64_t>(n);
    }

    Value make_rational(std::int64_t num, std::int64_t den) {
      if (den == 0) {
        throw DomainError("rational with zero denominator");
      }
      if (den < 0) {
        num = -num;
        den = -den;
      }
      auto g = std::gcd(num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
      return Value{num, den};
    }

    void require_member(Carrier const& c, Value const& v) {
      if (!belongs(c, v)) {
        throw DomainError("value (" + std::to_string(v.a) + ", "
                          + std::to_string(v.b) + ") is not a canonical "
                          + c.name() + " value");
      }
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::int64_t parse_int(std::string_view s, std::string_view whole) {
      s = trim(s);
      if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
      }
      std::int64_t out = 0;
      auto [ptr, ec]   = std::from_chars(s.data(), s.data() + s.size(), out);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("malformed integer in '" + std::string(whole) + "'");
      }
      return out;
    }

    // Parses "I", "bI", "-bI" into the coefficient b.
    std::int64_t parse_indeterminate_term(std::string_view s,
                                          std::string_view whole) {
      s = trim(s);
      s.remove_suffix(1);  // the trailing I
      s = trim(s);
      if (s.empty() || s == "+") {
        return 1;
      }
      if (s == "-") {
        return -1;
      }
      return parse_int(s, whole);
    }

    // Splits "a+bI" / "a-bI" / "bI" / "a" into raw coefficients.
    std::pair<std::int64_t, std::int64_t> parse_neutro(std::string_view s,
                                                       std::string_view whole) {
      s = trim(s);
      if (s.empty()) {
        throw ParseError("empty value");
      }
      if (s.back() != 'I') {
        return {parse_int(s, whole), 0};
      }
      // find the sign separating the real part, skipping a leading sign
      for (std::size_t i = s.size() - 1; i > 0; --i) {
        if (s[i] == '+' || s[i] == '-') {
          auto re   = parse_int(s.substr(0, i), whole);
          auto coef = parse_indeterminate_term(s.substr(i), whole);
          return {re, coef};
        }
      }
      return {0, parse_indeterminate_term(s, whole)};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Carrier
  ////////////////////////////////////////////////////////////////////////

  Carrier Carrier::modular(std::uint32_t n) {
    if (n < 2) {
      throw DomainError("modulus must be at least 2");
    }
    return Carrier(CarrierKind::Modular, n, false);
  }

  Carrier Carrier::pure_neutrosophic(std::uint32_t n) {
    if (n < 2) {
      throw DomainError("modulus must be at least 2");
    }
    return Carrier(CarrierKind::PureNeutrosophic, n, false);
  }

  Carrier Carrier::mixed_neutrosophic(std::uint32_t n) {
    if (n < 2) {
      throw DomainError("modulus must be at least 2");
    }
    return Carrier(CarrierKind::MixedNeutrosophic, n, false);
  }

  Carrier Carrier::rational() {
    return Carrier(CarrierKind::RationalDemo, 0, false);
  }

  Carrier Carrier::interval_of(Carrier const& inner) {
    if (inner.interval_) {
      throw DomainError("intervals of intervals are not supported");
    }
    if (inner.kind_ == CarrierKind::RationalDemo) {
      throw DomainError("the rational demo carrier has no interval form");
    }
    return Carrier(inner.kind_, inner.n_, true);
  }

  Carrier Carrier::inner() const noexcept {
    return Carrier(kind_, n_, false);
  }

  std::uint64_t Carrier::size() const {
    switch (kind_) {
      case CarrierKind::Modular:
      case CarrierKind::PureNeutrosophic:
        return n_;
      case CarrierKind::MixedNeutrosophic:
        return static_cast<std::uint64_t>(n_) * n_;
      case CarrierKind::RationalDemo:
        break;
    }
    throw DomainError("the rational demo carrier is infinite");
  }

  std::size_t Carrier::arity() const noexcept {
    switch (kind_) {
      case CarrierKind::Modular:
      case CarrierKind::PureNeutrosophic:
        return 1;
      default:
        return 2;
    }
  }

  std::string Carrier::name() const {
    std::string base;
    switch (kind_) {
      case CarrierKind::Modular:
        base = "zn:" + std::to_string(n_);
        break;
      case CarrierKind::PureNeutrosophic:
        base = "zni:" + std::to_string(n_);
        break;
      case CarrierKind::MixedNeutrosophic:
        base = "nzn:" + std::to_string(n_);
        break;
      case CarrierKind::RationalDemo:
        return "q";
    }
    return interval_ ? "o(" + base + ")" : base;
  }

  Carrier parse_carrier(std::string_view text) {
    auto whole = text;
    text       = trim(text);
    if (text == "q") {
      return Carrier::rational();
    }
    if (text.starts_with("o(") && text.ends_with(")")) {
      return Carrier::interval_of(
          parse_carrier(text.substr(2, text.size() - 3)));
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("malformed carrier '" + std::string(whole) + "'");
    }
    auto tag = text.substr(0, colon);
    auto n   = parse_int(text.substr(colon + 1), whole);
    if (n < 2 || n > 1'000'000) {
      throw ParseError("carrier modulus out of range in '" + std::string(whole)
                       + "'");
    }
    auto un = static_cast<std::uint32_t>(n);
    if (tag == "zn") {
      return Carrier::modular(un);
    } else if (tag == "zni") {
      return Carrier::pure_neutrosophic(un);
    } else if (tag == "nzn") {
      return Carrier::mixed_neutrosophic(un);
    }
    throw ParseError("unknown carrier kind in '" + std::string(whole) + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // Values
  ////////////////////////////////////////////////////////////////////////

  Value reduce(Carrier const& c, std::span<std::int64_t const> raw) {
    if (raw.size() != c.arity()) {
      throw ShapeError("carrier " + c.name() + " expects "
                       + std::to_string(c.arity()) + " coefficient(s), got "
                       + std::to_string(raw.size()));
    }
    auto n = c.modulus();
    switch (c.kind()) {
      case CarrierKind::Modular:
        return Value::residue(mod(raw[0], n));
      case CarrierKind::PureNeutrosophic:
        return Value::indeterminate(mod(raw[0], n));
      case CarrierKind::MixedNeutrosophic:
        return Value::mixed(mod(raw[0], n), mod(raw[1], n));
      case CarrierKind::RationalDemo:
        return make_rational(raw[0], raw[1]);
    }
    return {};
  }

  Value reduce(Carrier const& c, std::initializer_list<std::int64_t> raw) {
    return reduce(c, std::span<std::int64_t const>(raw.begin(), raw.size()));
  }

  bool belongs(Carrier const& c, Value const& v) noexcept {
    auto in_range = [&c](std::int64_t x) {
      return x >= 0 && x < static_cast<std::int64_t>(c.modulus());
    };
    switch (c.kind()) {
      case CarrierKind::Modular:
        return v.b == 0 && in_range(v.a);
      case CarrierKind::PureNeutrosophic:
        return v.a == 0 && in_range(v.b);
      case CarrierKind::MixedNeutrosophic:
        return in_range(v.a) && in_range(v.b);
      case CarrierKind::RationalDemo:
        return v.b > 0 && std::gcd(v.a, v.b) == 1;
    }
    return false;
  }

  bool is_zero(Carrier const& c, Value const& v) noexcept {
    return v.a == 0 && (c.kind() == CarrierKind::RationalDemo || v.b == 0);
  }

  bool has_indeterminate(Carrier const& c, Value const& v) noexcept {
    return c.is_neutrosophic() && v.b != 0;
  }

  Value zero(Carrier const& c) {
    return c.kind() == CarrierKind::RationalDemo ? Value{0, 1} : Value{};
  }

  Value unit(Carrier const& c) {
    switch (c.kind()) {
      case CarrierKind::PureNeutrosophic:
        return Value::indeterminate(1);
      case CarrierKind::RationalDemo:
        return Value{1, 1};
      default:
        return Value::residue(1);
    }
  }

  Value add(Carrier const& c, Value const& x, Value const& y) {
    require_member(c, x);
    require_member(c, y);
    if (c.kind() == CarrierKind::RationalDemo) {
      return make_rational(x.a * y.b + y.a * x.b, x.b * y.b);
    }
    auto n = c.modulus();
    return Value{mod(x.a + y.a, n), mod(x.b + y.b, n)};
  }

  Value mul(Carrier const& c, Value const& x, Value const& y) {
    require_member(c, x);
    require_member(c, y);
    auto n = c.modulus();
    switch (c.kind()) {
      case CarrierKind::Modular:
        return Value::residue(mulmod(x.a, y.a, n));
      case CarrierKind::PureNeutrosophic:
        // bI * dI = bd I^2 = bd I
        return Value::indeterminate(mulmod(x.b, y.b, n));
      case CarrierKind::MixedNeutrosophic: {
        // (a + bI)(c + dI) = ac + (ad + bc + bd) I
        auto re = mulmod(x.a, y.a, n);
        auto im = (mulmod(x.a, y.b, n) + mulmod(x.b, y.a, n)
                   + mulmod(x.b, y.b, n))
                  % n;
        return Value::mixed(re, im);
      }
      case CarrierKind::RationalDemo:
        return make_rational(x.a * y.a, x.b * y.b);
    }
    return {};
  }

  std::vector<Value> enumerate(Carrier const& c) {
    auto const         size = c.size();
    std::vector<Value> out;
    out.reserve(size);
    for (std::uint64_t code = 0; code < size; ++code) {
      out.push_back(value_at(c, code));
    }
    return out;
  }

  std::uint64_t code_of(Carrier const& c, Value const& v) {
    require_member(c, v);
    switch (c.kind()) {
      case CarrierKind::Modular:
        return static_cast<std::uint64_t>(v.a);
      case CarrierKind::PureNeutrosophic:
        return static_cast<std::uint64_t>(v.b);
      case CarrierKind::MixedNeutrosophic:
        return static_cast<std::uint64_t>(v.a) * c.modulus()
               + static_cast<std::uint64_t>(v.b);
      case CarrierKind::RationalDemo:
        break;
    }
    throw DomainError("the rational demo carrier cannot be enumerated");
  }

  Value value_at(Carrier const& c, std::uint64_t code) {
    if (code >= c.size()) {
      throw DomainError("value code out of range");
    }
    auto n = c.modulus();
    switch (c.kind()) {
      case CarrierKind::Modular:
        return Value::residue(static_cast<std::int64_t>(code));
      case CarrierKind::PureNeutrosophic:
        return Value::indeterminate(static_cast<std::int64_t>(code));
      default:
        return Value::mixed(static_cast<std::int64_t>(code / n),
                            static_cast<std::int64_t>(code % n));
    }
  }

  CoprimalityClass coprimality_class(Carrier const& c,
                                     Value const&   x,
                                     Value const&   y) {
    require_member(c, x);
    require_member(c, y);
    if (is_zero(c, x) || is_zero(c, y)) {
      throw DomainError("coprimality is undefined for a zero argument");
    }
    CoprimalityClass out;
    if (c.kind() == CarrierKind::RationalDemo) {
      out.gcd_content = std::gcd(std::gcd(x.a, x.b), std::gcd(y.a, y.b));
    } else {
      std::uint64_t g = 0;
      for (auto coeff : {x.a, x.b, y.a, y.b}) {
        g = std::gcd(g, static_cast<std::uint64_t>(coeff));
      }
      out.gcd_content = g;
    }
    out.is_unit = out.gcd_content == 1;
    bool pure   = c.is_neutrosophic() && x.a == 0 && y.a == 0;
    out.label   = pure ? "I" : "1";
    return out;
  }

  std::string format_value(Carrier const& c, Value const& v) {
    std::string inner;
    switch (c.kind()) {
      case CarrierKind::Modular:
        inner = std::to_string(v.a);
        break;
      case CarrierKind::RationalDemo:
        inner = v.b == 1 ? std::to_string(v.a)
                         : std::to_string(v.a) + "/" + std::to_string(v.b);
        break;
      default: {
        auto coeff = [](std::int64_t b) {
          return b == 1 ? std::string("I") : std::to_string(b) + "I";
        };
        if (v.b == 0) {
          inner = std::to_string(v.a);
        } else if (v.a == 0) {
          inner = coeff(v.b);
        } else {
          inner = std::to_string(v.a) + "+" + coeff(v.b);
        }
      }
    }
    return c.is_interval() ? "[0," + inner + "]" : inner;
  }

  Value parse_value(Carrier const& c, std::string_view text) {
    auto whole = text;
    text       = trim(text);
    if (c.is_interval()) {
      if (text.starts_with("[") && text.ends_with("]")) {
        auto body  = text.substr(1, text.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string_view::npos
            || parse_int(body.substr(0, comma), whole) != 0) {
          throw ParseError("intervals must have the form [0,x]: '"
                           + std::string(whole) + "'");
        }
        text = body.substr(comma + 1);
      }
      return parse_value(c.inner(), text);
    }
    switch (c.kind()) {
      case CarrierKind::Modular:
        if (text.ends_with("I")) {
          throw ParseError("Z_n values have no indeterminate: '"
                           + std::string(whole) + "'");
        }
        return reduce(c, {parse_int(text, whole)});
      case CarrierKind::PureNeutrosophic: {
        auto [re, im] = parse_neutro(text, whole);
        if (re != 0) {
          throw ParseError("pure neutrosophic values have no real part: '"
                           + std::string(whole) + "'");
        }
        return reduce(c, {im});
      }
      case CarrierKind::MixedNeutrosophic: {
        auto [re, im] = parse_neutro(text, whole);
        return reduce(c, {re, im});
      }
      case CarrierKind::RationalDemo: {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
          return make_rational(parse_int(text, whole), 1);
        }
        return make_rational(parse_int(text.substr(0, slash), whole),
                             parse_int(text.substr(slash + 1), whole));
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Parameters
  ////////////////////////////////////////////////////////////////////////

  Param plain_param(std::int64_t t) {
    return Param{Value::residue(t), false};
  }

  Param parse_param(Carrier const& c, std::string_view text) {
    auto       whole = text;
    auto const base  = c.inner();
    text             = trim(text);
    if (base.kind() == CarrierKind::RationalDemo) {
      auto v = parse_value(base, text);
      if (v.b == 1) {
        return plain_param(v.a);
      }
      return Param{v, true};
    }
    if (text.ends_with("I") || text.starts_with("[")) {
      if (base.kind() == CarrierKind::Modular) {
        throw ParseError("Z_n parameters have no indeterminate: '"
                         + std::string(whole) + "'");
      }
      return Param{parse_value(base, text), true};
    }
    auto t = parse_int(text, whole);
    if (t < 0 || t >= static_cast<std::int64_t>(base.modulus())) {
      throw ParseError("parameter '" + std::string(whole)
                       + "' is outside Z_" + std::to_string(base.modulus()));
    }
    return plain_param(t);
  }

  std::string format_param(Carrier const& c, Param const& p) {
    auto const base = c.inner();
    if (!p.native) {
      return std::to_string(p.value.a);
    }
    return format_value(base, p.value);
  }

  Value embed(Carrier const& c, Param const& p) {
    auto const base = c.inner();
    if (base.kind() == CarrierKind::RationalDemo) {
      return p.native ? p.value : Value{p.value.a, 1};
    }
    if (p.native) {
      if (!belongs(base, p.value)) {
        throw DomainError("parameter is not a canonical " + base.name()
                          + " value");
      }
      return p.value;
    }
    auto t = p.value.a;
    if (p.value.b != 0 || t < 0 || t >= static_cast<std::int64_t>(base.modulus())) {
      throw DomainError("plain parameter " + std::to_string(t)
                        + " is outside Z_" + std::to_string(base.modulus()));
    }
    // t acts on Z_nI exactly as tI does, since tI * bI = tb I.
    if (base.kind() == CarrierKind::PureNeutrosophic) {
      return Value::indeterminate(t);
    }
    return Value::residue(t);
  }

  bool is_zero(Carrier const& c, Param const& p) {
    return is_zero(c.inner(), embed(c, p));
  }

  Value scale(Carrier const& c, Param const& coeff, Value const& a) {
    auto const base = c.inner();
    return mul(base, embed(c, coeff), a);
  }

}  // namespace ggl
