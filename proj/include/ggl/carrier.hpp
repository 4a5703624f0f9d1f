#ifndef GGL_CARRIER_HPP_
#define GGL_CARRIER_HPP_

// Scalar domains the star groupoids are built from: Z_n, the pure
// neutrosophic integers Z_nI = {bI}, the mixed ones N(Z_n) = {a + bI}, the
// intervals [0, v] over each of those, and an exact-rational domain used
// only for spot evaluation.
//
// Arithmetic uses I * I = I, so (a + bI)(c + dI) = ac + (ad + bc + bd)I.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ggl {

  enum class CarrierKind : std::uint8_t {
    Modular,
    PureNeutrosophic,
    MixedNeutrosophic,
    RationalDemo
  };

  //! A value of some carrier.
  //!
  //! The two coefficients are read per carrier kind:
  //!   Modular            a            (b == 0)
  //!   PureNeutrosophic   bI           (a == 0)
  //!   MixedNeutrosophic  a + bI
  //!   RationalDemo       a / b        (b > 0, reduced)
  //! An interval carrier stores the upper endpoint v of [0, v] the same way.
  struct Value {
    std::int64_t a = 0;
    std::int64_t b = 0;

    static constexpr Value residue(std::int64_t r) {
      return Value{r, 0};
    }
    static constexpr Value indeterminate(std::int64_t coeff) {
      return Value{0, coeff};
    }
    static constexpr Value mixed(std::int64_t re, std::int64_t coeff) {
      return Value{re, coeff};
    }

    friend constexpr bool operator==(Value const&, Value const&) = default;
    friend constexpr auto operator<=>(Value const&, Value const&) = default;
  };

  class Carrier {
   public:
    static Carrier modular(std::uint32_t n);
    static Carrier pure_neutrosophic(std::uint32_t n);
    static Carrier mixed_neutrosophic(std::uint32_t n);
    static Carrier rational();
    //! Throws DomainError for nested intervals or intervals over rationals.
    static Carrier interval_of(Carrier const& inner);

    CarrierKind kind() const noexcept {
      return kind_;
    }
    bool is_interval() const noexcept {
      return interval_;
    }
    //! Modulus n (0 for the rational carrier).
    std::uint32_t modulus() const noexcept {
      return n_;
    }
    //! The carrier with the interval wrapper removed.
    Carrier inner() const noexcept;

    bool is_finite() const noexcept {
      return kind_ != CarrierKind::RationalDemo;
    }
    bool is_neutrosophic() const noexcept {
      return kind_ == CarrierKind::PureNeutrosophic
             || kind_ == CarrierKind::MixedNeutrosophic;
    }
    //! Number of values; throws DomainError for the rational carrier.
    std::uint64_t size() const;
    //! Number of integer coefficients in a raw tuple for reduce().
    std::size_t arity() const noexcept;

    //! Canonical name in the CLI grammar: zn:7, zni:4, nzn:3, o(zn:8), q.
    std::string name() const;

    friend bool operator==(Carrier const&, Carrier const&) = default;

   private:
    Carrier(CarrierKind k, std::uint32_t n, bool interval)
        : kind_(k), n_(n), interval_(interval) {}

    CarrierKind   kind_;
    std::uint32_t n_;
    bool          interval_;
  };

  //! Parses the carrier grammar: zn:N | zni:N | nzn:N | o(<one of those>) | q.
  Carrier parse_carrier(std::string_view text);

  struct CoprimalityClass {
    std::uint64_t gcd_content = 0;
    bool          is_unit     = false;
    //! "I" when both inputs are pure neutrosophic, otherwise "1".
    std::string label;
  };

  //! Canonical value from raw integer coefficients (see Carrier::arity()).
  Value reduce(Carrier const& c, std::span<std::int64_t const> raw);
  Value reduce(Carrier const& c, std::initializer_list<std::int64_t> raw);

  bool belongs(Carrier const& c, Value const& v) noexcept;
  //! Zero of the carrier: 0, 0I, 0+0I or 0/1.
  bool is_zero(Carrier const& c, Value const& v) noexcept;
  //! True when the value carries a nonzero coefficient of I.
  bool has_indeterminate(Carrier const& c, Value const& v) noexcept;

  Value zero(Carrier const& c);
  //! Multiplicative unit: 1 for Z_n, N(Z_n) and Q; I for Z_nI.
  Value unit(Carrier const& c);

  Value add(Carrier const& c, Value const& x, Value const& y);
  Value mul(Carrier const& c, Value const& x, Value const& y);

  //! All values in lexicographic order of canonical coefficients.
  std::vector<Value> enumerate(Carrier const& c);
  //! Position of v in enumerate(c).
  std::uint64_t code_of(Carrier const& c, Value const& v);
  Value         value_at(Carrier const& c, std::uint64_t code);

  CoprimalityClass coprimality_class(Carrier const& c,
                                     Value const&   x,
                                     Value const&   y);

  //! Text forms: a, bI, a+bI, [0,x], p/q.
  std::string format_value(Carrier const& c, Value const& v);
  Value       parse_value(Carrier const& c, std::string_view text);

  //! Star parameter: either a plain residue acting on every carrier, or a
  //! carrier-native value (tI, a+bI, p/q).
  struct Param {
    Value value;
    bool  native = false;

    friend bool operator==(Param const&, Param const&) = default;
  };

  Param plain_param(std::int64_t t);
  //! Reads T or TI (or a+bI, p/q) and records whether it was native.
  Param parse_param(Carrier const& c, std::string_view text);
  std::string format_param(Carrier const& c, Param const& p);
  //! The carrier value the parameter multiplies by; throws DomainError if
  //! the parameter lies outside the parameter domain.
  Value embed(Carrier const& c, Param const& p);
  bool  is_zero(Carrier const& c, Param const& p);

  //! c * a with c embedded into the carrier.
  Value scale(Carrier const& c, Param const& coeff, Value const& a);

}  // namespace ggl

#endif  // GGL_CARRIER_HPP_
