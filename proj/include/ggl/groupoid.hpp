#ifndef GGL_GROUPOID_HPP_
#define GGL_GROUPOID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ggl/carrier.hpp"
#include "ggl/shape.hpp"

namespace ggl {

  //! Parameter-pair taxonomy: one = distinct primes with unit gcd, two = unit
  //! gcd otherwise, three = non-unit gcd, four = t == u, five = one zero.
  enum class Level : std::uint8_t { One = 1, Two, Three, Four, Five };

  std::string level_name(Level l);
  Level       parse_level(std::string_view text);

  struct GroupoidSpec {
    Carrier              carrier = Carrier::modular(2);
    Shape                shape   = Shape::scalar();
    Param                t;
    Param                u;
    std::optional<Level> level;
  };

  //! Level implied by (t, u); throws DomainError for (0, 0).
  Level classify_level(Carrier const& c, Param const& t, Param const& u);

  //! Convenience: Z_n-style spec from plain residues.
  GroupoidSpec make_spec(Carrier const& c, Shape const& s, std::int64_t t, std::int64_t u);

  class Groupoid {
   public:
    //! Validates the spec: (t, u) != (0, 0), parameters inside the
    //! parameter domain, a pinned level must match classify_level().
    static Groupoid build(GroupoidSpec const& spec);
    static Groupoid build(Carrier const& c, Shape const& s, std::int64_t t, std::int64_t u);

    //! table[i][j] is the index of label i * label j. Throws ShapeError for
    //! a non-square table and DomainError naming the first cell that does
    //! not index a label.
    static Groupoid from_table(std::vector<std::string>                labels,
                               std::vector<std::vector<std::uint64_t>> table);

    bool                has_spec() const noexcept;
    GroupoidSpec const& spec() const;

    //! Element count, or nullopt for the rational carrier. Saturates at
    //! UINT64_MAX for huge spaces.
    std::optional<std::uint64_t> order() const noexcept;
    //! True when elements can be addressed by index.
    bool enumerable() const noexcept;
    //! Order of an enumerable groupoid. Throws DomainError for the rational
    //! carrier and BudgetExceeded past the element cap.
    std::uint64_t size() const;

    std::uint64_t star(std::uint64_t i, std::uint64_t j) const;
    std::string   label(std::uint64_t i) const;
    std::vector<std::string> labels() const;

    Element       element(std::uint64_t i) const;
    std::uint64_t index_of(Element const& x) const;
    Element       star(Element const& x, Element const& y) const;
    Element       random_element(std::mt19937_64& rng) const;
    std::string   format(Element const& x) const;

    //! Index of the all-zero element for spec-built groupoids.
    std::optional<std::uint64_t> zero_index() const noexcept;
    //! Nonzero element whose entries have no real part (bI entries only).
    bool is_pure_indeterminate(std::uint64_t i) const;
    //! Element with some entry carrying a nonzero coefficient of I.
    bool has_indeterminate(std::uint64_t i) const;

    //! "zn:7 scalar (3,4)" or "table(7)".
    std::string describe() const;

   private:
    struct Impl;
    explicit Groupoid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
  };

  struct CayleyTable {
    std::vector<std::string>                labels;
    std::vector<std::vector<std::uint64_t>> cells;

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
  };

  inline constexpr std::uint64_t kDefaultTableCap = 256;

  //! Throws BudgetExceeded when the order exceeds cap.
  CayleyTable cayley_table(Groupoid const& g, std::uint64_t cap = kDefaultTableCap);

  //! Header row "*" then labels; each row starts with its label and lists
  //! result labels, tab separated.
  std::string to_tsv(CayleyTable const& t);
  CayleyTable table_from_tsv(std::string_view text);
  //! {"labels": [...], "table": [[...]]} with integer cells.
  std::string to_json_text(CayleyTable const& t);
  CayleyTable table_from_json_text(std::string_view text);

  Groupoid from_table(CayleyTable const& t);

}  // namespace ggl

#endif  // GGL_GROUPOID_HPP_
