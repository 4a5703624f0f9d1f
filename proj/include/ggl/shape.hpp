#ifndef GGL_SHAPE_HPP_
#define GGL_SHAPE_HPP_

// Composite elements over a carrier (scalars, r x c matrices, truncated
// polynomials) and the three star products defined on them.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ggl/carrier.hpp"

namespace ggl {

  enum class ShapeKind : std::uint8_t { Scalar, Matrix, Poly };
  enum class ProductKind : std::uint8_t { Entrywise, Shuffle, Convolution };

  struct Shape {
    ShapeKind     kind    = ShapeKind::Scalar;
    std::uint32_t rows    = 1;
    std::uint32_t cols    = 1;
    std::uint32_t max_deg = 0;
    ProductKind   product = ProductKind::Entrywise;

    static Shape scalar();
    static Shape matrix(std::uint32_t rows, std::uint32_t cols);
    static Shape poly(std::uint32_t max_deg,
                      ProductKind   product = ProductKind::Entrywise);

    std::size_t entry_count() const noexcept;
    //! Text form in the CLI grammar: scalar, mat:2x3, poly:4:shuffle.
    std::string name() const;

    friend bool operator==(Shape const&, Shape const&) = default;
  };

  Shape parse_shape(std::string_view text);

  struct Element {
    std::vector<Value> entries;

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const&, Element const&) = default;
  };

  //! Throws ShapeError when x does not conform to shape or carrier.
  void check_element(Carrier const& c, Shape const& s, Element const& x);

  //! x * y with t, u already embedded into the carrier (see embed()).
  Element star(Carrier const& c,
               Shape const&   s,
               Value const&   t,
               Value const&   u,
               Element const& x,
               Element const& y);

  enum class Liftability : std::uint8_t { Liftable, NotLiftable };

  //! Liftable iff the product acts on each entry independently.
  Liftability scalar_projection(Shape const& s) noexcept;

  inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

  //! Element enumeration in entry-lexicographic order, first entry most
  //! significant, each entry in carrier enumeration order.
  class ElementSpace {
   public:
    ElementSpace(Carrier c, Shape s, std::uint64_t cap = kDefaultElementCap);

    //! size(carrier)^entries, saturated at UINT64_MAX.
    std::uint64_t count() const noexcept {
      return count_;
    }
    bool too_large() const noexcept {
      return too_large_;
    }

    //! Throws BudgetExceeded when the space is too large.
    Element       at(std::uint64_t index) const;
    std::uint64_t index_of(Element const& x) const;

    Carrier const& carrier() const noexcept {
      return carrier_;
    }
    Shape const& shape() const noexcept {
      return shape_;
    }

   private:
    void require_enumerable() const;

    Carrier       carrier_;
    Shape         shape_;
    std::uint64_t base_;
    std::uint64_t count_;
    std::uint64_t cap_;
    bool          too_large_;
  };

  //! Scalars print as the carrier value, matrices as [[a,b];[c,d]],
  //! polynomials as poly[c0,c1,...].
  std::string format_element(Carrier const& c, Shape const& s, Element const& x);
  Element parse_element(Carrier const& c, Shape const& s, std::string_view text);

  //! Constant element with every entry equal to v.
  Element constant_element(Shape const& s, Value const& v);

}  // namespace ggl

#endif  // GGL_SHAPE_HPP_
