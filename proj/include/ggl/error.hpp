#ifndef GGL_ERROR_HPP_
#define GGL_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ggl {

  /// Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Coefficient arity or shape of an argument does not match.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  /// Value outside the domain of an operation (zero gcd input, foreign
  /// carrier, illegal parameter, enumeration of an infinite carrier, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  /// Malformed textual input (carrier, shape, pair, value grammar).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  /// A requested computation exceeds a configured size or evaluation cap.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t limit)
        : Error(what + " (required " + std::to_string(required) + ", limit "
                + std::to_string(limit) + ")"),
          required_(required),
          limit_(limit) {}

    std::uint64_t required() const noexcept {
      return required_;
    }
    std::uint64_t limit() const noexcept {
      return limit_;
    }

   private:
    std::uint64_t required_;
    std::uint64_t limit_;
  };

}  // namespace ggl

#endif  // GGL_ERROR_HPP_
