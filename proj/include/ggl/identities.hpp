#ifndef GGL_IDENTITIES_HPP_
#define GGL_IDENTITIES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ggl/groupoid.hpp"

namespace ggl {

  enum class IdentityId : std::uint8_t {
    Associative,
    Commutative,
    Idempotent,
    LeftAlternative,
    RightAlternative,
    Moufang,
    Bol,
    PIdentity
  };

  inline constexpr std::array<IdentityId, 8> kAllIdentities = {
      IdentityId::Associative,     IdentityId::Commutative,
      IdentityId::Idempotent,      IdentityId::LeftAlternative,
      IdentityId::RightAlternative, IdentityId::Moufang,
      IdentityId::Bol,             IdentityId::PIdentity};

  //! Number of free variables: 1 for idempotent, 2 for commutative, the
  //! alternatives and P, 3 for associative, Moufang and Bol.
  std::size_t arity(IdentityId id) noexcept;
  std::string identity_name(IdentityId id);
  //! The two-sided equation, e.g. "((xy)z)y = x((yz)y)".
  std::string identity_equation(IdentityId id);
  IdentityId  parse_identity(std::string_view text);
  //! Like parse_identity() but "alternative" expands to both alternatives.
  std::vector<IdentityId> parse_identity_set(std::string_view text);

  //! Both sides of the identity at the given variable assignment.
  std::pair<std::uint64_t, std::uint64_t> identity_sides(Groupoid const&                g,
                                                         IdentityId                     id,
                                                         std::span<std::uint64_t const> vars);
  std::pair<Element, Element> identity_sides(Groupoid const&          g,
                                             IdentityId               id,
                                             std::span<Element const> vars);

  enum class Method : std::uint8_t { Exhaustive, Lifted, Sampled };
  enum class Status : std::uint8_t { Holds, Fails, SampledNoCounterexample };

  std::string method_name(Method m);
  std::string status_name(Status s);

  struct IdentityVerdict {
    IdentityId identity = IdentityId::Associative;
    Status     status   = Status::Holds;
    Method     method   = Method::Exhaustive;
    //! Witness variables (x, y, z order), as elements for spec-built
    //! groupoids and as indices whenever the groupoid is enumerable.
    std::vector<Element>       witness;
    std::vector<std::uint64_t> witness_indices;
    std::vector<std::string>   witness_labels;
    std::uint64_t              trials = 0;
    std::uint64_t              seed   = 0;

    bool fails() const noexcept {
      return status == Status::Fails;
    }
  };

  struct CheckMode {
    enum class Kind : std::uint8_t { Exhaustive, Sampled, Auto };
    Kind          kind   = Kind::Auto;
    std::uint64_t trials = 10'000;
    std::uint64_t seed   = 0;

    static CheckMode exhaustive() {
      return {Kind::Exhaustive, 0, 0};
    }
    static CheckMode sampled(std::uint64_t trials, std::uint64_t seed) {
      return {Kind::Sampled, trials, seed};
    }
    static CheckMode automatic(std::uint64_t seed = 0) {
      return {Kind::Auto, 10'000, seed};
    }
  };

  //! Parses exhaustive | auto | sampled:N:SEED.
  CheckMode parse_mode(std::string_view text);

  inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

  //! GGL_BUDGET if set to a positive integer, else kDefaultBudget.
  std::uint64_t evaluation_budget();

  //! Exhaustive throws BudgetExceeded when order^arity exceeds budget.
  //! Auto: Lifted for non-scalar liftable shapes, else Exhaustive within
  //! budget, else Sampled. Exhaustive witnesses are the first failing tuple
  //! with x varying fastest.
  IdentityVerdict check_identity(Groupoid const& g,
                                 IdentityId      id,
                                 CheckMode       mode   = CheckMode::automatic(),
                                 std::uint64_t   budget = evaluation_budget());

  //! True when a Fails witness really violates the identity.
  bool witness_violates(Groupoid const& g, IdentityVerdict const& v);

  //! Exhaustive check over tuples drawn from members only.
  bool holds_on_subset(Groupoid const&                g,
                       IdentityId                     id,
                       std::span<std::uint64_t const> members);

  enum class ClosedForm : std::uint8_t {
    IdempotentIff,   //!< t + u = 1
    SemigroupIff,    //!< t^2 = t and u^2 = u
    AlternativeIff,  //!< t = u and t^2 = t
    TypeIIIPAltIff,  //!< one parameter zero and the other squares to itself
    EqualPairP       //!< t = u (implies the P-identity)
  };

  std::string closed_form_name(ClosedForm p);
  bool closed_form(ClosedForm p, std::uint64_t n, std::uint64_t t, std::uint64_t u);

  struct MethodResult {
    std::string method;
    bool        holds = false;
    //! True when only "predicate implies holds" is claimed.
    bool implication = false;
  };

  struct ConsistencyReport {
    IdentityId                identity = IdentityId::Associative;
    std::vector<MethodResult> results;
    bool                      agree = true;
    std::string               detail;
  };

  //! Runs exhaustive, lifted and every applicable closed form; never throws
  //! for disagreement.
  ConsistencyReport cross_validate(Groupoid const& g, IdentityId id);

  nlohmann::json to_json(IdentityVerdict const& v);
  nlohmann::json to_json(ConsistencyReport const& r);

}  // namespace ggl

#endif  // GGL_IDENTITIES_HPP_
