#ifndef GGL_THEOREMS_HPP_
#define GGL_THEOREMS_HPP_

// Registry of executable theorem checks, class counting, and the suite
// runner that aggregates per-instance verdicts.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ggl/carrier.hpp"

namespace ggl {

  enum class Tier : std::uint8_t { Asserted, ReportOnly };
  enum class Outcome : std::uint8_t { Pass, Fail, ReportedDisagreement };

  std::string tier_name(Tier t);
  std::string outcome_name(Outcome o);

  //! Modulus range; primes_only keeps prime moduli only.
  struct Range {
    std::uint32_t lo          = 3;
    std::uint32_t hi          = 3;
    bool          primes_only = false;

    //! "n=3..30" or "p=5..19".
    std::string text() const;
    std::vector<std::uint32_t> moduli() const;

    friend bool operator==(Range const&, Range const&) = default;
  };

  //! Parses n=LO..HI or p=LO..HI (primes only).
  Range parse_range(std::string_view text);

  struct InstanceVerdict {
    std::string instance;
    Outcome     outcome = Outcome::Pass;
    std::string details;
  };

  struct SuiteConfig;

  struct TheoremCheck {
    std::string id;
    //! Where the claim comes from, e.g. "Thm 2.1.6".
    std::string source;
    Tier        tier = Tier::Asserted;
    std::string claim;
    Range       default_range;
    std::function<void(Range const&, SuiteConfig const&, std::vector<InstanceVerdict>&)> run;
  };

  std::vector<TheoremCheck> const& registry();
  //! Throws DomainError for an unknown id.
  TheoremCheck const& find_check(std::string_view id);

  struct CheckRequest {
    std::string          id;
    std::optional<Range> range;
  };

  struct SuiteConfig {
    std::vector<CheckRequest> checks;
    std::uint64_t             budget = 0;  //!< 0: evaluation_budget()
    std::uint64_t             seed   = 42;
  };

  //! Every registered check with its default range.
  SuiteConfig default_config(std::uint64_t seed = 42);
  //! {checks: [{id, range?}], budgets?: {evaluations}, seed?}
  SuiteConfig parse_suite_config(std::string_view json_text);

  //! Instances of one check. ReportOnly (or an override to ReportOnly)
  //! turns Fail into ReportedDisagreement.
  std::vector<InstanceVerdict> verify_theorem(std::string_view          id,
                                              std::optional<Range>      range         = std::nullopt,
                                              std::optional<Tier>       tier_override = std::nullopt,
                                              SuiteConfig const&        config        = {});

  struct CheckResult {
    std::string id;
    std::string source;
    std::string claim;
    Tier        tier = Tier::Asserted;
    Range       range;
    Outcome     status        = Outcome::Pass;
    std::uint64_t instances   = 0;
    std::uint64_t passed      = 0;
    std::uint64_t failed      = 0;
    std::uint64_t disagreements = 0;
    //! First non-passing instances (capped).
    std::vector<InstanceVerdict> notable;
    std::string                  error;
    double                       millis = 0;
  };

  inline constexpr std::size_t kNotableCap = 20;

  struct SuiteReport {
    SuiteConfig              config;
    std::vector<CheckResult> results;

    //! False iff some Asserted check has a failing instance.
    bool asserted_ok() const noexcept;
  };

  //! Checks run on a worker pool; results keep config order.
  SuiteReport run_suite(SuiteConfig const& config);

  nlohmann::json to_json(SuiteReport const& r, bool timing = true);

  enum class ClassKind : std::uint8_t { AllPairs, LevelOnePairs, IdempotentPairs };

  std::string class_kind_name(ClassKind k);
  ClassKind   parse_class_kind(std::string_view text);

  struct ClassCountQuery {
    Carrier   carrier = Carrier::modular(2);
    ClassKind kind    = ClassKind::AllPairs;
    //! Count t == u pairs as well.
    bool equal_pairs = false;
  };

  //! Ordered pairs of nonzero carrier values: distinct unless equal_pairs;
  //! LevelOnePairs needs unit coprimality; IdempotentPairs needs
  //! t + u = unit(carrier).
  std::uint64_t count_class(ClassCountQuery const& q);

}  // namespace ggl

#endif  // GGL_THEOREMS_HPP_
