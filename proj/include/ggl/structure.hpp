#ifndef GGL_STRUCTURE_HPP_
#define GGL_STRUCTURE_HPP_

// Substructures found by explicit enumeration: subgroupoids, ideals,
// normal subgroupoids, simplicity, Smarandache witnesses, conjugacy and
// homomorphisms.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggl/groupoid.hpp"
#include "ggl/identities.hpp"
#include "ggl/subset.hpp"

namespace ggl {

  inline constexpr std::uint64_t kPowerSetLimit      = 20;
  inline constexpr std::uint64_t kDefaultClosureLimit = 4096;

  enum class SubgroupoidStrategy : std::uint8_t { PowerSet, GeneratedClosure };

  struct SubgroupoidOptions {
    std::uint64_t       max_order = kDefaultClosureLimit;
    SubgroupoidStrategy strategy  = SubgroupoidStrategy::PowerSet;
  };

  bool         is_closed(Groupoid const& g, SubsetHandle const& s);
  SubsetHandle closure(Groupoid const& g, SubsetHandle const& s);

  //! Nonempty closed proper subsets in canonical order. PowerSet is
  //! complete and needs order <= 20; GeneratedClosure returns the closures
  //! of all subsets of size <= 2. Throws BudgetExceeded past either limit.
  std::vector<SubsetHandle> enumerate_subgroupoids(Groupoid const&           g,
                                                   SubgroupoidOptions const& opts = {});

  struct SubsetClassification {
    bool closed             = false;
    bool left_ideal         = false;
    bool right_ideal        = false;
    bool ideal              = false;
    bool normal_subgroupoid = false;
    bool semigroup          = false;
    bool pure_neutrosophic  = false;
    bool pseudo             = false;
  };

  bool is_left_ideal(Groupoid const& g, SubsetHandle const& s);
  bool is_right_ideal(Groupoid const& g, SubsetHandle const& s);
  //! Closed, aV = Va, (Vx)y = V(xy) and y(xV) = (yx)V for a, x, y in V.
  bool is_normal_subgroupoid(Groupoid const& g, SubsetHandle const& s);
  bool is_semigroup(Groupoid const& g, SubsetHandle const& s);

  SubsetClassification classify_subset(Groupoid const& g, SubsetHandle const& s);

  struct IdealSets {
    std::vector<SubsetHandle> left;
    std::vector<SubsetHandle> right;
    std::vector<SubsetHandle> two_sided;
  };

  //! Every nonempty proper one- and two-sided ideal; order <= 20.
  IdealSets enumerate_ideals(Groupoid const& g);

  struct SimplicityVerdict {
    bool simple = true;
    //! First normal subgroupoid of size >= 2 in canonical order.
    std::optional<SubsetHandle> witness;
    //! Every proper normal subgroupoid of size >= 2 that was found.
    std::vector<SubsetHandle> normal;
    //! False when the generated-closure fallback was used.
    bool complete = true;
  };

  SimplicityVerdict is_simple(Groupoid const& g, std::uint64_t max_order = kDefaultClosureLimit);

  //! xG = Gx, G(xy) = (Gx)y and y(xG) = (yx)G for all x, y.
  bool is_normal_groupoid(Groupoid const& g);

  enum class SmarandacheStatus : std::uint8_t {
    StrongHolds,
    HoldsOnSemigroupWitness,
    SGroupoidOnly,
    NotSmarandache
  };

  std::string smarandache_status_name(SmarandacheStatus s);

  struct SmarandacheVerdict {
    SmarandacheStatus           status = SmarandacheStatus::NotSmarandache;
    std::optional<SubsetHandle> witness;
    bool                        complete = true;
  };

  //! Proper closed associative subsets in canonical order. The singleton of
  //! the zero element is skipped for spec-built groupoids.
  std::vector<SubsetHandle> semigroup_subsets(Groupoid const& g,
                                              std::uint64_t   max_order = kDefaultClosureLimit,
                                              bool*           complete  = nullptr);

  //! ids empty: S-groupoid detection. Otherwise the conjunction of ids is
  //! checked on G and on semigroup witnesses of size >= 2.
  SmarandacheVerdict smarandache_identity(Groupoid const&           g,
                                          std::span<IdentityId const> ids,
                                          std::uint64_t max_order = kDefaultClosureLimit);
  SmarandacheVerdict smarandache_identity(Groupoid const& g,
                                          std::optional<IdentityId> id,
                                          std::uint64_t max_order = kDefaultClosureLimit);

  enum class ConjugateSide : std::uint8_t { Left, Right };

  //! Conjugate needs h and k disjoint; an overlapping translate keeps its
  //! witness with disjoint = false.
  struct ConjugacyResult {
    bool                         conjugate = false;
    std::optional<std::uint64_t> witness;
    //! Left: H = xK, Right: H = Kx.
    ConjugateSide side     = ConjugateSide::Left;
    bool          disjoint = true;
  };

  ConjugacyResult are_conjugate(Groupoid const& g, SubsetHandle const& h, SubsetHandle const& k);

  struct HomomorphismResult {
    bool                                                   valid = true;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;
    //! "star" or "indeterminate".
    std::string reason;
  };

  //! map[i] is the image of element i of g in h. Throws DomainError for a
  //! partial map.
  HomomorphismResult check_homomorphism(Groupoid const&                g,
                                        Groupoid const&                h,
                                        std::span<std::uint64_t const> map);

  nlohmann::json subset_json(Groupoid const& g, SubsetHandle const& s);
  nlohmann::json to_json(Groupoid const& g, SmarandacheVerdict const& v);

  //! {order, subgroupoids, ideals{left,right,two_sided}, normal, simple,
  //!  normal_groupoid, smarandache, complete}
  nlohmann::json structure_report(Groupoid const& g, std::uint64_t max_order = kDefaultClosureLimit);

}  // namespace ggl

#endif  // GGL_STRUCTURE_HPP_
