#ifndef GGL_SUBSET_HPP_
#define GGL_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ggl {

  //! Membership set over the element indices of one groupoid.
  class SubsetHandle {
   public:
    SubsetHandle() = default;
    explicit SubsetHandle(std::uint64_t order)
        : order_(order), words_((order + 63) / 64, 0) {}
    SubsetHandle(std::uint64_t order, std::initializer_list<std::uint64_t> members)
        : SubsetHandle(order) {
      for (auto m : members) {
        insert(m);
      }
    }
    SubsetHandle(std::uint64_t order, std::span<std::uint64_t const> members)
        : SubsetHandle(order) {
      for (auto m : members) {
        insert(m);
      }
    }

    //! Subset of an order <= 64 groupoid from a bitmask.
    static SubsetHandle from_mask(std::uint64_t order, std::uint64_t mask);
    static SubsetHandle full(std::uint64_t order);

    std::uint64_t order() const noexcept {
      return order_;
    }
    std::uint64_t size() const noexcept {
      return count_;
    }
    bool empty() const noexcept {
      return count_ == 0;
    }
    bool is_full() const noexcept {
      return count_ == order_;
    }

    bool contains(std::uint64_t i) const noexcept {
      return i < order_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
    }
    //! Throws DomainError for an index outside the groupoid.
    void insert(std::uint64_t i);

    std::vector<std::uint64_t> members() const;
    //! Low 64 bits of the membership mask.
    std::uint64_t mask() const noexcept {
      return words_.empty() ? 0 : words_[0];
    }
    bool intersects(SubsetHandle const& other) const noexcept;

    friend bool operator==(SubsetHandle const& a, SubsetHandle const& b) noexcept {
      return a.order_ == b.order_ && a.words_ == b.words_;
    }

    //! Canonical order: cardinality, then numeric value of the bitmask.
    friend bool operator<(SubsetHandle const& a, SubsetHandle const& b) noexcept;

   private:
    std::uint64_t              order_ = 0;
    std::uint64_t              count_ = 0;
    std::vector<std::uint64_t> words_;
  };

}  // namespace ggl

#endif  // GGL_SUBSET_HPP_
