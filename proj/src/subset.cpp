#include "ggl/subset.hpp"

#include <algorithm>
#include <string>

#include "ggl/error.hpp"

namespace ggl {

  SubsetHandle SubsetHandle::from_mask(std::uint64_t order, std::uint64_t mask) {
    if (order > 64) {
      throw DomainError("bitmask subsets need order <= 64");
    }
    SubsetHandle out(order);
    if (order < 64) {
      mask &= (std::uint64_t{1} << order) - 1;
    }
    if (order > 0) {
      out.words_[0] = mask;
    }
    out.count_ = static_cast<std::uint64_t>(std::popcount(mask));
    return out;
  }

  SubsetHandle SubsetHandle::full(std::uint64_t order) {
    SubsetHandle out(order);
    for (std::uint64_t i = 0; i < order; ++i) {
      out.insert(i);
    }
    return out;
  }

  void SubsetHandle::insert(std::uint64_t i) {
    if (i >= order_) {
      throw DomainError("subset index " + std::to_string(i)
                        + " outside a groupoid of order " + std::to_string(order_));
    }
    auto& w   = words_[i / 64];
    auto  bit = std::uint64_t{1} << (i % 64);
    if ((w & bit) == 0) {
      w |= bit;
      ++count_;
    }
  }

  std::vector<std::uint64_t> SubsetHandle::members() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        auto b = static_cast<std::uint64_t>(std::countr_zero(w));
        out.push_back(k * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

  bool SubsetHandle::intersects(SubsetHandle const& other) const noexcept {
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t k = 0; k < n; ++k) {
      if ((words_[k] & other.words_[k]) != 0) {
        return true;
      }
    }
    return false;
  }

  bool operator<(SubsetHandle const& a, SubsetHandle const& b) noexcept {
    if (a.count_ != b.count_) {
      return a.count_ < b.count_;
    }
    auto n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t k = n; k-- > 0;) {
      auto wa = k < a.words_.size() ? a.words_[k] : 0;
      auto wb = k < b.words_.size() ? b.words_[k] : 0;
      if (wa != wb) {
        return wa < wb;
      }
    }
    return false;
  }

}  // namespace ggl
