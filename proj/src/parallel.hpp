#ifndef GGL_SRC_PARALLEL_HPP_
#define GGL_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ggl::detail {

  inline thread_local bool in_worker = false;

  //! GGL_THREADS if set, else the hardware concurrency.
  inline std::size_t worker_count() {
    if (char const* env = std::getenv("GGL_THREADS")) {
      auto v = std::strtoul(env, nullptr, 10);
      if (v > 0) {
        return v;
      }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

  //! Calls fn(lo, hi) over disjoint contiguous ranges covering [0, n).
  //! Nested calls from inside a worker run serially.
  template <typename Fn>
  void parallel_ranges(std::uint64_t n, std::uint64_t min_chunk, Fn&& fn) {
    auto workers = worker_count();
    if (in_worker || workers == 1 || n < 2 * min_chunk) {
      if (n > 0) {
        fn(std::uint64_t{0}, n);
      }
      return;
    }
    workers = std::min<std::uint64_t>(workers, n / min_chunk);
    std::uint64_t const      chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::exception_ptr       error;
    std::mutex               error_mutex;
    for (std::uint64_t lo = 0; lo < n; lo += chunk) {
      auto hi = std::min(n, lo + chunk);
      pool.emplace_back([&, lo, hi] {
        in_worker = true;
        try {
          fn(lo, hi);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace ggl::detail

#endif  // GGL_SRC_PARALLEL_HPP_
