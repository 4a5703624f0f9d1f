#ifndef GGL_TESTS_ORACLE_HPP_
#define GGL_TESTS_ORACLE_HPP_

// Naive reference implementations on plain integers. They share no code
// with the library and exist only to cross-check it.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

  using Op = std::function<int(int, int)>;

  inline int star(int n, int t, int u, int x, int y) {
    return ((t * x + u * y) % n + n) % n;
  }

  inline Op scalar_op(int n, int t, int u) {
    return [=](int x, int y) { return star(n, t, u, x, y); };
  }

  // Mixed neutrosophic a + bI encoded as a * n + b.
  inline int nmul(int n, int x, int y) {
    int a = x / n, b = x % n, c = y / n, d = y % n;
    return (a * c % n) * n + (a * d + b * c + b * d) % n;
  }
  inline int nadd(int n, int x, int y) {
    return ((x / n + y / n) % n) * n + (x % n + y % n) % n;
  }

  inline bool associative(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        for (int z = 0; z < order; ++z)
          if (f(f(x, y), z) != f(x, f(y, z))) return false;
    return true;
  }

  inline bool idempotent(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      if (f(x, x) != x) return false;
    return true;
  }

  inline bool commutative(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (f(x, y) != f(y, x)) return false;
    return true;
  }

  inline bool p_identity(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (f(f(x, y), x) != f(x, f(y, x))) return false;
    return true;
  }

  inline bool left_alternative(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (f(f(x, x), y) != f(x, f(x, y))) return false;
    return true;
  }

  inline bool right_alternative(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (f(f(x, y), y) != f(x, f(y, y))) return false;
    return true;
  }

  inline bool moufang(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        for (int z = 0; z < order; ++z)
          if (f(f(x, y), f(z, x)) != f(f(x, f(y, z)), x)) return false;
    return true;
  }

  inline bool bol(int order, Op const& f) {
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        for (int z = 0; z < order; ++z)
          if (f(f(f(x, y), z), y) != f(x, f(f(y, z), y))) return false;
    return true;
  }

  // Left ideals as bitmasks over a scalar groupoid: x * a in P for all x.
  inline std::set<std::uint32_t> left_ideals(int order, Op const& f) {
    std::set<std::uint32_t> out;
    for (std::uint32_t m = 1; m + 1 < (1u << order); ++m) {
      bool ok = true;
      for (int a = 0; a < order && ok; ++a)
        if (m >> a & 1)
          for (int x = 0; x < order && ok; ++x)
            if (!(m >> f(x, a) & 1)) ok = false;
      if (ok) out.insert(m);
    }
    return out;
  }

  inline std::set<std::uint32_t> right_ideals(int order, Op const& f) {
    return left_ideals(order, [&](int x, int y) { return f(y, x); });
  }

  inline bool closed(std::uint32_t m, int order, Op const& f) {
    for (int a = 0; a < order; ++a)
      if (m >> a & 1)
        for (int b = 0; b < order; ++b)
          if (m >> b & 1 && !(m >> f(a, b) & 1)) return false;
    return true;
  }

  inline std::set<int> image(std::uint32_t m, int order, std::function<int(int)> const& g) {
    std::set<int> s;
    for (int v = 0; v < order; ++v)
      if (m >> v & 1) s.insert(g(v));
    return s;
  }

  // aV = Va, (Vx)y = V(xy), y(xV) = (yx)V for a, x, y in V.
  inline bool normal(std::uint32_t m, int order, Op const& f) {
    if (m == 0 || !closed(m, order, f)) return false;
    for (int a = 0; a < order; ++a) {
      if (!(m >> a & 1)) continue;
      if (image(m, order, [&](int v) { return f(a, v); }) != image(m, order, [&](int v) { return f(v, a); }))
        return false;
      for (int y = 0; y < order; ++y) {
        if (!(m >> y & 1)) continue;
        int x = a;
        if (image(m, order, [&](int v) { return f(f(v, x), y); }) != image(m, order, [&](int v) { return f(v, f(x, y)); }))
          return false;
        if (image(m, order, [&](int v) { return f(y, f(x, v)); }) != image(m, order, [&](int v) { return f(f(y, x), v); }))
          return false;
      }
    }
    return true;
  }

  inline bool simple(int order, Op const& f) {
    for (std::uint32_t m = 1; m + 1 < (1u << order); ++m)
      if (__builtin_popcount(m) >= 2 && normal(m, order, f)) return false;
    return true;
  }

  inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

}  // namespace oracle

#endif  // GGL_TESTS_ORACLE_HPP_
