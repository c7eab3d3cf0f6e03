#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace pinning {

inline constexpr int kMaxDim = 4;

// A lattice point; only the first `dim` coordinates of the enclosing context
// are meaningful.
using Point = std::array<std::int64_t, kMaxDim>;

// Axis-aligned half-open box [lo, hi) in Z^dim.
struct Box {
  int dim = 0;
  std::array<std::int64_t, kMaxDim> lo{};
  std::array<std::int64_t, kMaxDim> hi{};

  static Box make(std::span<const std::int64_t> lo_in,
                  std::span<const std::int64_t> hi_in) {
    if (lo_in.size() != hi_in.size() || lo_in.empty() ||
        lo_in.size() > static_cast<std::size_t>(kMaxDim)) {
      throw std::invalid_argument("Box::make: bad corner dimensions");
    }
    Box b;
    b.dim = static_cast<int>(lo_in.size());
    for (int k = 0; k < b.dim; ++k) {
      b.lo[k] = lo_in[k];
      b.hi[k] = hi_in[k];
    }
    return b;
  }

  static Box interval(std::int64_t lo0, std::int64_t hi0) {
    const std::int64_t l[] = {lo0};
    const std::int64_t h[] = {hi0};
    return make(l, h);
  }

  static Box rect(std::int64_t lo0, std::int64_t hi0, std::int64_t lo1,
                  std::int64_t hi1) {
    const std::int64_t l[] = {lo0, lo1};
    const std::int64_t h[] = {hi0, hi1};
    return make(l, h);
  }

  static Box cuboid(std::int64_t lo0, std::int64_t hi0, std::int64_t lo1,
                    std::int64_t hi1, std::int64_t lo2, std::int64_t hi2) {
    const std::int64_t l[] = {lo0, lo1, lo2};
    const std::int64_t h[] = {hi0, hi1, hi2};
    return make(l, h);
  }

  // Cube [0, side)^n.
  static Box cube(int n, std::int64_t side) {
    Box b;
    b.dim = n;
    for (int k = 0; k < n; ++k) {
      b.lo[k] = 0;
      b.hi[k] = side;
    }
    return b;
  }

  std::int64_t extent(int k) const { return hi[k] - lo[k]; }

  bool empty() const {
    for (int k = 0; k < dim; ++k) {
      if (hi[k] <= lo[k]) return true;
    }
    return dim == 0;
  }

  std::int64_t volume() const {
    if (empty()) return 0;
    std::int64_t v = 1;
    for (int k = 0; k < dim; ++k) v *= extent(k);
    return v;
  }

  bool contains(std::span<const std::int64_t> pt) const {
    for (int k = 0; k < dim; ++k) {
      if (pt[k] < lo[k] || pt[k] >= hi[k]) return false;
    }
    return true;
  }

  // Row-major linear index of an interior point.
  std::int64_t index(std::span<const std::int64_t> pt) const {
    std::int64_t idx = 0;
    for (int k = 0; k < dim; ++k) {
      idx = idx * extent(k) + (pt[k] - lo[k]);
    }
    return idx;
  }

  Box intersect(const Box& other) const {
    if (dim != other.dim) throw std::invalid_argument("Box::intersect: dim mismatch");
    Box r;
    r.dim = dim;
    for (int k = 0; k < dim; ++k) {
      r.lo[k] = std::max(lo[k], other.lo[k]);
      r.hi[k] = std::min(hi[k], other.hi[k]);
      if (r.hi[k] < r.lo[k]) r.hi[k] = r.lo[k];
    }
    return r;
  }

  Box shifted(std::span<const std::int64_t> v) const {
    Box r = *this;
    for (int k = 0; k < dim; ++k) {
      r.lo[k] += v[k];
      r.hi[k] += v[k];
    }
    return r;
  }

  bool operator==(const Box& o) const {
    if (dim != o.dim) return false;
    for (int k = 0; k < dim; ++k) {
      if (lo[k] != o.lo[k] || hi[k] != o.hi[k]) return false;
    }
    return true;
  }
};

// Visits every point of the box in row-major order.
template <typename Fn>
void for_each_point(const Box& box, Fn&& fn) {
  if (box.empty()) return;
  Point p;
  for (int k = 0; k < box.dim; ++k) p[k] = box.lo[k];
  for (;;) {
    fn(std::span<const std::int64_t>(p.data(), box.dim));
    int k = box.dim - 1;
    for (; k >= 0; --k) {
      if (++p[k] < box.hi[k]) break;
      p[k] = box.lo[k];
    }
    if (k < 0) return;
  }
}

// Integer power with overflow check; exponents here are small by construction.
inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base) {
      throw std::overflow_error("ipow: overflow");
    }
    r *= base;
  }
  return r;
}

}  // namespace pinning
