#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

/// Finite abelian group presented as Z_{d_1} x ... x Z_{d_k}. Elements are
/// coordinate vectors; the canonical element order is lexicographic on
/// coordinates, which coincides with ascending mixed-radix index (first
/// coordinate most significant).
struct AdditiveGroup {
  std::vector<std::uint32_t> orders;
  std::vector<std::uint64_t> stride;
  std::uint64_t size = 1;
  std::uint64_t exponent = 1;

  static AdditiveGroup make(std::vector<std::uint32_t> orders) {
    AdditiveGroup g;
    g.orders = std::move(orders);
    g.stride.assign(g.orders.size(), 1);
    for (std::uint32_t d : g.orders) {
      if (d < 2) throw RingError("additive orders must be >= 2");
      if (g.size > (std::uint64_t{1} << 62) / d)
        throw RingError("additive group size overflows 64-bit arithmetic");
      g.size *= d;
      g.exponent = std::lcm<std::uint64_t>(g.exponent, d);
    }
    for (std::size_t i = g.orders.size(); i-- > 1;)
      g.stride[i - 1] = g.stride[i] * g.orders[i];
    return g;
  }

  std::size_t rank() const { return orders.size(); }

  bool valid_coords(std::span<const std::uint32_t> c) const {
    if (c.size() != orders.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] >= orders[i]) return false;
    return true;
  }

  std::uint64_t encode(std::span<const std::uint32_t> c) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) idx += stride[i] * c[i];
    return idx;
  }

  void decode(std::uint64_t idx, std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      out[i] = static_cast<std::uint32_t>(idx / stride[i]);
      idx %= stride[i];
    }
  }

  void add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
           std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::uint32_t s = a[i] + b[i];
      out[i] = s >= orders[i] ? s - orders[i] : s;
    }
  }

  void neg(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < orders.size(); ++i)
      out[i] = a[i] == 0 ? 0 : orders[i] - a[i];
  }

  void sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
           std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::uint32_t bv = b[i] == 0 ? 0 : orders[i] - b[i];
      std::uint32_t s = a[i] + bv;
      out[i] = s >= orders[i] ? s - orders[i] : s;
    }
  }

  /// k*x by repeated addition, any integer k (negative allowed).
  void scale(long long k, std::span<const std::uint32_t> x,
             std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const long long d = orders[i];
      long long kk = k % d;
      if (kk < 0) kk += d;
      out[i] = static_cast<std::uint32_t>(
          (static_cast<unsigned long long>(kk) * x[i]) % orders[i]);
    }
  }

  /// out += k*x (componentwise, k already reduced to [0, d_i) not required).
  void add_scaled(std::span<std::uint32_t> out, std::uint64_t k,
                  std::span<const std::uint32_t> x) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const std::uint64_t d = orders[i];
      out[i] = static_cast<std::uint32_t>((out[i] + (k % d) * x[i]) % d);
    }
  }

  bool is_zero(std::span<const std::uint32_t> c) const {
    for (std::uint32_t v : c)
      if (v != 0) return false;
    return true;
  }

  /// Odometer step in canonical order; returns false after the last element.
  bool next(std::span<std::uint32_t> c) const {
    for (std::size_t i = orders.size(); i-- > 0;) {
      if (++c[i] < orders[i]) return true;
      c[i] = 0;
    }
    return false;
  }
};

}  // namespace ringlab
