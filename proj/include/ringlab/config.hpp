#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace ringlab {

namespace detail {

inline std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') return fallback;
  return static_cast<std::uint64_t>(parsed);
}

}  // namespace detail

/// Element-count ceiling for full-space scans (enumerations, exhaustive
/// deciders). Override with RINGLAB_CAP.
inline std::uint64_t exhaustive_cap() {
  static const std::uint64_t cap =
      detail::env_u64("RINGLAB_CAP", std::uint64_t{1} << 20);
  return cap;
}

/// Ceiling on the cardinality of rings that may be *constructed* (structure
/// constants only, no enumeration). Override with RINGLAB_BUILD_CAP.
inline std::uint64_t construction_cap() {
  static const std::uint64_t cap =
      detail::env_u64("RINGLAB_BUILD_CAP", std::uint64_t{1} << 40);
  return cap;
}

/// Rings up to this many elements may memoize their full product table.
inline std::uint64_t product_table_cap() {
  static const std::uint64_t cap =
      detail::env_u64("RINGLAB_MEMO_CAP", std::uint64_t{10000});
  return cap;
}

}  // namespace ringlab
