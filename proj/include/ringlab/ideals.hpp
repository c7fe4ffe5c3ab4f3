#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/idempotents.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

namespace detail {

/// Additive closure of a set of members (bitmap in/out). Quadratic in the
/// closure size; callers keep rings tiny.
inline void close_under_addition(const FiniteRing& ring, ElementSubset& s) {
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> a(k), b(k), t(k);
  bool changed = true;
  while (changed) {
    changed = false;
    auto idxs = s.indices();
    for (std::uint64_t ia : idxs) {
      ring.decode(ia, a);
      for (std::uint64_t ib : idxs) {
        ring.decode(ib, b);
        ring.group().add(a, b, t);
        const std::uint64_t it = ring.index_of(t);
        if (!s.test(it)) {
          s.set(it);
          changed = true;
        }
      }
    }
  }
}

}  // namespace detail

/// Join of two right ideals: the additive closure of their union (already
/// absorbing on the right, so no multiplicative closure pass is needed).
inline ElementSubset ideal_join(const ElementSubset& a, const ElementSubset& b) {
  ElementSubset j = a;
  j.unite(b);
  detail::close_under_addition(*a.ring(), j);
  j.set_tag(a.tag() == b.tag() ? a.tag() : IdealTag::None);
  return j;
}

/// All right ideals of a small ring, in canonical order (ascending
/// cardinality, then bitmap order). Every right ideal is a join of the
/// single-element generated ideals of its members, so BFS over joins of the
/// generated ideals reaches the whole lattice.
inline std::vector<ElementSubset> enumerate_right_ideals(
    const FiniteRing& ring, std::uint64_t cap = 256,
    std::uint64_t lattice_cap = 100000) {
  if (ring.size() > cap)
    throw CapExceededError(ring.size(), cap,
                           "right-ideal lattice enumeration exceeds cap");

  std::vector<ElementSubset> found;
  auto push_unique = [&](ElementSubset s) {
    for (const auto& f : found)
      if (f == s) return false;
    if (found.size() + 1 > lattice_cap)
      throw CapExceededError(found.size() + 1, lattice_cap,
                             "right-ideal lattice larger than lattice cap");
    found.push_back(std::move(s));
    return true;
  };

  std::vector<ElementSubset> atoms;
  for (std::uint64_t xi = 0; xi < ring.size(); ++xi) {
    ElementSubset g = generated_right_ideal(ring.element_at(xi));
    bool fresh = true;
    for (const auto& a : atoms)
      if (a == g) {
        fresh = false;
        break;
      }
    if (fresh) atoms.push_back(std::move(g));
  }
  for (const auto& a : atoms) push_unique(a);

  // BFS closure under joins with the atoms.
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& a : atoms) {
      if (a.subset_of(found[head])) continue;
      ElementSubset j = ideal_join(found[head], a);
      j.set_tag(IdealTag::RightIdeal);
      push_unique(std::move(j));
    }
  }

  std::sort(found.begin(), found.end(),
            [](const ElementSubset& x, const ElementSubset& y) {
              const std::uint64_t cx = x.count(), cy = y.count();
              if (cx != cy) return cx < cy;
              return x.bitmap_less(y);
            });
  return found;
}

/// A finite ring satisfies both chain conditions outright; this certificate
/// materializes the fact by exhibiting the full (finite) right-ideal lattice.
struct ArtinianCertificate {
  std::uint64_t element_count = 0;
  std::uint64_t right_ideal_count = 0;
  bool artinian = true;
  std::string justification;
};

inline ArtinianCertificate artinian_certificate(const FiniteRing& ring,
                                                std::uint64_t cap = 256) {
  ArtinianCertificate cert;
  cert.element_count = ring.size();
  cert.right_ideal_count = enumerate_right_ideals(ring, cap).size();
  cert.artinian = true;
  cert.justification =
      "the right-ideal lattice is finite (" +
      std::to_string(cert.right_ideal_count) +
      " right ideals over " + std::to_string(cert.element_count) +
      " elements), so every descending and ascending chain terminates";
  return cert;
}

/// Smallest t >= 1 with all t-fold products zero, when the ring is
/// nilpotent; nullopt otherwise. Works on basis generators: by
/// multilinearity, all t-fold products vanish iff all t-fold generator
/// products do.
inline std::optional<std::size_t> nilpotency_index(const FiniteRing& ring,
                                                   std::size_t max_index = 64) {
  const std::size_t k = ring.rank();
  if (k == 0) return 1;
  std::vector<std::vector<std::uint32_t>> level;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> e(k, 0);
    e[i] = 1;
    level.push_back(std::move(e));
  }
  auto all_zero = [&](const std::vector<std::vector<std::uint32_t>>& vs) {
    for (const auto& v : vs)
      if (!ring.is_zero(v)) return false;
    return true;
  };
  for (std::size_t t = 1; t <= max_index; ++t) {
    if (all_zero(level)) return t;
    std::vector<std::vector<std::uint32_t>> next;
    std::vector<std::uint32_t> ei(k), p(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::fill(ei.begin(), ei.end(), 0u);
      ei[i] = 1;
      for (const auto& v : level) {
        ring.mul(ei, v, p);
        if (std::find(next.begin(), next.end(), p) == next.end())
          next.push_back(p);
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace ringlab
