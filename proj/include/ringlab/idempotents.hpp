#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/involution.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subset.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

/// All x with x*x = x, in canonical (lexicographic coordinate) order.
inline std::vector<RingElement> enumerate_idempotents(const FiniteRing& ring,
                                                      std::uint64_t cap = 0,
                                                      unsigned workers = 1) {
  const std::uint64_t n = ring.size();
  if (cap == 0) cap = exhaustive_cap();
  if (n > cap)
    throw CapExceededError(n, cap, "idempotent scan exceeds element cap");

  const std::size_t k = ring.rank();
  const unsigned nw = std::max(1u, workers);
  std::vector<std::vector<std::uint64_t>> found(nw);
  parallel_chunks(n, nw, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> x(k), sq(k);
    ring.decode(lo, x);
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      ring.mul(x, x, sq);
      if (std::equal(sq.begin(), sq.end(), x.begin())) found[w].push_back(xi);
      ring.group().next(x);
    }
  });

  std::vector<RingElement> out;
  for (unsigned w = 0; w < nw; ++w)  // chunks are ascending, so this is sorted
    for (std::uint64_t xi : found[w]) out.push_back(ring.element_at(xi));
  return out;
}

/// All projections (idempotents fixed by the involution), canonical order.
inline std::vector<RingElement> enumerate_projections(const FiniteRing& ring,
                                                      const Involution& inv,
                                                      std::uint64_t cap = 0,
                                                      unsigned workers = 1) {
  if (inv.ring() != &ring)
    throw InvolutionMismatchError(
        "involution was validated on a different ring");
  std::vector<RingElement> out;
  std::vector<std::uint32_t> img(ring.rank());
  for (RingElement& e : enumerate_idempotents(ring, cap, workers)) {
    inv.apply(e.c, img);
    if (std::equal(img.begin(), img.end(), e.c.begin()))
      out.push_back(std::move(e));
  }
  return out;
}

/// eR = {e*s : s in R} (right) or Re = {s*e : s in R} (left) for an
/// idempotent e. Contains e (= e*e) and is a one-sided ideal; both facts
/// are asserted.
inline ElementSubset principal_ideal(const RingElement& e,
                                     Side side = Side::Right) {
  if (side == Side::TwoSided)
    throw RingError("principal_ideal expects Side::Right or Side::Left");
  const FiniteRing& ring = *e.ring;
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> sq(k);
  ring.mul(e.c, e.c, sq);
  if (!std::equal(sq.begin(), sq.end(), e.c.begin()))
    throw NotIdempotentError("principal ideals here require an idempotent");

  ElementSubset s(&ring);
  if (ring.has_product_table()) {
    const std::uint64_t ei = e.index();
    for (std::uint64_t yi = 0; yi < ring.size(); ++yi)
      s.set(side == Side::Right ? ring.mul_index(ei, yi)
                                : ring.mul_index(yi, ei));
  } else {
    std::vector<std::uint32_t> y(k, 0), p(k);
    do {
      if (side == Side::Right)
        ring.mul(e.c, y, p);
      else
        ring.mul(y, e.c, p);
      s.set(ring.index_of(p));
    } while (ring.group().next(y));
  }
  s.set_tag(side == Side::Right ? IdealTag::RightIdeal : IdealTag::LeftIdeal);
  if (!s.contains(e))
    throw RingError("internal invariant violation: e not in its principal ideal");
  return s;
}

inline ElementSubset principal_right_ideal(const RingElement& e) {
  return principal_ideal(e, Side::Right);
}

inline ElementSubset principal_left_ideal(const RingElement& e) {
  return principal_ideal(e, Side::Left);
}

/// Smallest right ideal containing x. For possibly non-unital rings this is
/// Zx + xR = {k*x + x*r}, which is already closed: (kx + xr)s = x(ks + rs).
inline ElementSubset generated_right_ideal(const RingElement& x) {
  const FiniteRing& ring = *x.ring;
  const std::size_t k = ring.rank();

  ElementSubset xr(&ring);
  std::vector<std::uint32_t> y(k, 0), p(k), shifted(k);
  do {
    ring.mul(x.c, y, p);
    xr.set(ring.index_of(p));
  } while (ring.group().next(y));

  // Additive order of x: smallest t >= 1 with t*x = 0.
  std::uint64_t ord = 1;
  ring.scale(1, x.c, p);
  while (!ring.is_zero(p)) {
    ++ord;
    ring.group().add(p, x.c, shifted);
    p.swap(shifted);
  }

  ElementSubset result(&ring);
  std::vector<std::uint32_t> kx(k), sum(k), m(k);
  for (std::uint64_t t = 0; t < ord; ++t) {
    ring.scale(static_cast<long long>(t), x.c, kx);
    for (auto it = xr.min_index(); it; it = xr.next_index(*it)) {
      ring.decode(*it, m);
      ring.group().add(kx, m, sum);
      result.set(ring.index_of(sum));
    }
  }
  result.set_tag(IdealTag::RightIdeal);
  return result;
}

}  // namespace ringlab
