#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/embedding.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subset.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

struct AnnihilatorOptions {
  std::uint64_t cap = 0;      // 0 = use exhaustive_cap()
  unsigned workers = 1;       // element-space partitioning for large scans
  bool assert_tag = true;     // run the (budgeted) right-ideal closure assert
  std::uint64_t assert_budget = std::uint64_t{1} << 22;
};

namespace detail {

/// Per-basis-generator products L_j = x * e_j (or e_j * x for left scans),
/// so x*y = sum_j y_j * L_j costs O(k^2) instead of a fresh bilinear product.
inline std::vector<std::vector<std::uint32_t>> side_products(
    const FiniteRing& ring, std::span<const std::uint32_t> x, Side side) {
  const std::size_t k = ring.rank();
  std::vector<std::vector<std::uint32_t>> L(k, std::vector<std::uint32_t>(k));
  std::vector<std::uint32_t> ej(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::fill(ej.begin(), ej.end(), 0u);
    ej[j] = 1;
    if (side == Side::Right)
      ring.mul(x, ej, L[j]);
    else
      ring.mul(ej, x, L[j]);
  }
  return L;
}

inline bool kills(const FiniteRing& ring,
                  const std::vector<std::vector<std::uint32_t>>& L,
                  std::span<const std::uint32_t> y,
                  std::span<std::uint32_t> scratch) {
  std::fill(scratch.begin(), scratch.end(), 0u);
  for (std::size_t j = 0; j < L.size(); ++j)
    if (y[j]) ring.group().add_scaled(scratch, y[j], L[j]);
  return ring.is_zero(scratch);
}

inline void finish_tag(ElementSubset& s, Side side, const AnnihilatorOptions& o) {
  s.set_tag(side == Side::Right ? IdealTag::RightIdeal : IdealTag::LeftIdeal);
  if (o.assert_tag && !verify_ideal_tag(s, side, o.assert_budget))
    throw RingError("internal invariant violation: annihilator is not closed "
                    "as a one-sided ideal");
}

}  // namespace detail

/// Exact annihilator of x over the whole ring: {y : xy = 0} (right) or
/// {y : yx = 0} (left). Exhaustive scan, optionally partitioned across
/// workers; the result is a bitmap and independent of the partitioning.
inline ElementSubset annihilator(const RingElement& x, Side side = Side::Right,
                                 const AnnihilatorOptions& opts = {}) {
  const FiniteRing& ring = *x.ring;
  const std::uint64_t n = ring.size();
  const std::uint64_t cap = opts.cap ? opts.cap : exhaustive_cap();
  if (n > cap)
    throw CapExceededError(n, cap, "annihilator scan exceeds element cap");

  ElementSubset result(&ring);
  const unsigned nw = std::max(1u, opts.workers);
  std::vector<ElementSubset> local(nw, ElementSubset(&ring));
  if (ring.has_product_table()) {
    const std::uint64_t xi = x.index();
    parallel_chunks(n, nw, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t yi = lo; yi < hi; ++yi) {
        const std::uint64_t p = side == Side::Right ? ring.mul_index(xi, yi)
                                                    : ring.mul_index(yi, xi);
        if (p == 0) local[w].set(yi);
      }
    });
  } else {
    auto L = detail::side_products(ring, x.c, side);
    const std::size_t k = ring.rank();
    parallel_chunks(n, nw, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
      std::vector<std::uint32_t> y(k), scratch(k);
      ring.decode(lo, y);
      for (std::uint64_t yi = lo; yi < hi; ++yi) {
        if (detail::kills(ring, L, y, scratch)) local[w].set(yi);
        ring.group().next(y);
      }
    });
  }
  for (auto& l : local) result.unite(l);
  detail::finish_tag(result, side, opts);
  return result;
}

/// Relative annihilator r_I(x) = {y in I : xy = 0} for an ideal-subset I of
/// x's ring. Scans only the members of I.
inline ElementSubset annihilator_within(const RingElement& x,
                                        const ElementSubset& within,
                                        Side side = Side::Right,
                                        const AnnihilatorOptions& opts = {}) {
  const FiniteRing& ring = *x.ring;
  if (within.ring() != &ring)
    throw RingMismatchError("'within' subset belongs to a different ring");
  const bool tagged =
      within.tag() == IdealTag::TwoSidedIdeal ||
      (side == Side::Right && within.tag() == IdealTag::RightIdeal) ||
      (side == Side::Left && within.tag() == IdealTag::LeftIdeal);
  if (!tagged && !verify_ideal_tag(within, side, opts.assert_budget))
    throw WithinNotIdealError(
        "'within' subset is not closed as the required ideal");

  ElementSubset result(&ring);
  auto L = detail::side_products(ring, x.c, side);
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> y(k), scratch(k);
  for (auto it = within.min_index(); it; it = within.next_index(*it)) {
    ring.decode(*it, y);
    if (detail::kills(ring, L, y, scratch)) result.set(*it);
  }
  detail::finish_tag(result, side, opts);
  return result;
}

/// Relative annihilator over an embedded ideal: x lives in the ambient ring
/// and the result is a subset of the embedded ring (its own index space), so
/// huge ambient rings never need a full bitmap.
inline ElementSubset annihilator_in_embedding(const IdealEmbedding& emb,
                                              const RingElement& x,
                                              Side side = Side::Right,
                                              const AnnihilatorOptions& opts = {}) {
  const FiniteRing& T = *emb.ambient;
  const FiniteRing& S = *emb.sub;
  if (x.ring != &T)
    throw RingMismatchError("element does not belong to the ambient ring");
  const std::uint64_t cap = opts.cap ? opts.cap : exhaustive_cap();
  if (S.size() > cap)
    throw CapExceededError(S.size(), cap,
                           "embedded annihilator scan exceeds element cap");

  auto L = detail::side_products(T, x.c, side);
  const std::size_t ka = T.rank(), ks = S.rank();
  ElementSubset result(&S);
  std::vector<std::uint32_t> sc(ks, 0), ac(ka), scratch(ka);
  std::uint64_t si = 0;
  do {
    emb.to_ambient(sc, ac);
    if (detail::kills(T, L, ac, scratch)) result.set(si);
    ++si;
  } while (S.group().next(sc));
  detail::finish_tag(result, side, opts);
  return result;
}

/// Ascending chain r(x) ⊆ r(x²) ⊆ …, truncated at the first n with
/// r(xⁿ) = r(xⁿ⁺¹). Once two consecutive terms agree the chain is constant
/// (y ∈ r(xⁿ⁺²) gives xy ∈ r(xⁿ⁺¹) = r(xⁿ), so y ∈ r(xⁿ⁺¹)), which makes
/// the stop rule sound; finiteness makes it terminate.
template <class ScanFn>
inline std::vector<ElementSubset> chain_with(const RingElement& x, ScanFn scan) {
  std::vector<ElementSubset> chain;
  RingElement p = x;
  chain.push_back(scan(p));
  while (true) {
    p = p * x;
    ElementSubset nxt = scan(p);
    if (nxt == chain.back()) break;
    if (!chain.back().subset_of(nxt))
      throw RingError("internal invariant violation: annihilator chain is "
                      "not ascending");
    chain.push_back(std::move(nxt));
  }
  return chain;
}

inline std::vector<ElementSubset> annihilator_chain(
    const RingElement& x, Side side = Side::Right,
    const AnnihilatorOptions& opts = {}) {
  return chain_with(x, [&](const RingElement& p) {
    return annihilator(p, side, opts);
  });
}

inline std::vector<ElementSubset> annihilator_chain_within(
    const RingElement& x, const ElementSubset& within, Side side = Side::Right,
    const AnnihilatorOptions& opts = {}) {
  ElementSubset validated = within;
  return chain_with(x, [&, first = true](const RingElement& p) mutable {
    ElementSubset r = annihilator_within(p, validated, side, opts);
    if (first) {
      // Validation of 'within' happened once; skip it for later powers.
      validated.set_tag(side == Side::Right ? IdealTag::RightIdeal
                                            : IdealTag::LeftIdeal);
      first = false;
    }
    return r;
  });
}

inline std::vector<ElementSubset> annihilator_chain_in_embedding(
    const IdealEmbedding& emb, const RingElement& x, Side side = Side::Right,
    const AnnihilatorOptions& opts = {}) {
  return chain_with(x, [&](const RingElement& p) {
    return annihilator_in_embedding(emb, p, side, opts);
  });
}

}  // namespace ringlab
