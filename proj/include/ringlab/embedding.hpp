#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

/// Embedding of a ring S as a two-sided ideal of an ambient ring T, given by
/// a coordinate section: each basis generator of S maps to a distinct basis
/// generator of T of the same additive order, so the image of S is exactly
/// the coordinate subgroup supported on those positions.
///
/// The section is validated as a multiplicative map on basis pairs (which
/// proves it is a ring homomorphism by bilinearity) and the ideal property
/// is proven on generators; when the ambient ring is small the closure is
/// additionally checked exhaustively.
struct IdealEmbedding {
  RingPtr ambient;
  RingPtr sub;
  std::vector<std::size_t> basis_pos;  // sub generator i -> ambient coordinate

  void to_ambient(std::span<const std::uint32_t> sub_coords,
                  std::span<std::uint32_t> out) const {
    std::fill(out.begin(), out.end(), 0u);
    for (std::size_t i = 0; i < basis_pos.size(); ++i)
      out[basis_pos[i]] = sub_coords[i];
  }

  RingElement to_ambient(const RingElement& x) const {
    if (x.ring != sub.get())
      throw RingMismatchError("element does not belong to the embedded ring");
    RingElement r = ambient->zero_element();
    to_ambient(x.c, r.c);
    return r;
  }

  /// Read an ambient element back into sub coordinates when it lies in the
  /// image; nullopt when any unsupported coordinate is nonzero.
  bool try_to_sub(std::span<const std::uint32_t> ambient_coords,
                  std::span<std::uint32_t> out) const {
    std::vector<bool> covered(ambient->rank(), false);
    for (std::size_t i = 0; i < basis_pos.size(); ++i) {
      out[i] = ambient_coords[basis_pos[i]];
      covered[basis_pos[i]] = true;
    }
    for (std::size_t j = 0; j < ambient->rank(); ++j)
      if (!covered[j] && ambient_coords[j] != 0) return false;
    return true;
  }

  std::optional<RingElement> try_to_sub(const RingElement& x) const {
    if (x.ring != ambient.get())
      throw RingMismatchError("element does not belong to the ambient ring");
    RingElement r = sub->zero_element();
    if (!try_to_sub(x.c, r.c)) return std::nullopt;
    return r;
  }

  bool contains(const RingElement& x) const {
    if (x.ring != ambient.get())
      throw RingMismatchError("element does not belong to the ambient ring");
    std::vector<std::uint32_t> tmp(sub->rank());
    return try_to_sub(x.c, tmp);
  }

  /// Membership bitmap over the ambient ring (requires it to fit the cap).
  ElementSubset membership(std::uint64_t cap = 0) const {
    if (cap == 0) cap = exhaustive_cap();
    if (ambient->size() > cap)
      throw CapExceededError(ambient->size(), cap,
                             "embedding membership bitmap exceeds cap");
    ElementSubset s(ambient.get());
    const std::size_t ks = sub->rank(), ka = ambient->rank();
    std::vector<std::uint32_t> sc(ks, 0), ac(ka);
    do {
      to_ambient(sc, ac);
      s.set(ambient->index_of(ac));
    } while (sub->group().next(sc));
    s.set_tag(IdealTag::TwoSidedIdeal);
    return s;
  }
};

inline IdealEmbedding make_ideal_embedding(RingPtr ambient, RingPtr sub,
                                           std::vector<std::size_t> basis_pos) {
  IdealEmbedding emb{std::move(ambient), std::move(sub), std::move(basis_pos)};
  const FiniteRing& T = *emb.ambient;
  const FiniteRing& S = *emb.sub;
  const std::size_t ks = S.rank(), ka = T.rank();

  if (emb.basis_pos.size() != ks)
    throw RingError("embedding needs one ambient position per sub generator");
  std::vector<bool> used(ka, false);
  for (std::size_t i = 0; i < ks; ++i) {
    const std::size_t p = emb.basis_pos[i];
    if (p >= ka || used[p])
      throw RingError("embedding positions must be distinct ambient coordinates");
    used[p] = true;
    if (T.group().orders[p] != S.group().orders[i])
      throw RingError("embedding position has mismatched additive order");
  }

  // Section is multiplicative on basis pairs => ring homomorphism.
  std::vector<std::uint32_t> ai(ka, 0), aj(ka, 0), prod(ka), expect(ka);
  std::vector<std::uint32_t> subc(ks);
  for (std::size_t i = 0; i < ks; ++i)
    for (std::size_t j = 0; j < ks; ++j) {
      std::fill(ai.begin(), ai.end(), 0u);
      ai[emb.basis_pos[i]] = 1;
      std::fill(aj.begin(), aj.end(), 0u);
      aj[emb.basis_pos[j]] = 1;
      T.mul(ai, aj, prod);
      auto sp = S.basis_product(i, j);
      std::copy(sp.begin(), sp.end(), subc.begin());
      emb.to_ambient(subc, expect);
      if (prod != expect)
        throw RingError("embedding section is not multiplicative on basis pair (" +
                        std::to_string(i) + ", " + std::to_string(j) + ")");
    }

  // Ideal property on generators: sec(e_i) * u_t and u_t * sec(e_i) land in
  // the image for every ambient generator u_t; bilinearity extends this to
  // all products, and the image is a coordinate subgroup, so this proves the
  // image is a two-sided ideal.
  std::vector<std::uint32_t> ut(ka, 0), back(ks);
  for (std::size_t i = 0; i < ks; ++i) {
    std::fill(ai.begin(), ai.end(), 0u);
    ai[emb.basis_pos[i]] = 1;
    for (std::size_t t = 0; t < ka; ++t) {
      std::fill(ut.begin(), ut.end(), 0u);
      ut[t] = 1;
      T.mul(ai, ut, prod);
      if (!emb.try_to_sub(prod, back))
        throw WithinNotIdealError("image is not a right ideal: sub generator " +
                                  std::to_string(i) + " times ambient generator " +
                                  std::to_string(t) + " leaves the image");
      T.mul(ut, ai, prod);
      if (!emb.try_to_sub(prod, back))
        throw WithinNotIdealError("image is not a left ideal: ambient generator " +
                                  std::to_string(t) + " times sub generator " +
                                  std::to_string(i) + " leaves the image");
    }
  }

  // Extra integrity check on small ambient rings: exhaustive closure.
  if (T.size() <= 10000) {
    ElementSubset img = emb.membership(T.size());
    if (!is_ideal(img, Side::TwoSided))
      throw WithinNotIdealError(
          "exhaustive closure check failed for the embedded ideal");
  }

  return emb;
}

}  // namespace ringlab
