#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

enum class IdealTag { None, RightIdeal, LeftIdeal, TwoSidedIdeal };

/// Subset of a ring's elements stored as a bitmap over element indices.
/// Indices follow the canonical enumeration order of the additive group, so
/// the smallest set member is always well defined and the same on every run.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(const FiniteRing* ring)
      : ring_(ring), bits_((ring->size() + 63) / 64, 0) {}

  IdealTag tag() const { return tag_; }
  void set_tag(IdealTag t) { tag_ = t; }

  const FiniteRing* ring() const { return ring_; }
  std::uint64_t universe_size() const { return ring_ ? ring_->size() : 0; }

  bool test(std::uint64_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1u;
  }
  void set(std::uint64_t idx) { bits_[idx >> 6] |= (std::uint64_t{1} << (idx & 63)); }
  void reset(std::uint64_t idx) {
    bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
  }

  bool contains(const RingElement& x) const {
    detail_check(x);
    return test(x.index());
  }
  void insert(const RingElement& x) {
    detail_check(x);
    set(x.index());
  }

  std::uint64_t count() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::uint64_t>(popcount64(w));
    return n;
  }

  bool empty() const {
    for (std::uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  /// Smallest member index, or nullopt when empty.
  std::optional<std::uint64_t> min_index() const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w]) return (static_cast<std::uint64_t>(w) << 6) + ctz64(bits_[w]);
    return std::nullopt;
  }

  /// Smallest member index strictly greater than `after`, or nullopt.
  std::optional<std::uint64_t> next_index(std::uint64_t after) const {
    std::uint64_t idx = after + 1;
    std::size_t w = idx >> 6;
    if (w >= bits_.size()) return std::nullopt;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (idx & 63));
    while (true) {
      if (word) return (static_cast<std::uint64_t>(w) << 6) + ctz64(word);
      if (++w >= bits_.size()) return std::nullopt;
      word = bits_[w];
    }
  }

  std::vector<std::uint64_t> indices() const {
    std::vector<std::uint64_t> out;
    for (auto it = min_index(); it; it = next_index(*it)) out.push_back(*it);
    return out;
  }

  bool operator==(const ElementSubset& o) const {
    return ring_ == o.ring_ && bits_ == o.bits_;
  }
  bool operator!=(const ElementSubset& o) const { return !(*this == o); }

  /// Subset inclusion (both over the same ring).
  bool subset_of(const ElementSubset& o) const {
    if (ring_ != o.ring_)
      throw RingMismatchError("subset comparison across different rings");
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }

  void unite(const ElementSubset& o) {
    if (ring_ != o.ring_)
      throw RingMismatchError("subset union across different rings");
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
  }

  void intersect(const ElementSubset& o) {
    if (ring_ != o.ring_)
      throw RingMismatchError("subset intersection across different rings");
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
  }

  /// Lexicographic order on bitmaps (element index 0 first); used only for
  /// canonical sorting of ideal lists.
  bool bitmap_less(const ElementSubset& o) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      // Compare bit-reversed so that smaller element indices dominate.
      std::uint64_t a = bitrev64(bits_[w]), b = bitrev64(o.bits_[w]);
      if (a != b) return a > b;  // presence of a smaller index sorts first
    }
    return false;
  }

  const std::vector<std::uint64_t>& words() const { return bits_; }

  static ElementSubset full(const FiniteRing* ring) {
    ElementSubset s(ring);
    for (std::uint64_t i = 0; i < ring->size(); ++i) s.set(i);
    return s;
  }
  static ElementSubset singleton_zero(const FiniteRing* ring) {
    ElementSubset s(ring);
    s.set(ring->zero_element().index());
    return s;
  }

 private:
  void detail_check(const RingElement& x) const {
    if (x.ring != ring_)
      throw RingMismatchError("element does not belong to this subset's ring");
  }
  static int popcount64(std::uint64_t v) {
    int c = 0;
    while (v) {
      v &= v - 1;
      ++c;
    }
    return c;
  }
  static int ctz64(std::uint64_t v) {
    int c = 0;
    while (!(v & 1)) {
      v >>= 1;
      ++c;
    }
    return c;
  }
  static std::uint64_t bitrev64(std::uint64_t v) {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i) {
      r = (r << 1) | (v & 1);
      v >>= 1;
    }
    return r;
  }

  const FiniteRing* ring_ = nullptr;
  std::vector<std::uint64_t> bits_;
  IdealTag tag_ = IdealTag::None;
};

/// Check that a subset is closed under addition and under multiplication by
/// every ring element on the given side(s). Cost is |S| * |R| products when
/// checking absorption exhaustively, so callers pass a cap.
enum class Side { Right, Left, TwoSided };

inline bool is_additive_subgroup(const ElementSubset& s) {
  const FiniteRing& ring = *s.ring();
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> a(k), b(k), t(k);
  auto idxs = s.indices();
  if (!s.test(0)) return false;  // zero has index 0 in canonical order
  for (std::uint64_t ia : idxs) {
    ring.decode(ia, a);
    for (std::uint64_t ib : idxs) {
      ring.decode(ib, b);
      ring.group().add(a, b, t);
      if (!s.test(ring.index_of(t))) return false;
    }
  }
  return true;
}

inline bool absorbs(const ElementSubset& s, Side side) {
  const FiniteRing& ring = *s.ring();
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> a(k), r(k), t(k);
  auto idxs = s.indices();
  for (std::uint64_t ia : idxs) {
    ring.decode(ia, a);
    std::fill(r.begin(), r.end(), 0u);
    for (std::uint64_t ir = 0; ir < ring.size(); ++ir) {
      if (side != Side::Left) {
        ring.mul(a, r, t);
        if (!s.test(ring.index_of(t))) return false;
      }
      if (side != Side::Right) {
        ring.mul(r, a, t);
        if (!s.test(ring.index_of(t))) return false;
      }
      ring.group().next(r);
    }
  }
  return true;
}

inline bool is_ideal(const ElementSubset& s, Side side) {
  return is_additive_subgroup(s) && absorbs(s, side);
}

/// Budgeted closure assertion for ideal-tagged subsets: exhaustive when the
/// product count fits `budget`, otherwise on deterministic random samples.
/// Returns true when every performed check passed.
inline bool verify_ideal_tag(const ElementSubset& s, Side side,
                             std::uint64_t budget = std::uint64_t{1} << 22) {
  const FiniteRing& ring = *s.ring();
  const std::uint64_t m = s.count();
  const std::uint64_t n = ring.size();
  if (m * m + m * n <= budget) return is_ideal(s, side);

  auto idxs = s.indices();
  if (idxs.empty() || idxs[0] != 0) return false;  // must contain zero
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> a(k), b(k), t(k);
  SplitMix64 rng(0x1dea'7a65ULL ^ n ^ m);
  for (int trial = 0; trial < 512; ++trial) {
    ring.decode(idxs[rng.below(idxs.size())], a);
    ring.decode(idxs[rng.below(idxs.size())], b);
    ring.group().add(a, b, t);
    if (!s.test(ring.index_of(t))) return false;
    ring.decode(rng.below(n), b);
    if (side != Side::Left) {
      ring.mul(a, b, t);
      if (!s.test(ring.index_of(t))) return false;
    }
    if (side != Side::Right) {
      ring.mul(b, a, t);
      if (!s.test(ring.index_of(t))) return false;
    }
  }
  return true;
}

}  // namespace ringlab
