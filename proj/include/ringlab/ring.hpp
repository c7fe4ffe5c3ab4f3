#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/additive_group.hpp"
#include "ringlab/config.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Coordinate vector in a ring's additive group, tagged with its owner.
/// All mixed-ring operations throw RingMismatchError.
struct RingElement {
  const FiniteRing* ring = nullptr;
  std::vector<std::uint32_t> c;

  bool is_zero() const;
  std::uint64_t index() const;
};

/// Finite associative ring, possibly without unity. The additive group is a
/// product of cyclic groups and multiplication is stored as structure
/// constants on the k basis generators; full products are computed by
/// bilinear extension (optionally memoized for small rings).
///
/// Instances are immutable after construction and safe to share across
/// threads. Build them with make_ring (validates every ring axiom) or the
/// construction helpers in constructions.hpp / catalog.hpp.
class FiniteRing {
 public:
  const AdditiveGroup& group() const { return group_; }
  std::size_t rank() const { return group_.orders.size(); }
  std::uint64_t size() const { return group_.size; }
  std::uint64_t additive_exponent() const { return group_.exponent; }
  const std::string& provenance() const { return provenance_; }
  bool is_commutative() const { return commutative_; }

  std::span<const std::uint32_t> basis_product(std::size_t i,
                                               std::size_t j) const {
    const std::size_t k = rank();
    return {mul_.data() + (i * k + j) * k, k};
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> basis_index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  const std::optional<std::vector<std::uint32_t>>& unity() const {
    return unity_;
  }

  /// Extra named elements (e.g. bare group labels in group rings over a
  /// unital coefficient ring).
  const std::vector<std::pair<std::string, std::vector<std::uint32_t>>>&
  named_elements() const {
    return named_;
  }

  const std::vector<std::uint32_t>* find_named(const std::string& label) const {
    for (const auto& [name, coords] : named_)
      if (name == label) return &coords;
    return nullptr;
  }

  /// Labels that are recognized but unusable in this ring, with an
  /// explanation (e.g. "e" in a group ring over a non-unital ring).
  const std::vector<std::pair<std::string, std::string>>& reserved_labels()
      const {
    return reserved_;
  }

  const std::string* find_reserved(const std::string& label) const {
    for (const auto& [name, why] : reserved_)
      if (name == label) return &why;
    return nullptr;
  }

  // --- span arithmetic (no allocation; out must not alias inputs for mul) ---

  void add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
           std::span<std::uint32_t> out) const {
    group_.add(a, b, out);
  }
  void sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
           std::span<std::uint32_t> out) const {
    group_.sub(a, b, out);
  }
  void neg(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const {
    group_.neg(a, out);
  }
  void scale(long long k, std::span<const std::uint32_t> x,
             std::span<std::uint32_t> out) const {
    group_.scale(k, x, out);
  }

  void mul(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
           std::span<std::uint32_t> out) const {
    std::fill(out.begin(), out.end(), 0u);
    const std::size_t k = rank();
    for (std::size_t i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (y[j] == 0) continue;
        group_.add_scaled(out, std::uint64_t{x[i]} * y[j], basis_product(i, j));
      }
    }
  }

  /// Left-associated n-fold product, n >= 1.
  void pow(std::span<const std::uint32_t> x, std::uint64_t n,
           std::span<std::uint32_t> out) const {
    if (n < 1)
      throw NonPositiveExponentError("pow requires a positive exponent");
    const std::size_t k = rank();
    std::vector<std::uint32_t> acc(x.begin(), x.end()), tmp(k);
    for (std::uint64_t step = 1; step < n; ++step) {
      mul(acc, x, tmp);
      acc.swap(tmp);
    }
    std::copy(acc.begin(), acc.end(), out.begin());
  }

  bool is_zero(std::span<const std::uint32_t> c) const {
    return group_.is_zero(c);
  }

  std::uint64_t index_of(std::span<const std::uint32_t> c) const {
    return group_.encode(c);
  }
  void decode(std::uint64_t idx, std::span<std::uint32_t> out) const {
    group_.decode(idx, out);
  }

  // --- element-level API ---

  RingElement zero_element() const {
    return {this, std::vector<std::uint32_t>(rank(), 0)};
  }
  RingElement basis_element(std::size_t i) const {
    RingElement e = zero_element();
    e.c[i] = 1;
    return e;
  }
  RingElement element(std::vector<std::uint32_t> coords) const {
    if (!group_.valid_coords(coords))
      throw RingError("coordinate vector does not match the additive group");
    return {this, std::move(coords)};
  }
  RingElement element_at(std::uint64_t idx) const {
    RingElement e = zero_element();
    group_.decode(idx, e.c);
    return e;
  }
  std::optional<RingElement> unity_element() const {
    if (!unity_) return std::nullopt;
    return RingElement{this, *unity_};
  }

  // --- memoized index products ---

  /// Build the full N x N product table if the ring is small enough.
  /// Safe to call concurrently; returns true when the table is available.
  bool build_product_table(unsigned workers = 1) const {
    const std::uint64_t n = size();
    if (n > product_table_cap() || n > 0xFFFFu + 1) return false;
    std::call_once(table_once_, [this, n, workers] {
      std::vector<std::uint16_t> table(n * n);
      const std::size_t k = rank();
      parallel_chunks(n, workers, [&](unsigned, std::uint64_t lo,
                                      std::uint64_t hi) {
        std::vector<std::uint32_t> a(k), b(k), p(k);
        for (std::uint64_t ai = lo; ai < hi; ++ai) {
          group_.decode(ai, a);
          std::fill(b.begin(), b.end(), 0u);
          for (std::uint64_t bi = 0; bi < n; ++bi) {
            mul(a, b, p);
            table[ai * n + bi] = static_cast<std::uint16_t>(group_.encode(p));
            group_.next(b);
          }
        }
      });
      table_ = std::move(table);
      table_built_ = true;
    });
    return table_built_;
  }

  bool has_product_table() const { return table_built_; }

  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const {
    if (table_built_) return table_[a * size() + b];
    const std::size_t k = rank();
    thread_local std::vector<std::uint32_t> xa, xb, xp;
    xa.resize(k);
    xb.resize(k);
    xp.resize(k);
    group_.decode(a, xa);
    group_.decode(b, xb);
    mul(xa, xb, xp);
    return group_.encode(xp);
  }

 private:
  FiniteRing() = default;
  friend RingPtr make_ring_ex(
      std::vector<std::uint32_t>, std::vector<std::vector<std::uint32_t>>,
      std::optional<std::vector<std::uint32_t>>, std::vector<std::string>,
      std::string,
      std::vector<std::pair<std::string, std::vector<std::uint32_t>>>,
      std::vector<std::pair<std::string, std::string>>);

  AdditiveGroup group_;
  std::vector<std::uint32_t> mul_;  // (i*k + j)*k flattened structure constants
  std::optional<std::vector<std::uint32_t>> unity_;
  std::vector<std::string> labels_;
  std::string provenance_;
  bool commutative_ = true;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> named_;
  std::vector<std::pair<std::string, std::string>> reserved_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint16_t> table_;
  mutable bool table_built_ = false;
};

/// Validating factory. Checks coordinate validity, additive well-definedness
/// of every structure constant, associativity on all basis triples (which
/// proves associativity everywhere by trilinearity), the unity law on the
/// basis, and spot-checks distributivity on deterministic random triples.
inline RingPtr make_ring_ex(
    std::vector<std::uint32_t> orders,
    std::vector<std::vector<std::uint32_t>> mul,
    std::optional<std::vector<std::uint32_t>> unity = std::nullopt,
    std::vector<std::string> labels = {}, std::string provenance = "custom",
    std::vector<std::pair<std::string, std::vector<std::uint32_t>>> named = {},
    std::vector<std::pair<std::string, std::string>> reserved = {}) {
  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->group_ = AdditiveGroup::make(std::move(orders));
  const AdditiveGroup& g = ring->group_;
  const std::size_t k = g.rank();

  if (g.size > construction_cap())
    throw CapExceededError(g.size, construction_cap(),
                           "ring larger than the construction cap");

  if (mul.size() != k * k)
    throw RingError("multiplication table must have rank^2 entries");
  ring->mul_.assign(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& entry = mul[i * k + j];
      if (!g.valid_coords(entry))
        throw IllDefinedError(i, j, "table entry is not a valid coordinate vector");
      std::copy(entry.begin(), entry.end(),
                ring->mul_.begin() + static_cast<std::ptrdiff_t>((i * k + j) * k));
    }

  if (labels.empty()) {
    for (std::size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i));
  }
  if (labels.size() != k) throw RingError("label count must equal rank");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (labels[i] == labels[j]) throw RingError("duplicate basis label");
  ring->labels_ = std::move(labels);
  ring->provenance_ = std::move(provenance);
  ring->named_ = std::move(named);
  ring->reserved_ = std::move(reserved);

  std::vector<std::uint32_t> t0(k), t1(k), t2(k);

  // Well-definedness: d_i * mul(i,j) = d_j * mul(i,j) = 0. Required for the
  // bilinear extension to respect the additive orders of the generators.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto entry = ring->basis_product(i, j);
      g.scale(g.orders[i], entry, t0);
      if (!g.is_zero(t0))
        throw IllDefinedError(i, j, "d_i * mul(i,j) != 0: table not compatible with generator order");
      g.scale(g.orders[j], entry, t0);
      if (!g.is_zero(t0))
        throw IllDefinedError(i, j, "d_j * mul(i,j) != 0: table not compatible with generator order");
    }

  // Associativity on basis triples.
  std::vector<std::uint32_t> ei(k, 0), ej(k, 0), el(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        std::fill(el.begin(), el.end(), 0u);
        el[l] = 1;
        ring->mul(ring->basis_product(i, j), el, t0);
        std::fill(ei.begin(), ei.end(), 0u);
        ei[i] = 1;
        ring->mul(ei, ring->basis_product(j, l), t1);
        if (t0 != t1)
          throw NonAssociativeError(
              i, j, l,
              "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                  std::to_string(l) + " != e" + std::to_string(i) + " (e" +
                  std::to_string(j) + " e" + std::to_string(l) + ")");
      }

  // Distributivity holds by bilinear extension; spot-check random triples.
  {
    SplitMix64 rng(0x5eedULL ^ g.size);
    std::vector<std::uint32_t> x(k), y(k), z(k), s(k), p1(k), p2(k), p3(k);
    for (int trial = 0; trial < 16; ++trial) {
      for (std::size_t i = 0; i < k; ++i) {
        x[i] = static_cast<std::uint32_t>(rng.below(g.orders[i]));
        y[i] = static_cast<std::uint32_t>(rng.below(g.orders[i]));
        z[i] = static_cast<std::uint32_t>(rng.below(g.orders[i]));
      }
      g.add(x, y, s);
      ring->mul(s, z, p1);
      ring->mul(x, z, p2);
      ring->mul(y, z, p3);
      g.add(p2, p3, t0);
      if (p1 != t0) throw RingError("distributivity spot-check failed (left)");
      ring->mul(z, s, p1);
      ring->mul(z, x, p2);
      ring->mul(z, y, p3);
      g.add(p2, p3, t0);
      if (p1 != t0) throw RingError("distributivity spot-check failed (right)");
    }
  }

  if (unity) {
    if (!g.valid_coords(*unity))
      throw BadUnityError("unity is not a valid coordinate vector");
    for (std::size_t j = 0; j < k; ++j) {
      std::fill(ej.begin(), ej.end(), 0u);
      ej[j] = 1;
      ring->mul(*unity, ej, t0);
      ring->mul(ej, *unity, t1);
      if (t0 != ej || t1 != ej)
        throw BadUnityError("claimed unity fails the unity law on basis element " +
                            std::to_string(j));
    }
    ring->unity_ = std::move(unity);
  }

  // Commutativity on basis pairs extends bilinearly.
  bool comm = true;
  for (std::size_t i = 0; i < k && comm; ++i)
    for (std::size_t j = i + 1; j < k && comm; ++j) {
      auto ab = ring->basis_product(i, j);
      auto ba = ring->basis_product(j, i);
      comm = std::equal(ab.begin(), ab.end(), ba.begin());
    }
  ring->commutative_ = comm;

  for (const auto& [name, coords] : ring->named_)
    if (!g.valid_coords(coords))
      throw RingError("named element '" + name + "' has invalid coordinates");

  return ring;
}

inline RingPtr make_ring(std::vector<std::uint32_t> orders,
                         std::vector<std::vector<std::uint32_t>> mul,
                         std::optional<std::vector<std::uint32_t>> unity =
                             std::nullopt,
                         std::vector<std::string> labels = {},
                         std::string provenance = "custom") {
  return make_ring_ex(std::move(orders), std::move(mul), std::move(unity),
                      std::move(labels), std::move(provenance));
}

// --- RingElement operations ---

inline bool RingElement::is_zero() const { return ring->is_zero(c); }
inline std::uint64_t RingElement::index() const { return ring->index_of(c); }

namespace detail {
inline void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring != b.ring)
    throw RingMismatchError("elements belong to different rings");
}
}  // namespace detail

inline RingElement operator+(const RingElement& a, const RingElement& b) {
  detail::require_same_ring(a, b);
  RingElement r{a.ring, std::vector<std::uint32_t>(a.c.size())};
  a.ring->add(a.c, b.c, r.c);
  return r;
}

inline RingElement operator-(const RingElement& a, const RingElement& b) {
  detail::require_same_ring(a, b);
  RingElement r{a.ring, std::vector<std::uint32_t>(a.c.size())};
  a.ring->sub(a.c, b.c, r.c);
  return r;
}

inline RingElement operator-(const RingElement& a) {
  RingElement r{a.ring, std::vector<std::uint32_t>(a.c.size())};
  a.ring->neg(a.c, r.c);
  return r;
}

inline RingElement operator*(const RingElement& a, const RingElement& b) {
  detail::require_same_ring(a, b);
  RingElement r{a.ring, std::vector<std::uint32_t>(a.c.size())};
  a.ring->mul(a.c, b.c, r.c);
  return r;
}

inline bool operator==(const RingElement& a, const RingElement& b) {
  detail::require_same_ring(a, b);
  return a.c == b.c;
}

inline RingElement int_scale(long long k, const RingElement& x) {
  RingElement r{x.ring, std::vector<std::uint32_t>(x.c.size())};
  x.ring->scale(k, x.c, r.c);
  return r;
}

inline RingElement pow(const RingElement& x, std::uint64_t n) {
  RingElement r{x.ring, std::vector<std::uint32_t>(x.c.size())};
  x.ring->pow(x.c, n, r.c);
  return r;
}

// --- ring predicates ---

/// Two-sided unity search over all elements. Returns the construction's
/// distinguished unity when present without scanning.
inline std::optional<RingElement> find_unity(const FiniteRing& ring,
                                             std::uint64_t cap = 0) {
  if (ring.unity()) return ring.unity_element();
  if (cap == 0) cap = exhaustive_cap();
  if (ring.size() > cap)
    throw CapExceededError(ring.size(), cap, "unity search exceeds cap");
  const std::size_t k = ring.rank();
  std::vector<std::uint32_t> u(k, 0), ej(k), t(k);
  do {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      std::fill(ej.begin(), ej.end(), 0u);
      ej[j] = 1;
      ring.mul(u, ej, t);
      ok = (t == ej);
      if (ok) {
        ring.mul(ej, u, t);
        ok = (t == ej);
      }
    }
    if (ok) return RingElement{&ring, u};
  } while (ring.group().next(u));
  return std::nullopt;
}

inline bool is_unital(const FiniteRing& ring, std::uint64_t cap = 0) {
  return find_unity(ring, cap).has_value();
}

}  // namespace ringlab
