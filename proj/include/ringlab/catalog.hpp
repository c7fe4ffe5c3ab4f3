#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

/// The four order-p^2 presentations used throughout, on generators with
/// p^2 a = 0 (kind A, B) or pa = pb = 0 (kind C, D):
///   A: a^2 = pa        B: a^2 = 0
///   C: a^2 = b, ab = 0 (forcing ba = a^3 = 0 and b^2 = a^4 = 0)
///   D: a^2 = b^2 = 0, completed with ab = ba = 0
///   Dalt: D's variant requested with ab = -ba; associativity then forces
///         ab = ba = 0 (from 0 = a^2 b = a(ab) and (ab)b = a b^2 = 0), so it
///         shares D's table and differs only in provenance.
enum class FineKind { A, B, C, D, Dalt };

inline std::string fine_kind_name(FineKind k) {
  switch (k) {
    case FineKind::A: return "A";
    case FineKind::B: return "B";
    case FineKind::C: return "C";
    case FineKind::D: return "D";
    case FineKind::Dalt: return "Dalt";
  }
  return "?";
}

inline RingPtr fine_ring(FineKind kind, std::uint32_t p) {
  if (!is_prime(p))
    throw NotPrimeError("catalog parameter p = " + std::to_string(p) +
                        " is not prime");
  const std::string prov =
      fine_kind_name(kind) + "(" + std::to_string(p) + ")";

  RingPtr ring;
  if (kind == FineKind::A || kind == FineKind::B) {
    std::vector<std::uint32_t> aa =
        kind == FineKind::A ? std::vector<std::uint32_t>{p}   // a^2 = pa
                            : std::vector<std::uint32_t>{0};  // a^2 = 0
    ring = make_ring({p * p}, {aa}, std::nullopt, {"a"}, prov);
  } else if (kind == FineKind::C) {
    // basis {a, b}; a^2 = b and all other products vanish.
    ring = make_ring({p, p},
                     {{0, 1}, {0, 0}, {0, 0}, {0, 0}},
                     std::nullopt, {"a", "b"}, prov);
  } else {  // D and Dalt share the (forced) null completion
    ring = make_ring({p, p},
                     {{0, 0}, {0, 0}, {0, 0}, {0, 0}},
                     std::nullopt, {"a", "b"}, prov);
  }

  // Construction-time integrity checks at small parameters.
  if (p <= 7) {
    if (ring->size() != std::uint64_t{p} * p)
      throw RingError("internal invariant violation: catalog ring order");
    if (!ring->is_commutative())
      throw RingError("internal invariant violation: catalog ring must be "
                      "commutative");
    if (find_unity(*ring))
      throw RingError("internal invariant violation: catalog ring must be "
                      "non-unital");
  }
  return ring;
}

inline FineKind fine_kind_from_name(const std::string& name) {
  if (name == "A") return FineKind::A;
  if (name == "B") return FineKind::B;
  if (name == "C") return FineKind::C;
  if (name == "D") return FineKind::D;
  if (name == "Dalt") return FineKind::Dalt;
  throw UnknownLabelError("unknown catalog kind '" + name + "'");
}

/// Z(n): the ring of integers mod n (unital, generator u = 1).
inline RingPtr integers_mod(std::uint32_t n) {
  if (n < 1) throw RingError("Z(n) requires n >= 1");
  const std::string prov = "Z(" + std::to_string(n) + ")";
  if (n == 1)  // the zero ring, rank 0; its unique element is its unity
    return make_ring_ex({}, {}, std::vector<std::uint32_t>{}, {}, prov);
  return make_ring_ex({n}, {{1}}, std::vector<std::uint32_t>{1}, {"u"}, prov,
                      {{"1", {1}}});
}

struct CatalogEntry {
  std::string name;       // expression syntax, e.g. "A(p)"
  std::string orders;     // additive shape
  std::string description;
};

inline std::vector<CatalogEntry> catalog_list() {
  return {
      {"A(p)", "[p^2]", "generator a with a^2 = pa; non-unital, order p^2"},
      {"B(p)", "[p^2]", "generator a with a^2 = 0; non-unital, order p^2"},
      {"C(p)", "[p,p]",
       "generators a, b with a^2 = b, ab = ba = b^2 = 0; non-unital"},
      {"D(p)", "[p,p]",
       "generators a, b with a^2 = b^2 = 0, completed by ab = ba = 0"},
      {"Dalt(p)", "[p,p]",
       "variant of D requested with ab = -ba; associativity forces the same "
       "null table as D"},
      {"Z(n)", "[n]", "integers mod n with unity; the standard test ring"},
  };
}

}  // namespace ringlab
