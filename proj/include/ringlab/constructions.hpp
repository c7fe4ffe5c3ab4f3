#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/embedding.hpp"
#include "ringlab/group.hpp"
#include "ringlab/involution.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

namespace detail {

/// Guard |R| = prod(orders) against the construction cap before any table of
/// that shape is allocated.
inline void check_construction_size(const std::vector<std::uint32_t>& orders,
                                    const std::string& what) {
  const std::uint64_t cap = construction_cap();
  std::uint64_t size = 1;
  for (std::uint32_t d : orders) {
    if (size > cap / d) {
      const std::uint64_t required =
          size > ~std::uint64_t{0} / d ? ~std::uint64_t{0} : size * d;
      throw CapExceededError(required, cap, what + " exceeds construction cap");
    }
    size *= d;
  }
}

inline std::string unused_label(const FiniteRing& ring, std::string want,
                                const std::string& fallback) {
  return ring.basis_index_of(want) ? fallback : want;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Group rings
// ---------------------------------------------------------------------------

/// Group ring RG: formal R-linear combinations of group elements with the
/// convolution product. Basis order is R-generator major, group element
/// minor: generator (i, j) = r_i g_j sits at index i*|G| + j.
///
/// When R is unital, each group element is itself an element of RG (named
/// "e", "g", ...). When R is non-unital those labels are reserved with an
/// explanatory message: there is no element "g" in such a ring.
inline RingPtr group_ring(const RingPtr& R, const FiniteGroup& G,
                          std::string provenance = "") {
  const std::size_t kR = R->rank(), m = G.order;
  const std::size_t k = kR * m;
  const auto& rOrders = R->group().orders;

  std::vector<std::uint32_t> orders(k);
  for (std::size_t i = 0; i < kR; ++i)
    for (std::size_t j = 0; j < m; ++j) orders[i * m + j] = rOrders[i];
  detail::check_construction_size(orders, "group ring");

  std::vector<std::vector<std::uint32_t>> mul(k * k,
                                              std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < kR; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t w = 0; w < kR; ++w)
        for (std::size_t l = 0; l < m; ++l) {
          auto rc = R->basis_product(i, w);
          const std::size_t h = G.op(j, l);
          auto& entry = mul[(i * m + j) * k + (w * m + l)];
          for (std::size_t t = 0; t < kR; ++t) entry[t * m + h] = rc[t];
        }

  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < kR; ++i)
    for (std::size_t j = 0; j < m; ++j)
      labels[i * m + j] = R->label(i) + "*" + G.labels[j];

  std::optional<std::vector<std::uint32_t>> unity;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> named;
  std::vector<std::pair<std::string, std::string>> reserved;
  if (R->unity()) {
    const auto& uR = *R->unity();
    std::vector<std::uint32_t> u(k, 0);
    for (std::size_t t = 0; t < kR; ++t) u[t * m + G.identity] = uR[t];
    unity = u;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::uint32_t> gj(k, 0);
      for (std::size_t t = 0; t < kR; ++t) gj[t * m + j] = uR[t];
      named.emplace_back(G.labels[j], std::move(gj));
    }
  } else {
    for (std::size_t j = 0; j < m; ++j)
      reserved.emplace_back(
          G.labels[j],
          "bare group label '" + G.labels[j] +
              "' denotes 1*" + G.labels[j] +
              ", which does not exist here: the coefficient ring " +
              R->provenance() +
              " has no unity. Use an explicit coefficient (e.g. a*" +
              G.labels[j] + ") or pass the unitized extension.");
  }

  if (provenance.empty())
    provenance = "GR(" + R->provenance() + "," + G.provenance + ")";
  return make_ring_ex(std::move(orders), std::move(mul), std::move(unity),
                      std::move(labels), std::move(provenance),
                      std::move(named), std::move(reserved));
}

// ---------------------------------------------------------------------------
// Unitization (Dorroh extension)
// ---------------------------------------------------------------------------

struct Unitization {
  RingPtr ring;             // U(R) = Z_N (+) R with unity (1, 0)
  IdealEmbedding embedding;  // R as the two-sided ideal {(0, r)}
};

/// U(R): pairs (k, r) with k in Z_N, N the additive exponent of R, and
/// (k,r)(l,s) = (kl, ks + lr + rs). The scalar modulus N makes the integer
/// action faithful; the unity is (1, 0) and R embeds as {(0, r)}.
inline Unitization unitization(const RingPtr& R, std::string provenance = "") {
  const std::size_t kR = R->rank();
  const std::uint64_t N = R->additive_exponent();
  const bool scalar = N >= 2;  // N == 1 only for the trivial ring {0}
  const std::size_t off = scalar ? 1 : 0;
  const std::size_t k = kR + off;
  const auto& rOrders = R->group().orders;

  std::vector<std::uint32_t> orders(k);
  if (scalar) orders[0] = static_cast<std::uint32_t>(N);
  for (std::size_t i = 0; i < kR; ++i) orders[off + i] = rOrders[i];
  detail::check_construction_size(orders, "unitization");

  std::vector<std::vector<std::uint32_t>> mul(k * k,
                                              std::vector<std::uint32_t>(k, 0));
  auto unit_vec = [&](std::size_t pos) {
    std::vector<std::uint32_t> v(k, 0);
    v[pos] = 1;
    return v;
  };
  if (scalar) {
    mul[0 * k + 0] = unit_vec(0);
    for (std::size_t i = 0; i < kR; ++i) {
      mul[0 * k + (off + i)] = unit_vec(off + i);
      mul[(off + i) * k + 0] = unit_vec(off + i);
    }
  }
  for (std::size_t i = 0; i < kR; ++i)
    for (std::size_t j = 0; j < kR; ++j) {
      auto rc = R->basis_product(i, j);
      auto& entry = mul[(off + i) * k + (off + j)];
      for (std::size_t t = 0; t < kR; ++t) entry[off + t] = rc[t];
    }

  std::vector<std::string> labels(k);
  if (scalar) labels[0] = detail::unused_label(*R, "1", "one");
  for (std::size_t i = 0; i < kR; ++i) labels[off + i] = R->label(i);

  std::vector<std::uint32_t> unity(k, 0);
  if (scalar) unity[0] = 1;

  if (provenance.empty()) provenance = "U(" + R->provenance() + ")";
  RingPtr U = make_ring_ex(std::move(orders), std::move(mul), unity,
                           std::move(labels), std::move(provenance));

  std::vector<std::size_t> pos(kR);
  for (std::size_t i = 0; i < kR; ++i) pos[i] = off + i;
  IdealEmbedding emb = make_ideal_embedding(U, R, std::move(pos));
  return {std::move(U), std::move(emb)};
}

// ---------------------------------------------------------------------------
// Extension group ring: U(R)G with RG embedded as a two-sided ideal
// ---------------------------------------------------------------------------

struct ExtensionGroupRing {
  RingPtr extension;         // U(R)G; group elements exist here as 1*g
  RingPtr subring;           // RG with its own index space
  RingPtr unitized;          // U(R)
  IdealEmbedding embedding;  // RG -> U(R)G
};

/// The natural home of witnesses like e+g when R has no unity: the group
/// ring over the unitization, with RG sitting inside as a two-sided ideal.
/// Relative annihilators r_RG(x) of extension elements x are computed
/// through the embedding.
inline ExtensionGroupRing extension_group_ring(const RingPtr& R,
                                               const FiniteGroup& G,
                                               std::string provenance = "") {
  Unitization uu = unitization(R);
  if (provenance.empty())
    provenance = "XGR(" + R->provenance() + "," + G.provenance + ")";
  RingPtr ext = group_ring(uu.ring, G, std::move(provenance));
  RingPtr sub = group_ring(R, G);

  const std::size_t kR = R->rank(), m = G.order;
  const std::size_t off = uu.ring->rank() - kR;  // 1, or 0 for trivial R
  std::vector<std::size_t> pos(kR * m);
  for (std::size_t i = 0; i < kR; ++i)
    for (std::size_t j = 0; j < m; ++j)
      pos[i * m + j] = (off + i) * m + j;
  IdealEmbedding emb = make_ideal_embedding(ext, sub, std::move(pos));
  return {std::move(ext), std::move(sub), std::move(uu.ring), std::move(emb)};
}

// ---------------------------------------------------------------------------
// Involution lifts
// ---------------------------------------------------------------------------

/// Lift an involution of R to U(R), fixing the scalar part.
inline Involution lift_involution_unitization(const Involution& inv_R,
                                              const RingPtr& U) {
  const FiniteRing& R = *inv_R.ring();
  const std::size_t kR = R.rank();
  const std::size_t off = U->rank() - kR;
  if (off > 1)
    throw InvolutionMismatchError(
        "target ring does not look like the unitization of the involution's ring");
  const std::size_t k = U->rank();
  std::vector<std::vector<std::uint32_t>> images;
  if (off == 1) {
    std::vector<std::uint32_t> s(k, 0);
    s[0] = 1;
    images.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < kR; ++i) {
    std::vector<std::uint32_t> img(k, 0);
    const auto& ri = inv_R.basis_images()[i];
    for (std::size_t t = 0; t < kR; ++t) img[off + t] = ri[t];
    images.push_back(std::move(img));
  }
  return make_involution(U, std::move(images), inv_R.name());
}

/// The group-ring involution: (sum a_g g)* = sum a_g* g^{-1}, lifted from an
/// involution of the coefficient ring. `target` must be group_ring(C, G)
/// where C is the coefficient ring of inv_coeff.
inline Involution lift_involution_group_ring(const Involution& inv_coeff,
                                             const FiniteGroup& G,
                                             const RingPtr& target) {
  const FiniteRing& C = *inv_coeff.ring();
  const std::size_t kC = C.rank(), m = G.order;
  const std::size_t k = kC * m;
  if (target->rank() != k)
    throw InvolutionMismatchError(
        "target ring rank does not match coefficient ring and group");
  for (std::size_t i = 0; i < kC; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (target->group().orders[i * m + j] != C.group().orders[i])
        throw InvolutionMismatchError(
            "target ring additive orders do not match a group ring over the "
            "coefficient ring");

  std::vector<std::vector<std::uint32_t>> images(k);
  for (std::size_t i = 0; i < kC; ++i) {
    const auto& ci = inv_coeff.basis_images()[i];
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::uint32_t> img(k, 0);
      const std::size_t jj = G.inv(j);
      for (std::size_t t = 0; t < kC; ++t) img[t * m + jj] = ci[t];
      images[i * m + j] = std::move(img);
    }
  }
  return make_involution(target, std::move(images), "star");
}

// ---------------------------------------------------------------------------
// Triangular matrix rings
// ---------------------------------------------------------------------------

/// Number of entries of an upper-triangular n x n matrix.
inline std::size_t tri_position_count(std::size_t n) {
  return n * (n + 1) / 2;
}

/// Row-major index of upper-triangular position (i, j), 1-based, i <= j.
inline std::size_t tri_position_index(std::size_t n, std::size_t i,
                                      std::size_t j) {
  // Positions (1,1)..(1,n), (2,2)..(2,n), ...
  return (i - 1) * n - (i - 1) * i / 2 + (j - 1);
}

/// T_n(R): upper-triangular n x n matrices over R with matrix multiplication.
/// Basis: R-generator major, matrix position minor; labels "<r>[i,j]".
inline RingPtr triangular_ring(const RingPtr& R, std::size_t n,
                               std::string provenance = "") {
  if (n < 1) throw RingError("matrix dimension must be >= 1");
  const std::size_t kR = R->rank();
  const std::size_t P = tri_position_count(n);
  const std::size_t k = kR * P;
  const auto& rOrders = R->group().orders;

  std::vector<std::uint32_t> orders(k);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t q = 0; q < P; ++q) orders[t * P + q] = rOrders[t];
  detail::check_construction_size(orders, "triangular matrix ring");

  // E_{t,(i,j)} * E_{s,(a,b)} = [j == a] (r_t r_s) at (i, b).
  std::vector<std::vector<std::uint32_t>> mul(k * k,
                                              std::vector<std::uint32_t>(k, 0));
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t s = 0; s < kR; ++s) {
      auto rc = R->basis_product(t, s);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
          for (std::size_t b = j; b <= n; ++b) {
            const std::size_t q1 = tri_position_index(n, i, j);
            const std::size_t q2 = tri_position_index(n, j, b);
            const std::size_t qo = tri_position_index(n, i, b);
            auto& entry = mul[(t * P + q1) * k + (s * P + q2)];
            for (std::size_t u = 0; u < kR; ++u) entry[u * P + qo] = rc[u];
          }
    }

  std::vector<std::string> labels(k);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j)
        labels[t * P + tri_position_index(n, i, j)] =
            R->label(t) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";

  std::optional<std::vector<std::uint32_t>> unity;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> named;
  if (R->unity()) {
    const auto& uR = *R->unity();
    std::vector<std::uint32_t> u(k, 0);
    for (std::size_t t = 0; t < kR; ++t)
      for (std::size_t i = 1; i <= n; ++i)
        u[t * P + tri_position_index(n, i, i)] = uR[t];
    unity = u;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        std::vector<std::uint32_t> eij(k, 0);
        for (std::size_t t = 0; t < kR; ++t)
          eij[t * P + tri_position_index(n, i, j)] = uR[t];
        named.emplace_back(
            "E[" + std::to_string(i) + "," + std::to_string(j) + "]",
            std::move(eij));
      }
  }

  if (provenance.empty())
    provenance = "T(" + R->provenance() + "," + std::to_string(n) + ")";
  return make_ring_ex(std::move(orders), std::move(mul), std::move(unity),
                      std::move(labels), std::move(provenance),
                      std::move(named));
}

/// The anti-transpose involution on T_n(R): entry (i, j) moves to
/// (n-j+1, n-i+1) with an involution of R applied entrywise.
inline Involution anti_transpose_involution(const Involution& inv_R,
                                            std::size_t n,
                                            const RingPtr& target) {
  const FiniteRing& R = *inv_R.ring();
  const std::size_t kR = R.rank();
  const std::size_t P = tri_position_count(n);
  const std::size_t k = kR * P;
  if (target->rank() != k)
    throw InvolutionMismatchError(
        "target ring rank does not match T_n over the involution's ring");

  std::vector<std::vector<std::uint32_t>> images(k);
  for (std::size_t t = 0; t < kR; ++t) {
    const auto& rt = inv_R.basis_images()[t];
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        std::vector<std::uint32_t> img(k, 0);
        const std::size_t qo = tri_position_index(n, n - j + 1, n - i + 1);
        for (std::size_t u = 0; u < kR; ++u) img[u * P + qo] = rt[u];
        images[t * P + tri_position_index(n, i, j)] = std::move(img);
      }
  }
  return make_involution(target, std::move(images), "antitranspose");
}

// ---------------------------------------------------------------------------
// Constant-diagonal triangular ring T(R, n) and R[x]/(x^n)
// ---------------------------------------------------------------------------

/// T(R, n): tuples (a_1, ..., a_n) multiplying by truncated convolution
/// (a*b)_s = sum_{u+v=s+1} a_u b_v. Realizes the constant-diagonal
/// upper-triangular matrices; basis labels "<r>@s" give the diagonal offset.
inline RingPtr const_diag_tri(const RingPtr& R, std::size_t n,
                              std::string provenance = "") {
  if (n < 1) throw RingError("tuple length must be >= 1");
  const std::size_t kR = R->rank();
  const std::size_t k = kR * n;
  const auto& rOrders = R->group().orders;

  std::vector<std::uint32_t> orders(k);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t s = 0; s < n; ++s) orders[t * n + s] = rOrders[t];
  detail::check_construction_size(orders, "constant-diagonal triangular ring");

  std::vector<std::vector<std::uint32_t>> mul(k * k,
                                              std::vector<std::uint32_t>(k, 0));
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t w = 0; w < kR; ++w) {
      auto rc = R->basis_product(t, w);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v + u < n; ++v) {
          auto& entry = mul[(t * n + u) * k + (w * n + v)];
          for (std::size_t s = 0; s < kR; ++s) entry[s * n + (u + v)] = rc[s];
        }
    }

  std::vector<std::string> labels(k);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t s = 0; s < n; ++s)
      labels[t * n + s] = R->label(t) + "@" + std::to_string(s + 1);

  std::optional<std::vector<std::uint32_t>> unity;
  if (R->unity()) {
    std::vector<std::uint32_t> u(k, 0);
    for (std::size_t t = 0; t < kR; ++t) u[t * n + 0] = (*R->unity())[t];
    unity = u;
  }

  if (provenance.empty())
    provenance = "CT(" + R->provenance() + "," + std::to_string(n) + ")";
  return make_ring_ex(std::move(orders), std::move(mul), std::move(unity),
                      std::move(labels), std::move(provenance));
}

/// R[x]/(x^n): polynomials of degree < n. Products are computed as full
/// polynomial convolutions (degree up to 2n-2) and then reduced by dropping
/// every term with exponent >= n — an independent code path from the
/// truncated convolution of const_diag_tri, used to cross-validate it.
inline RingPtr poly_quotient(const RingPtr& R, std::size_t n,
                             std::string provenance = "") {
  if (n < 1) throw RingError("quotient exponent must be >= 1");
  const std::size_t kR = R->rank();
  const std::size_t k = kR * n;
  const auto& rOrders = R->group().orders;

  std::vector<std::uint32_t> orders(k);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t s = 0; s < n; ++s) orders[t * n + s] = rOrders[t];
  detail::check_construction_size(orders, "polynomial quotient ring");

  std::vector<std::vector<std::uint32_t>> mul(k * k,
                                              std::vector<std::uint32_t>(k, 0));
  std::vector<std::vector<std::uint32_t>> full(2 * n - 1);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t w = 0; w < kR; ++w)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          // (r_t x^u)(r_w x^v): full product, then reduce mod x^n.
          for (auto& coeff : full) coeff.assign(kR, 0);
          auto rc = R->basis_product(t, w);
          std::copy(rc.begin(), rc.end(), full[u + v].begin());
          auto& entry = mul[(t * n + u) * k + (w * n + v)];
          for (std::size_t deg = 0; deg < n; ++deg)
            for (std::size_t s = 0; s < kR; ++s)
              entry[s * n + deg] = full[deg][s];
        }

  std::vector<std::string> labels(k);
  for (std::size_t t = 0; t < kR; ++t)
    for (std::size_t s = 0; s < n; ++s) {
      if (s == 0)
        labels[t * n + s] = R->label(t);
      else if (s == 1)
        labels[t * n + s] = R->label(t) + "*x";
      else
        labels[t * n + s] = R->label(t) + "*x^" + std::to_string(s);
    }

  std::optional<std::vector<std::uint32_t>> unity;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> named;
  if (R->unity()) {
    const auto& uR = *R->unity();
    std::vector<std::uint32_t> u(k, 0);
    for (std::size_t t = 0; t < kR; ++t) u[t * n + 0] = uR[t];
    named.emplace_back("1", u);
    for (std::size_t s = 1; s < n; ++s) {
      std::vector<std::uint32_t> xs(k, 0);
      for (std::size_t t = 0; t < kR; ++t) xs[t * n + s] = uR[t];
      named.emplace_back(s == 1 ? "x" : "x^" + std::to_string(s),
                         std::move(xs));
    }
    unity = std::move(u);
  }

  if (provenance.empty())
    provenance = "PQ(" + R->provenance() + "," + std::to_string(n) + ")";
  return make_ring_ex(std::move(orders), std::move(mul), std::move(unity),
                      std::move(labels), std::move(provenance),
                      std::move(named));
}

// ---------------------------------------------------------------------------
// The isomorphism R[x]/(x^n) -> T(R, n)
// ---------------------------------------------------------------------------

struct IsoReport {
  bool pass = false;
  bool exhaustive = false;       // all element pairs vs basis pairs only
  std::uint64_t pairs_checked = 0;
  std::string detail;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;
};

/// Verify phi(a_1 + a_2 x + ... + a_n x^{n-1}) = (a_1, ..., a_n) as a ring
/// isomorphism R[x]/(x^n) -> T(R, n). Both rings share the basis layout, so
/// phi is the coordinate identity; the check compares the two independently
/// built multiplications on every element pair (small rings) or on all basis
/// pairs, which proves the general case by bilinearity.
inline IsoReport iso_polyquot_consttri(const RingPtr& R, std::size_t n,
                                       std::uint64_t exhaustive_limit = 1000) {
  IsoReport rep;
  RingPtr pq = poly_quotient(R, n);
  RingPtr ct = const_diag_tri(R, n);

  if (pq->group().orders != ct->group().orders) {
    rep.detail = "additive groups differ; phi is not even an additive bijection";
    return rep;
  }
  if (pq->unity().has_value() != ct->unity().has_value() ||
      (pq->unity() && *pq->unity() != *ct->unity())) {
    rep.detail = "phi does not map unity to unity";
    return rep;
  }

  const std::size_t k = pq->rank();
  std::vector<std::uint32_t> p1(k), p2(k);
  const std::uint64_t N = pq->size();
  if (N <= exhaustive_limit) {
    rep.exhaustive = true;
    std::vector<std::uint32_t> x(k, 0), y(k);
    do {
      std::fill(y.begin(), y.end(), 0u);
      do {
        pq->mul(x, y, p1);
        ct->mul(x, y, p2);
        ++rep.pairs_checked;
        if (p1 != p2) {
          rep.counterexample = {pq->index_of(x), pq->index_of(y)};
          rep.detail = "phi(xy) != phi(x)phi(y) at the recorded element pair";
          return rep;
        }
      } while (pq->group().next(y));
    } while (pq->group().next(x));
  } else {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        auto a = pq->basis_product(i, j);
        auto b = ct->basis_product(i, j);
        ++rep.pairs_checked;
        if (!std::equal(a.begin(), a.end(), b.begin())) {
          std::vector<std::uint32_t> e(k, 0);
          e[i] = 1;
          const std::uint64_t xi = pq->index_of(e);
          std::fill(e.begin(), e.end(), 0u);
          e[j] = 1;
          rep.counterexample = {xi, pq->index_of(e)};
          rep.detail = "structure constants differ at the recorded basis pair";
          return rep;
        }
      }
  }
  rep.pass = true;
  rep.detail = rep.exhaustive
                   ? "verified multiplicativity on all element pairs"
                   : "verified structure constants on all basis pairs "
                     "(extends bilinearly)";
  return rep;
}

/// Check that T(R, n) sits inside T_n(R) as the constant-diagonal matrices:
/// the linear map sending slot s to the s-th superdiagonal is multiplicative
/// on all basis pairs.
inline bool consttri_embeds_in_triangular(const RingPtr& R, std::size_t n) {
  RingPtr ct = const_diag_tri(R, n);
  RingPtr tn = triangular_ring(R, n);
  const std::size_t kR = R->rank();
  const std::size_t P = tri_position_count(n);
  const std::size_t kc = ct->rank(), kt = tn->rank();

  auto embed = [&](std::span<const std::uint32_t> c,
                   std::span<std::uint32_t> out) {
    std::fill(out.begin(), out.end(), 0u);
    for (std::size_t t = 0; t < kR; ++t)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 1; i + s <= n; ++i)
          out[t * P + tri_position_index(n, i, i + s)] = c[t * n + s];
  };

  std::vector<std::uint32_t> ei(kc), ej(kc), prod(kc);
  std::vector<std::uint32_t> mi(kt), mj(kt), mprod(kt), expect(kt);
  for (std::size_t i = 0; i < kc; ++i)
    for (std::size_t j = 0; j < kc; ++j) {
      std::fill(ei.begin(), ei.end(), 0u);
      ei[i] = 1;
      std::fill(ej.begin(), ej.end(), 0u);
      ej[j] = 1;
      ct->mul(ei, ej, prod);
      embed(ei, mi);
      embed(ej, mj);
      tn->mul(mi, mj, mprod);
      embed(prod, expect);
      if (mprod != expect) return false;
    }
  return true;
}

}  // namespace ringlab
