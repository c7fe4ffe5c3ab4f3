#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/annihilators.hpp"
#include "ringlab/embedding.hpp"
#include "ringlab/idempotents.hpp"
#include "ringlab/involution.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subset.hpp"
#include "ringlab/util.hpp"

namespace ringlab {

struct DeciderOptions {
  std::uint64_t cap = 0;  // 0 -> exhaustive_cap()
  unsigned workers = 1;
  bool memoize = true;  // build the product table when the ring is small
};

/// Outcome of a property decision. In exhaustive mode a false verdict
/// carries the canonical-order minimal failing element as `witness`
/// (flagged degenerate when it is 0, with the minimal nonzero failure
/// reported separately); a true verdict carries no witness.
struct PropertyVerdict {
  std::string property;
  bool holds = false;
  std::string mode;  // "exhaustive" | "witness-only"
  std::optional<std::uint64_t> witness;
  bool degenerate = false;
  std::optional<std::uint64_t> nonzero_witness;
  std::vector<std::uint64_t> chain_sizes;  // annihilator sizes per power of the witness
  std::uint64_t idempotents_scanned = 0;
  std::uint64_t projections_scanned = 0;
  std::uint64_t elements_scanned = 0;
  std::vector<std::string> notes;
};

namespace detail {

inline void note_witness(PropertyVerdict& v, std::optional<std::uint64_t> min_fail,
                         std::optional<std::uint64_t> min_nonzero_fail) {
  v.holds = !min_fail.has_value();
  if (min_fail) {
    v.witness = *min_fail;
    v.degenerate = (*min_fail == 0);
    if (min_nonzero_fail) v.nonzero_witness = *min_nonzero_fail;
  }
}

inline void prepare_ring(const FiniteRing& R, const DeciderOptions& opts) {
  if (opts.memoize && R.size() <= product_table_cap())
    R.build_product_table(opts.workers);
}

inline std::uint64_t effective_cap(const DeciderOptions& opts) {
  return opts.cap ? opts.cap : exhaustive_cap();
}

inline void require_within_cap(const FiniteRing& R, const DeciderOptions& opts,
                               const char* what) {
  const std::uint64_t cap = effective_cap(opts);
  if (R.size() > cap) throw CapExceededError(R.size(), cap, what);
}

inline std::string format_coords(const FiniteRing& R, std::uint64_t idx) {
  std::vector<std::uint32_t> c(R.rank());
  R.decode(idx, c);
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

/// Deduplicated principal ideals of the given generators.
inline std::vector<ElementSubset> principal_ideal_sets(
    const std::vector<RingElement>& gens, Side side) {
  std::vector<ElementSubset> sets;
  for (const RingElement& e : gens) {
    ElementSubset s = principal_ideal(e, side);
    bool fresh = true;
    for (const auto& t : sets)
      if (t == s) {
        fresh = false;
        break;
      }
    if (fresh) sets.push_back(std::move(s));
  }
  return sets;
}

/// Does any annihilator in the (possibly truncated) chain of x equal one of
/// the candidate generated ideals? Appends the visited chain sizes when
/// `sizes` is given. Annihilator closure is skipped in this hot path; the
/// ideal property of annihilators is covered by its own assertions and tests.
inline bool chain_matches(const FiniteRing& R, const RingElement& x,
                          const std::vector<ElementSubset>& sets, Side side,
                          bool whole_chain,
                          std::vector<std::uint64_t>* sizes = nullptr) {
  AnnihilatorOptions aopts;
  aopts.assert_tag = false;
  RingElement p = x;
  ElementSubset prev(&R);
  bool have_prev = false;
  while (true) {
    ElementSubset ann = annihilator(p, side, aopts);
    if (have_prev && ann == prev) return false;  // stabilized without a match
    if (sizes) sizes->push_back(ann.count());
    for (const auto& s : sets)
      if (ann == s) return true;
    if (!whole_chain) return false;
    prev = std::move(ann);
    have_prev = true;
    p = p * x;
  }
}

/// Shared scan for the Rickart-family deciders: x ranges over the whole
/// ring; success for x means some annihilator in its (chain of) powers is a
/// principal ideal of one of the generators.
inline PropertyVerdict annihilator_generated_scan(
    const FiniteRing& R, std::string property, Side side, bool whole_chain,
    const std::vector<ElementSubset>& sets, const DeciderOptions& opts) {
  PropertyVerdict v;
  v.property = std::move(property);
  v.mode = "exhaustive";
  const std::uint64_t n = R.size();
  v.elements_scanned = n;

  const unsigned nw = std::max(1u, opts.workers);
  std::vector<std::optional<std::uint64_t>> min_fail(nw), min_nz(nw);
  parallel_chunks(n, nw, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      if (min_fail[w] && min_nz[w]) break;  // both minima already found
      RingElement x = R.element_at(xi);
      if (!chain_matches(R, x, sets, side, whole_chain)) {
        if (!min_fail[w]) min_fail[w] = xi;
        if (!min_nz[w] && xi != 0) min_nz[w] = xi;
      }
    }
  });

  std::optional<std::uint64_t> fail, nz;
  for (unsigned w = 0; w < nw; ++w) {
    if (min_fail[w] && (!fail || *min_fail[w] < *fail)) fail = min_fail[w];
    if (min_nz[w] && (!nz || *min_nz[w] < *nz)) nz = min_nz[w];
  }
  note_witness(v, fail, nz);
  if (fail)
    chain_matches(R, R.element_at(*fail), sets, side, whole_chain,
                  &v.chain_sizes);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hypothesis conditions of the main constructions
// ---------------------------------------------------------------------------

/// Condition (i): multiplication by m is injective on (R, +). Decided two
/// independent ways — gcd(m, additive exponent) = 1 and an exhaustive kernel
/// scan — which are required to agree.
inline PropertyVerdict condition_i(const FiniteRing& R, std::uint64_t m,
                                   DeciderOptions opts = {}) {
  if (m < 2) throw RingError("condition (i) requires m >= 2");
  detail::require_within_cap(R, opts, "condition (i) scan exceeds cap");

  PropertyVerdict v;
  v.property = "condition-i";
  v.mode = "exhaustive";
  v.notes.push_back("m = " + std::to_string(m));
  const std::uint64_t n = R.size();
  v.elements_scanned = n;

  const bool coprime = std::gcd(m, R.additive_exponent()) == 1;

  const std::size_t k = R.rank();
  const unsigned nw = std::max(1u, opts.workers);
  std::vector<std::optional<std::uint64_t>> min_fail(nw);
  parallel_chunks(n, nw, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> x(k), mx(k);
    R.decode(lo, x);
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      if (xi != 0 && !min_fail[w]) {
        R.scale(static_cast<long long>(m), x, mx);
        if (R.is_zero(mx)) min_fail[w] = xi;
      }
      R.group().next(x);
    }
  });
  std::optional<std::uint64_t> fail;
  for (auto& f : min_fail)
    if (f && (!fail || *f < *fail)) fail = f;

  if (coprime == fail.has_value())
    throw RingError(
        "internal invariant violation: condition (i) gcd shortcut and "
        "exhaustive kernel scan disagree");

  detail::note_witness(v, fail, fail);
  v.notes.push_back(coprime ? "gcd(m, exponent) = 1 confirmed by kernel scan"
                            : "gcd(m, exponent) > 1 confirmed by kernel scan");
  return v;
}

/// Solutions of c*x^2 + d*x = 0. Holds when x = 0 is the only one; the
/// witness is the minimal nonzero solution otherwise.
inline PropertyVerdict trivial_quadratic(const FiniteRing& R, long long c,
                                         long long d, DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "quadratic-equation scan exceeds cap");

  PropertyVerdict v;
  v.property = "trivial-quadratic";
  v.mode = "exhaustive";
  v.notes.push_back("coefficients (c, d) = (" + std::to_string(c) + ", " +
                    std::to_string(d) + ")");
  const std::uint64_t n = R.size();
  v.elements_scanned = n;

  const std::size_t k = R.rank();
  const unsigned nw = std::max(1u, opts.workers);
  std::vector<std::optional<std::uint64_t>> min_sol(nw);
  std::vector<std::uint64_t> counts(nw, 0);
  parallel_chunks(n, nw, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> x(k), sq(k), lhs(k), dx(k);
    R.decode(lo, x);
    for (std::uint64_t xi = lo; xi < hi; ++xi) {
      R.mul(x, x, sq);
      R.scale(c, sq, lhs);
      R.scale(d, x, dx);
      R.group().add(lhs, dx, sq);  // sq reused as c*x^2 + d*x
      if (R.is_zero(sq)) {
        ++counts[w];
        if (xi != 0 && !min_sol[w]) min_sol[w] = xi;
      }
      R.group().next(x);
    }
  });

  std::uint64_t solutions = 0;
  std::optional<std::uint64_t> nz;
  for (unsigned w = 0; w < nw; ++w) {
    solutions += counts[w];
    if (min_sol[w] && (!nz || *min_sol[w] < *nz)) nz = min_sol[w];
  }
  v.notes.push_back("solutions found: " + std::to_string(solutions));
  detail::note_witness(v, nz, nz);
  return v;
}

// ---------------------------------------------------------------------------
// Rickart-family deciders
// ---------------------------------------------------------------------------

inline PropertyVerdict is_generalized_right_pp(const FiniteRing& R,
                                               DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "generalized right p.p. scan exceeds cap");
  detail::prepare_ring(R, opts);
  auto gens = enumerate_idempotents(R, detail::effective_cap(opts), opts.workers);
  auto sets = detail::principal_ideal_sets(gens, Side::Right);
  PropertyVerdict v = detail::annihilator_generated_scan(
      R, "generalized right p.p.", Side::Right, true, sets, opts);
  v.idempotents_scanned = gens.size();
  return v;
}

inline PropertyVerdict is_right_rickart(const FiniteRing& R,
                                        DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "right Rickart scan exceeds cap");
  detail::prepare_ring(R, opts);
  auto gens = enumerate_idempotents(R, detail::effective_cap(opts), opts.workers);
  auto sets = detail::principal_ideal_sets(gens, Side::Right);
  PropertyVerdict v = detail::annihilator_generated_scan(
      R, "right Rickart", Side::Right, false, sets, opts);
  v.idempotents_scanned = gens.size();
  return v;
}

inline PropertyVerdict is_left_rickart(const FiniteRing& R,
                                       DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "left Rickart scan exceeds cap");
  detail::prepare_ring(R, opts);
  auto gens = enumerate_idempotents(R, detail::effective_cap(opts), opts.workers);
  auto sets = detail::principal_ideal_sets(gens, Side::Left);
  PropertyVerdict v = detail::annihilator_generated_scan(
      R, "left Rickart", Side::Left, false, sets, opts);
  v.idempotents_scanned = gens.size();
  return v;
}

inline PropertyVerdict is_rickart_star(const FiniteRing& R,
                                       const Involution& inv,
                                       DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "Rickart * scan exceeds cap");
  detail::prepare_ring(R, opts);
  auto idem = enumerate_idempotents(R, detail::effective_cap(opts), opts.workers);
  auto projs = enumerate_projections(R, inv, detail::effective_cap(opts),
                                     opts.workers);
  auto sets = detail::principal_ideal_sets(projs, Side::Right);
  PropertyVerdict v = detail::annihilator_generated_scan(
      R, "Rickart *", Side::Right, false, sets, opts);
  v.idempotents_scanned = idem.size();
  v.projections_scanned = projs.size();
  return v;
}

inline PropertyVerdict is_generalized_rickart_star(const FiniteRing& R,
                                                   const Involution& inv,
                                                   DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "generalized Rickart * scan exceeds cap");
  detail::prepare_ring(R, opts);
  auto idem = enumerate_idempotents(R, detail::effective_cap(opts), opts.workers);
  auto projs = enumerate_projections(R, inv, detail::effective_cap(opts),
                                     opts.workers);
  auto sets = detail::principal_ideal_sets(projs, Side::Right);
  PropertyVerdict v = detail::annihilator_generated_scan(
      R, "generalized Rickart *", Side::Right, true, sets, opts);
  v.idempotents_scanned = idem.size();
  v.projections_scanned = projs.size();
  return v;
}

/// Baer: the annihilator of every nonempty subset is idempotent-generated.
/// Since r(X) is the intersection of the r(x) for x in X, the subset
/// annihilators are exactly the intersection-closure of the element
/// annihilators, which keeps the search finite.
inline PropertyVerdict is_baer(const FiniteRing& R, DeciderOptions opts = {}) {
  if (opts.cap == 0) opts.cap = std::uint64_t{1} << 12;
  detail::require_within_cap(R, opts, "Baer decision exceeds cap");
  detail::prepare_ring(R, opts);

  PropertyVerdict v;
  v.property = "Baer";
  v.mode = "exhaustive";
  const std::uint64_t n = R.size();
  v.elements_scanned = n;

  auto gens = enumerate_idempotents(R, opts.cap, opts.workers);
  v.idempotents_scanned = gens.size();
  auto sets = detail::principal_ideal_sets(gens, Side::Right);

  AnnihilatorOptions aopts;
  aopts.assert_tag = false;
  struct Entry {
    ElementSubset ann;
    std::optional<std::uint64_t> source;  // an x with r(x) = ann, when known
  };
  std::vector<Entry> closure;
  auto push_unique = [&](ElementSubset s, std::optional<std::uint64_t> src) {
    for (const auto& e : closure)
      if (e.ann == s) return;
    closure.push_back({std::move(s), src});
  };
  for (std::uint64_t xi = 0; xi < n; ++xi)
    push_unique(annihilator(R.element_at(xi), Side::Right, aopts), xi);
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSubset meet = closure[i].ann;
      meet.intersect(closure[j].ann);
      push_unique(std::move(meet), std::nullopt);
    }
  v.notes.push_back("distinct subset annihilators: " +
                    std::to_string(closure.size()));

  std::optional<std::uint64_t> fail, nz;
  bool intersection_failure = false;
  for (const auto& e : closure) {
    bool matched = false;
    for (const auto& s : sets)
      if (s == e.ann) {
        matched = true;
        break;
      }
    if (!matched) {
      if (e.source) {
        if (!fail || *e.source < *fail) fail = e.source;
        if (*e.source != 0 && (!nz || *e.source < *nz)) nz = e.source;
      } else {
        intersection_failure = true;
      }
    }
  }
  detail::note_witness(v, fail, nz);
  if (intersection_failure) {
    v.holds = false;
    v.notes.push_back(
        "a non-generated annihilator arises as an intersection of element "
        "annihilators, not from a single element");
  }
  return v;
}

/// Abelian: every idempotent is central.
inline PropertyVerdict is_abelian(const FiniteRing& R, DeciderOptions opts = {}) {
  detail::require_within_cap(R, opts, "abelian check exceeds cap");
  detail::prepare_ring(R, opts);

  PropertyVerdict v;
  v.property = "abelian";
  v.mode = "exhaustive";
  const std::uint64_t n = R.size();
  v.elements_scanned = n;
  auto gens = enumerate_idempotents(R, detail::effective_cap(opts), opts.workers);
  v.idempotents_scanned = gens.size();

  if (R.is_commutative()) {
    v.holds = true;
    v.notes.push_back("ring is commutative, so every idempotent is central");
    return v;
  }

  const std::size_t k = R.rank();
  std::vector<std::uint32_t> x(k), ex(k), xe(k);
  std::optional<std::uint64_t> fail;
  std::optional<std::uint64_t> nz;
  for (std::uint64_t xi = 0; xi < n && !fail; ++xi) {
    R.decode(xi, x);
    for (const auto& e : gens) {
      R.mul(e.c, x, ex);
      R.mul(x, e.c, xe);
      if (ex != xe) {
        fail = xi;
        if (xi != 0) nz = xi;
        v.notes.push_back("idempotent " + detail::format_coords(R, e.index()) +
                          " fails to commute with the witness");
        break;
      }
    }
  }
  detail::note_witness(v, fail, nz);
  return v;
}

// ---------------------------------------------------------------------------
// Witness-mode refutation through an ideal embedding
// ---------------------------------------------------------------------------

/// Refute "generalized right p.p." (or its * version) for the embedded ring
/// S using a single witness x from the ambient ring: compute the relative
/// annihilator chain of x inside S and verify no term is a principal right
/// ideal of an idempotent (projection) of S. The zero ideal {0} = 0S is one
/// of those, so every term must in particular be nonzero.
///
/// holds = false means the refutation succeeded (the property fails for
/// every exponent on this witness); holds = true means the witness does not
/// refute and nothing is concluded about the property itself.
inline PropertyVerdict refute_gen_pp_with_witness(
    const IdealEmbedding& emb, const RingElement& x,
    bool use_projections = false, const Involution* inv = nullptr,
    DeciderOptions opts = {}) {
  const FiniteRing& S = *emb.sub;
  if (x.ring != emb.ambient.get())
    throw RingMismatchError("witness must belong to the ambient ring");
  if (use_projections && (inv == nullptr || inv->ring() != &S))
    throw InvolutionMismatchError(
        "projection-based refutation needs an involution validated on the "
        "embedded ring");
  detail::require_within_cap(S, opts, "idempotent scan of the embedded ring "
                                      "exceeds cap");
  detail::prepare_ring(S, opts);

  PropertyVerdict v;
  v.property = use_projections ? "generalized Rickart *" : "generalized right p.p.";
  v.mode = "witness-only";
  v.elements_scanned = S.size();
  v.witness = x.index();
  v.degenerate = x.is_zero();

  auto idem = enumerate_idempotents(S, detail::effective_cap(opts), opts.workers);
  v.idempotents_scanned = idem.size();
  std::vector<RingElement> gens;
  if (use_projections) {
    gens = enumerate_projections(S, *inv, detail::effective_cap(opts),
                                 opts.workers);
    v.projections_scanned = gens.size();
  } else {
    gens = idem;
  }
  auto sets = detail::principal_ideal_sets(gens, Side::Right);

  AnnihilatorOptions aopts;
  aopts.workers = opts.workers;
  auto chain = annihilator_chain_in_embedding(emb, x, Side::Right, aopts);
  bool matched = false;
  std::size_t matched_power = 0;
  for (std::size_t i = 0; i < chain.size() && !matched; ++i) {
    v.chain_sizes.push_back(chain[i].count());
    for (const auto& s : sets)
      if (s == chain[i]) {
        matched = true;
        matched_power = i + 1;
        break;
      }
  }
  for (std::size_t i = v.chain_sizes.size(); i < chain.size(); ++i)
    v.chain_sizes.push_back(chain[i].count());

  v.notes.push_back(emb.contains(x)
                        ? "witness lies inside the embedded ring"
                        : "witness lies in the ambient ring, outside the "
                          "embedded ideal");
  if (auto nzm = chain.front().next_index(0))
    v.notes.push_back("first chain term contains the nonzero member " +
                      detail::format_coords(S, *nzm));

  if (matched) {
    v.holds = true;  // not a refutation
    v.notes.push_back(
        "not a refutation: the annihilator of power " +
        std::to_string(matched_power) +
        " is a principal right ideal of a scanned generator");
  } else {
    v.holds = false;
    v.notes.push_back(
        "refuted: the chain stabilizes after " +
        std::to_string(chain.size()) +
        " term(s) and no term is generated by any scanned " +
        std::string(use_projections ? "projection" : "idempotent"));
  }
  return v;
}

}  // namespace ringlab
