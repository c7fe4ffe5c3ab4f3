#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

TEST_CASE("Z/4: generalized right p.p. holds but right Rickart fails") {
  RingPtr R = integers_mod(4);

  PropertyVerdict gpp = is_generalized_right_pp(*R);
  REQUIRE(gpp.holds);
  REQUIRE_FALSE(gpp.witness.has_value());
  REQUIRE(gpp.idempotents_scanned == 2);
  REQUIRE(gpp.elements_scanned == 4);

  // r(2) = {0, 2} is not e*Z4 for e idempotent, but r(2^2) = r(0) = Z4 is
  PropertyVerdict rr = is_right_rickart(*R);
  REQUIRE_FALSE(rr.holds);
  REQUIRE(rr.witness == 2);
  REQUIRE(rr.nonzero_witness == 2);
  REQUIRE(rr.chain_sizes == std::vector<std::uint64_t>{2});

  PropertyVerdict baer = is_baer(*R);
  REQUIRE_FALSE(baer.holds);
  REQUIRE(baer.witness == 2);

  REQUIRE(is_abelian(*R).holds);
  REQUIRE(is_left_rickart(*R).holds == rr.holds);
}

TEST_CASE("Z/6: the full Rickart family holds") {
  RingPtr R = integers_mod(6);
  REQUIRE(is_right_rickart(*R).holds);
  REQUIRE(is_left_rickart(*R).holds);
  REQUIRE(is_generalized_right_pp(*R).holds);
  REQUIRE(is_baer(*R).holds);
  Involution id = Involution::identity(R);
  PropertyVerdict rs = is_rickart_star(*R, id);
  REQUIRE(rs.holds);
  REQUIRE(rs.projections_scanned == 4);  // identity fixes all 4 idempotents
  REQUIRE(is_generalized_rickart_star(*R, id).holds);
}

TEST_CASE("B(3): a nonzero ring whose only idempotent is 0 fails everything") {
  RingPtr R = fine_ring(FineKind::B, 3);

  // every product vanishes, so r(x) = R for all x, never the zero ideal {0}
  PropertyVerdict gpp = is_generalized_right_pp(*R);
  REQUIRE_FALSE(gpp.holds);
  REQUIRE(gpp.witness == 0);  // even x = 0 fails: r(0) = R != {0} = 0R
  REQUIRE(gpp.nonzero_witness == 1);
  REQUIRE(gpp.idempotents_scanned == 1);
  REQUIRE(gpp.chain_sizes == std::vector<std::uint64_t>{9});

  Involution id = Involution::identity(R);
  REQUIRE_FALSE(is_generalized_rickart_star(*R, id).holds);
}

TEST_CASE("condition (i): injectivity of multiplication by m on the additive group") {
  RingPtr A = fine_ring(FineKind::A, 3);
  PropertyVerdict ok = condition_i(*A, 2);
  REQUIRE(ok.holds);
  REQUIRE_FALSE(ok.witness.has_value());

  PropertyVerdict bad = condition_i(*A, 3);
  REQUIRE_FALSE(bad.holds);
  REQUIRE(bad.witness == 3);  // 3 * (3a) = 9a = 0 with 3a != 0

  REQUIRE_THROWS_AS(condition_i(*A, 1), RingError);
}

TEST_CASE("quadratic equation scan") {
  // in A(3): 2x^2 - x = (6t^2 - t)a over t mod 9, zero only at t = 0
  PropertyVerdict triv = trivial_quadratic(*fine_ring(FineKind::A, 3), 2, -1);
  REQUIRE(triv.holds);
  REQUIRE_FALSE(triv.witness.has_value());

  // in Z/6: 2*4 - 2 = 6 = 0, so x = 2 is a nonzero solution
  PropertyVerdict sol = trivial_quadratic(*integers_mod(6), 2, -1);
  REQUIRE_FALSE(sol.holds);
  REQUIRE(sol.witness == 2);
}

TEST_CASE("abelian fails on triangular matrices") {
  RingPtr T = triangular_ring(integers_mod(4), 2);
  PropertyVerdict v = is_abelian(*T);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness == 1);  // E[2,2] does not commute with E[1,2] + E[2,2]
}

TEST_CASE("Baer decision refuses rings beyond its cap") {
  RingPtr big = group_ring(fine_ring(FineKind::A, 3), cyclic_group(4));
  REQUIRE(big->size() == 6561);
  REQUIRE_THROWS_AS(is_baer(*big), CapExceededError);
}

TEST_CASE("witness-mode refutation through the group-ring embedding") {
  ExtensionGroupRing x = extension_group_ring(fine_ring(FineKind::A, 3),
                                              cyclic_group(2));
  RingElement e = x.extension->element(*x.extension->find_named("e"));
  RingElement g = x.extension->element(*x.extension->find_named("g"));

  PropertyVerdict refuted = refute_gen_pp_with_witness(x.embedding, e + g);
  REQUIRE_FALSE(refuted.holds);
  REQUIRE(refuted.mode == "witness-only");
  REQUIRE(refuted.witness == (e + g).index());
  REQUIRE_FALSE(refuted.degenerate);
  // r_S(e+g) = {a*e - a*g} has 9 members and the chain stabilizes at once
  REQUIRE(refuted.chain_sizes == std::vector<std::uint64_t>{9});
  bool mentions_refuted = false;
  for (const auto& n : refuted.notes)
    if (n.find("refuted") != std::string::npos) mentions_refuted = true;
  REQUIRE(mentions_refuted);

  // the ambient unity does not refute: r_S(1) = {0} = 0*S
  PropertyVerdict inconclusive =
      refute_gen_pp_with_witness(x.embedding, *x.extension->unity_element());
  REQUIRE(inconclusive.holds);

  // witnesses must come from the ambient ring
  REQUIRE_THROWS_AS(
      refute_gen_pp_with_witness(x.embedding, x.subring->element({1, 0})),
      RingMismatchError);
}

TEST_CASE("right ideal lattices of small rings") {
  auto z4 = enumerate_right_ideals(*integers_mod(4));
  REQUIRE(z4.size() == 3);
  auto b3 = enumerate_right_ideals(*fine_ring(FineKind::B, 3));
  REQUIRE(b3.size() == 3);
  REQUIRE_THROWS_AS(enumerate_right_ideals(*integers_mod(4), 2),
                    CapExceededError);

  ArtinianCertificate cert = artinian_certificate(*integers_mod(4));
  REQUIRE(cert.artinian);
  REQUIRE(cert.element_count == 4);
  REQUIRE(cert.right_ideal_count == 3);
  REQUIRE_FALSE(cert.justification.empty());
}

TEST_CASE("worker count does not change verdicts or witnesses") {
  for (RingPtr R : {integers_mod(4), fine_ring(FineKind::B, 3),
                    group_ring(integers_mod(4), cyclic_group(2))}) {
    DeciderOptions one, four;
    one.workers = 1;
    four.workers = 4;
    PropertyVerdict a = is_generalized_right_pp(*R, one);
    PropertyVerdict b = is_generalized_right_pp(*R, four);
    REQUIRE(a.holds == b.holds);
    REQUIRE(a.witness == b.witness);
    REQUIRE(a.nonzero_witness == b.nonzero_witness);
    REQUIRE(a.chain_sizes == b.chain_sizes);
  }
}

TEST_CASE("deciders respect explicit caps") {
  DeciderOptions tiny;
  tiny.cap = 8;
  REQUIRE_THROWS_AS(is_generalized_right_pp(*integers_mod(12), tiny),
                    CapExceededError);
}
