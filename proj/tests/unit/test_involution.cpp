#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

TEST_CASE("identity involution on a commutative ring acts as the identity") {
  RingPtr z4 = integers_mod(4);
  Involution id = Involution::identity(z4);
  REQUIRE(id.ring() == z4.get());
  REQUIRE(id.name() == "identity");
  REQUIRE(id.basis_images() ==
          std::vector<std::vector<std::uint32_t>>{{1}});
  for (std::uint64_t i = 0; i < z4->size(); ++i)
    REQUIRE(id.apply_index(i) == i);
}

TEST_CASE("identity map is rejected on a non-commutative ring") {
  RingPtr T = triangular_ring(integers_mod(4), 2);
  try {
    Involution::identity(T);
    FAIL("expected NotAntiMultiplicativeError");
  } catch (const NotAntiMultiplicativeError& e) {
    // the rejection names a concrete basis pair where (xy)* != y*x*
    REQUIRE(std::string(e.what()).find("sigma(e_") != std::string::npos);
  }
}

TEST_CASE("anti-transpose involution on upper triangular matrices") {
  RingPtr z4 = integers_mod(4);
  RingPtr T = triangular_ring(z4, 2);
  Involution sigma = anti_transpose_involution(Involution::identity(z4), 2, T);

  RingElement e11 = parse_element(T, "E[1,1]");
  RingElement e12 = parse_element(T, "E[1,2]");
  RingElement e22 = parse_element(T, "E[2,2]");
  REQUIRE(sigma(e11) == e22);
  REQUIRE(sigma(e22) == e11);
  REQUIRE(sigma(e12) == e12);
  REQUIRE(sigma(*T->unity_element()) == *T->unity_element());

  // involutive on every element, and genuinely anti-multiplicative
  for (std::uint64_t i = 0; i < T->size(); ++i)
    REQUIRE(sigma.apply_index(sigma.apply_index(i)) == i);
  RingElement x = T->element({1, 2, 3});
  RingElement y = T->element({2, 1, 0});
  REQUIRE(sigma(x * y) == sigma(y) * sigma(x));
  REQUIRE(sigma(x * y) != sigma(x) * sigma(y));
}

TEST_CASE("group-ring involution inverts group positions") {
  RingPtr z4 = integers_mod(4);
  FiniteGroup c3 = cyclic_group(3);
  RingPtr S = group_ring(z4, c3);
  Involution star = lift_involution_group_ring(Involution::identity(z4), c3, S);

  REQUIRE(star(parse_element(S, "3*g")) == parse_element(S, "3*g^2"));
  REQUIRE(star(parse_element(S, "g^2")) == parse_element(S, "g"));
  REQUIRE(star(parse_element(S, "e")) == parse_element(S, "e"));
  RingElement u = parse_element(S, "e + 2*g + 3*g^2");
  REQUIRE(star(u) == parse_element(S, "e + 3*g + 2*g^2"));
  for (std::uint64_t i = 0; i < S->size(); ++i)
    REQUIRE(star.apply_index(star.apply_index(i)) == i);
}

TEST_CASE("unitization lift of the identity acts as the identity") {
  RingPtr R = fine_ring(FineKind::A, 3);
  Unitization u = unitization(R);
  Involution lifted = lift_involution_unitization(Involution::identity(R),
                                                  u.ring);
  for (std::uint64_t i = 0; i < u.ring->size(); ++i)
    REQUIRE(lifted.apply_index(i) == i);
}

TEST_CASE("negation is a valid involution exactly when it respects products") {
  // on a null ring every additive involution works, negation included
  RingPtr D = fine_ring(FineKind::D, 3);
  Involution neg = make_involution(D, {{2, 0}, {0, 2}}, "negation");
  RingElement a = D->element({1, 0});
  REQUIRE(neg(a) == D->element({2, 0}));

  // on Z/5, u -> 4u squares to the identity but breaks (xy)* = y*x*
  REQUIRE_THROWS_AS(make_involution(integers_mod(5), {{4}}),
                    NotAntiMultiplicativeError);
  // and u -> 2u does not even square to the identity
  REQUIRE_THROWS_AS(make_involution(integers_mod(5), {{2}}),
                    NotInvolutiveError);
}

TEST_CASE("involution factory validates its inputs") {
  RingPtr z4 = integers_mod(4);
  // wrong number of images
  REQUIRE_THROWS_AS(make_involution(z4, {}), RingError);
  // image coordinates out of range
  REQUIRE_THROWS_AS(make_involution(z4, {{7}}), RingError);
  // image of an order-2 generator must itself be killed by 2
  RingPtr mixed = make_ring(
      {2, 3}, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
  REQUIRE_THROWS_AS(make_involution(mixed, {{0, 1}, {0, 1}}), RingError);
}

TEST_CASE("involutions refuse elements of other rings") {
  Involution id4 = Involution::identity(integers_mod(4));
  RingPtr z6 = integers_mod(6);
  REQUIRE_THROWS_AS(id4(z6->element({1})), InvolutionMismatchError);
}

TEST_CASE("lifts validate the shape of the target ring") {
  RingPtr z4 = integers_mod(4);
  FiniteGroup c3 = cyclic_group(3);
  RingPtr wrong = group_ring(z4, cyclic_group(2));
  REQUIRE_THROWS_AS(
      lift_involution_group_ring(Involution::identity(z4), c3, wrong),
      InvolutionMismatchError);
  REQUIRE_THROWS_AS(
      anti_transpose_involution(Involution::identity(z4), 3, wrong),
      InvolutionMismatchError);
}
