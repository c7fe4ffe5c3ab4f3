#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

TEST_CASE("construction expressions print back to their canonical form") {
  for (const char* text :
       {"A(3)", "B(5)", "Dalt(7)", "Z(12)", "GR(A(3),C2)", "XGR(B(5),C3)",
        "U(D(3))", "T(Z(4),2)", "CT(A(3),2)", "PQ(Z(6),3)",
        "T(GR(U(C(3)),C2),3)"})
    REQUIRE(to_string(parse_construction(text)) == text);
}

TEST_CASE("whitespace is accepted and normalized away") {
  ExprPtr e = parse_construction("  GR( A(3) ,  C2 ) ");
  REQUIRE(to_string(e) == "GR(A(3),C2)");
  REQUIRE(expr_equal(e, parse_construction("GR(A(3),C2)")));
}

TEST_CASE("random expressions round-trip through print and parse") {
  SplitMix64 rng(20250814);
  for (int i = 0; i < 200; ++i) {
    ExprPtr e = random_expr(rng, 3);
    ExprPtr back = parse_construction(to_string(e));
    INFO(to_string(e));
    REQUIRE(expr_equal(e, back));
    REQUIRE(to_string(back) == to_string(e));
  }
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const std::string& text) -> std::size_t {
    try {
      parse_construction(text);
    } catch (const ExprParseError& e) {
      return e.pos;
    }
    FAIL("expected ExprParseError for: " + text);
    return SIZE_MAX;
  };
  REQUIRE(pos_of("Q(3)") == 0);
  REQUIRE(pos_of("A(x)") == 2);
  REQUIRE(pos_of("A(3") == 3);
  REQUIRE(pos_of("A(3))") == 4);
  REQUIRE(pos_of("GR(A(3)C2)") == 7);
  REQUIRE(pos_of("T(Z(4),0)") < std::string("T(Z(4),0)").size());
  REQUIRE(pos_of("") == 0);
}

TEST_CASE("evaluation produces the advertised rings") {
  REQUIRE(evaluate(parse_construction("Z(9)")).ring->size() == 9);
  REQUIRE(evaluate(parse_construction("GR(A(3),C2)")).ring->size() == 81);
  REQUIRE(evaluate(parse_construction("T(Z(4),2)")).ring->size() == 64);
  REQUIRE(evaluate(parse_construction("CT(A(3),2)")).ring->size() == 81);
  REQUIRE(evaluate(parse_construction("PQ(Z(6),3)")).ring->size() == 216);

  EvaluatedConstruction u = evaluate(parse_construction("U(D(3))"));
  REQUIRE(u.ring->size() == 27);
  REQUIRE(u.unitized.has_value());
  REQUIRE_FALSE(u.extension.has_value());

  EvaluatedConstruction x = evaluate(parse_construction("XGR(B(3),C2)"));
  REQUIRE(x.extension.has_value());
  REQUIRE(x.ring->size() == 6561);
  REQUIRE(x.extension->subring->size() == 81);
  REQUIRE(x.extension->unitized->size() == 81);
}

TEST_CASE("groups can come from Cayley-table files") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "ringlab_test_c2.json";
  {
    std::ofstream out(path);
    out << R"({"table": [[0, 1], [1, 0]], "labels": ["e", "g"]})";
  }
  const std::string expr_text = "GR(Z(4),@" + path.string() + ")";
  ExprPtr e = parse_construction(expr_text);
  REQUIRE(to_string(e) == expr_text);
  REQUIRE(evaluate(e).ring->size() == 16);

  FiniteGroup g = group_from_file(path.string());
  REQUIRE(g.order == 2);
  REQUIRE(g.provenance == "@" + path.string());

  GroupRef ref = parse_group_ref("C3");
  REQUIRE_FALSE(ref.from_file);
  REQUIRE(ref.order == 3);

  REQUIRE_THROWS_AS(group_from_file("/nonexistent/nowhere.json"),
                    ExprParseError);
  const fs::path bad = fs::temp_directory_path() / "ringlab_test_bad.json";
  {
    std::ofstream out(bad);
    out << "this is not json";
  }
  REQUIRE_THROWS_AS(group_from_file(bad.string()), ExprParseError);
  fs::remove(path);
  fs::remove(bad);
}

TEST_CASE("involutions resolve against the construction shape") {
  ExprPtr gr = parse_construction("GR(Z(4),C3)");
  EvaluatedConstruction ev = evaluate(gr);
  Involution star = resolve_involution(gr, ev, "star");
  REQUIRE(star(parse_element(ev.ring, "g")) == parse_element(ev.ring, "g^2"));

  ExprPtr xgr = parse_construction("XGR(A(3),C2)");
  EvaluatedConstruction xev = evaluate(xgr);
  Involution xstar = resolve_involution(xgr, xev, "star");
  REQUIRE(xstar(*xev.ring->unity_element()) == *xev.ring->unity_element());
  RingElement e = xev.ring->element(*xev.ring->find_named("e"));
  RingElement g = xev.ring->element(*xev.ring->find_named("g"));
  REQUIRE(xstar(g) == g);  // in C2 the generator is its own inverse
  REQUIRE(xstar(e + g) == e + g);

  ExprPtr tri = parse_construction("T(Z(4),2)");
  EvaluatedConstruction tev = evaluate(tri);
  Involution at = resolve_involution(tri, tev, "antitranspose");
  REQUIRE(at(parse_element(tev.ring, "E[1,1]")) ==
          parse_element(tev.ring, "E[2,2]"));

  REQUIRE_THROWS_AS(resolve_involution(parse_construction("A(3)"),
                                       evaluate(parse_construction("A(3)")),
                                       "star"),
                    UnknownLabelError);
  REQUIRE_THROWS_AS(resolve_involution(gr, ev, "antitranspose"),
                    UnknownLabelError);
  REQUIRE_THROWS_AS(resolve_involution(gr, ev, "bogus"), UnknownLabelError);
  REQUIRE_THROWS_AS(resolve_involution(tri, tev, "identity"),
                    NotAntiMultiplicativeError);
}

TEST_CASE("element expressions over various rings") {
  RingPtr z12 = integers_mod(12);
  REQUIRE(parse_element(z12, "7") == z12->element({7}));
  REQUIRE(parse_element(z12, "[5]") == z12->element({5}));
  REQUIRE(parse_element(z12, "2*u + 3") == z12->element({5}));
  REQUIRE(parse_element(z12, "-u") == z12->element({11}));

  RingPtr A = fine_ring(FineKind::A, 3);
  REQUIRE(parse_element(A, "2*a") == A->element({2}));
  REQUIRE(parse_element(A, "a + a") == A->element({2}));
  REQUIRE(parse_element(A, "-a") == A->element({8}));
  REQUIRE(parse_element(A, "a*a") == A->element({3}));  // a^2 = 3a
  REQUIRE_THROWS_AS(parse_element(A, "3"), IllegalIntegerCoefficientError);
  REQUIRE_THROWS_AS(parse_element(A, "b"), UnknownLabelError);

  RingPtr S = group_ring(A, cyclic_group(2));
  REQUIRE(parse_element(S, "a*g") == S->element({0, 1}));
  REQUIRE(parse_element(S, "2*a*g - a*e") == S->element({8, 2}));
  REQUIRE_THROWS_AS(parse_element(S, "e"), IllegalIntegerCoefficientError);

  RingPtr Q = group_ring(integers_mod(4), cyclic_group(2));
  REQUIRE(parse_element(Q, "e") == *Q->unity_element());
  REQUIRE(parse_element(Q, "g*g") == *Q->unity_element());

  RingPtr P = poly_quotient(integers_mod(4), 3);
  REQUIRE(parse_element(P, "x*x") == parse_element(P, "x^2"));

  REQUIRE_THROWS_AS(parse_element(z12, "[1,2]"), ExprParseError);
  REQUIRE_THROWS_AS(parse_element(z12, "[1] junk"), ExprParseError);
}

TEST_CASE("formatting and parsing of elements are mutually inverse") {
  for (RingPtr R : {integers_mod(12),
                    group_ring(fine_ring(FineKind::A, 3), cyclic_group(2)),
                    triangular_ring(integers_mod(4), 2)}) {
    REQUIRE(format_element(R->zero_element()) == "0");
    REQUIRE(parse_element(R, "0") == R->zero_element());
    SplitMix64 rng(7 ^ R->size());
    for (int i = 0; i < 20; ++i) {
      RingElement x = R->element_at(rng.below(R->size()));
      INFO(R->provenance() << ": " << format_element(x));
      REQUIRE(parse_element(R, format_element(x)) == x);
    }
  }
}

TEST_CASE("ring specs round-trip byte-identically") {
  RingPtr S = group_ring(fine_ring(FineKind::A, 3), cyclic_group(2));
  auto j1 = serialize_ring_spec(S);
  RingSpecResult back = parse_ring_spec(nlohmann::json::parse(j1.dump()));
  auto j2 = serialize_ring_spec(back.ring);
  REQUIRE(j1.dump() == j2.dump());
  REQUIRE(back.ring->size() == S->size());
  REQUIRE_FALSE(back.involution.has_value());

  // with an involution attached
  FiniteGroup c3 = cyclic_group(3);
  RingPtr z4 = integers_mod(4);
  RingPtr G = group_ring(z4, c3);
  Involution star = lift_involution_group_ring(Involution::identity(z4), c3, G);
  auto js = serialize_ring_spec(G, &star);
  RingSpecResult with_inv = parse_ring_spec(nlohmann::json::parse(js.dump()));
  REQUIRE(with_inv.involution.has_value());
  REQUIRE(with_inv.involution->basis_images() == star.basis_images());
  REQUIRE(serialize_ring_spec(with_inv.ring, &*with_inv.involution).dump() ==
          js.dump());
}

TEST_CASE("corrupt ring specs are rejected with the offending field") {
  auto reject = [](const char* text) {
    REQUIRE_THROWS_AS(parse_ring_spec(std::string(text)), ExprParseError);
  };
  reject("not json at all");
  reject(R"({"orders": [4], "table": [[[1]]]})");  // missing schema
  reject(R"({"schema": "ringlab/ring/v1", "orders": [0],
             "table": [[[0]]]})");  // zero order
  reject(R"({"schema": "ringlab/ring/v1", "orders": [4],
             "table": [[[1], [0]]]})");  // ragged table row
  reject(R"({"schema": "ringlab/ring/v1", "orders": [4],
             "table": [[[1]]], "unity": [1, 0]})");  // unity of wrong rank
  reject(R"({"schema": "ringlab/ring/v1", "orders": [4],
             "table": [[[1]]], "labels": ["a", "b"]})");  // too many labels

  // shape is fine but the algebra is not: rejected by the ring constructor
  const char* non_assoc = R"({
    "schema": "ringlab/ring/v1",
    "orders": [2, 2, 2],
    "table": [[[0,1,0],[0,0,1],[0,0,0]],
              [[0,0,0],[0,0,0],[0,0,0]],
              [[0,0,0],[0,0,0],[0,0,0]]]
  })";
  REQUIRE_THROWS_AS(parse_ring_spec(std::string(non_assoc)),
                    NonAssociativeError);
}
