#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {
std::vector<std::string> step_names(const Certificate& c) {
  std::vector<std::string> out;
  for (const CertStep& s : c.steps) out.push_back(s.name);
  return out;
}
}  // namespace

TEST_CASE("first main claim verifies for every catalog kind at p = 3") {
  for (FineKind kind : {FineKind::A, FineKind::B, FineKind::C, FineKind::D}) {
    Certificate cert = verify_theorem1(kind, 3);
    INFO(cert.to_text());
    REQUIRE(cert.verdict);
    REQUIRE(cert.claim == "theorem1");
    REQUIRE(cert.elapsed_seconds < 10.0);
  }
}

TEST_CASE("first main claim records the expected verification steps") {
  Certificate cert = verify_theorem1(FineKind::A, 3);
  REQUIRE(step_names(cert) ==
          std::vector<std::string>{"condition-i", "trivial-quadratic",
                                   "power-identity", "relative-annihilator",
                                   "witness-refutation", "artinian",
                                   "strict-exhaustive"});
  for (const CertStep& s : cert.steps)
    if (s.name == "artinian") REQUIRE(s.verified_by == "citation");
  REQUIRE(cert.parameters["kind"] == "A");
  REQUIRE(cert.parameters["p"] == 3);
}

TEST_CASE("first main claim rejects p = 2 as a hypothesis violation") {
  REQUIRE_THROWS_AS(verify_theorem1(FineKind::A, 2), PrimeConstraintError);
}

TEST_CASE("second main claim verifies strictly at p = 2 and rejects p = 3") {
  Certificate cert = verify_theorem2(FineKind::A, 2);
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  REQUIRE(cert.claim == "theorem2");
  auto names = step_names(cert);
  for (const char* expected :
       {"condition-i", "trivial-quadratic", "involution", "power-identity",
        "relative-annihilator", "corrected-containment", "witness-refutation",
        "projection-constraints", "artinian", "strict-exhaustive"})
    REQUIRE(std::find(names.begin(), names.end(), expected) != names.end());

  bool flagged = false;
  for (const std::string& n : cert.notes)
    if (n.find("source statement") != std::string::npos) flagged = true;
  REQUIRE(flagged);

  REQUIRE_THROWS_AS(verify_theorem2(FineKind::A, 3), PrimeConstraintError);
}

TEST_CASE("second main claim at p = 5 without the strict full scan") {
  Certificate cert = verify_theorem2(FineKind::B, 5, false);
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  auto names = step_names(cert);
  REQUIRE(std::find(names.begin(), names.end(), "strict-exhaustive") ==
          names.end());
}

TEST_CASE("triangular-matrix hypothesis conditions") {
  Certificate ok = verify_prop_tn_conditions(FineKind::A, 3, 2, 2);
  INFO(ok.to_text());
  REQUIRE(ok.verdict);
  REQUIRE(ok.claim == "prop_tn");
  REQUIRE(ok.parameters["ring"] == "T(A(3),2)");

  // the family with m = 3 and d = +1
  REQUIRE(verify_prop_tn_conditions(FineKind::B, 5, 2, 3).verdict);

  // at p = 2 multiplication by 2 is not injective: reported, not thrown
  Certificate bad = verify_prop_tn_conditions(FineKind::A, 2, 2, 2);
  REQUIRE_FALSE(bad.verdict);

  REQUIRE_THROWS_AS(verify_prop_tn_conditions(FineKind::A, 3, 2, 4),
                    RingError);
}

TEST_CASE("tuple-ring equivalence: both sides hold for Z/4") {
  Certificate cert = verify_prop_triangular(integers_mod(4), 2);
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  REQUIRE(cert.claim == "prop_triangular");
  auto names = step_names(cert);
  REQUIRE(names == std::vector<std::string>{"hypothesis-abelian",
                                            "base-verdict", "tuple-verdict",
                                            "equivalence"});
}

TEST_CASE("tuple-ring equivalence: both sides fail for B(3)") {
  Certificate cert = verify_prop_triangular(fine_ring(FineKind::B, 3), 2);
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  bool base_holds = true;
  for (const CertStep& s : cert.steps)
    if (s.name == "base-verdict") base_holds = s.data["holds"].get<bool>();
  REQUIRE_FALSE(base_holds);
}

TEST_CASE("tuple-ring equivalence in forced witness mode") {
  Certificate cert =
      verify_prop_triangular(fine_ring(FineKind::B, 3), 2, {}, 1);
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  bool saw_witness_mode = false;
  for (const CertStep& s : cert.steps)
    if (s.name == "tuple-verdict" && s.data.contains("matched")) {
      saw_witness_mode = true;
      REQUIRE_FALSE(s.data["matched"].get<bool>());
    }
  REQUIRE(saw_witness_mode);
}

TEST_CASE("tuple-ring equivalence requires an abelian base ring") {
  RingPtr T = triangular_ring(integers_mod(4), 2);
  REQUIRE_THROWS_AS(verify_prop_triangular(T, 2), HypothesisFailedError);
}

TEST_CASE("artinian lattice certificates") {
  Certificate cert = verify_prop_artinian(integers_mod(4), 2);
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  REQUIRE(cert.steps.size() == 3);
  REQUIRE(cert.steps[0].data["right_ideals"] == 3);

  RingPtr big = group_ring(fine_ring(FineKind::A, 3), cyclic_group(2));
  REQUIRE_THROWS_AS(verify_prop_artinian(big, 2), CapExceededError);
}

TEST_CASE("group-ring descent certificates") {
  REQUIRE(verify_prop_group_descent(integers_mod(4), cyclic_group(2)).verdict);
  Certificate cert =
      verify_prop_group_descent(fine_ring(FineKind::A, 3), cyclic_group(2));
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  bool group_ring_holds = true;
  for (const CertStep& s : cert.steps)
    if (s.name == "group-ring-verdict")
      group_ring_holds = s.data["holds"].get<bool>();
  REQUIRE_FALSE(group_ring_holds);  // the implication is vacuous here
}

TEST_CASE("derived tuple-ring example fails on both sides in witness mode") {
  Certificate cert = verify_example_ex50();
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  REQUIRE(cert.claim == "example_ex50");
  REQUIRE(cert.parameters["tuple_cardinality"] == 6561);
  bool both_fail_pass = false;
  for (const CertStep& s : cert.steps)
    if (s.name == "both-fail") both_fail_pass = s.pass;
  REQUIRE(both_fail_pass);
}

TEST_CASE("iterated group-ring example verifies directly and by descent") {
  Certificate cert =
      verify_derived_examples(FineKind::A, 3, cyclic_group(2));
  INFO(cert.to_text());
  REQUIRE(cert.verdict);
  REQUIRE(cert.claim == "example_SH");
  REQUIRE(cert.parameters["cardinality"] == 6561);
  auto names = step_names(cert);
  REQUIRE(std::find(names.begin(), names.end(), "direct-refutation") !=
          names.end());
}

TEST_CASE("isomorphism certificate for the polynomial quotient") {
  Certificate cert = verify_iso_polyquot_consttri(integers_mod(4), 3);
  REQUIRE(cert.verdict);
  REQUIRE(cert.claim == "iso_polyquot_consttri");
}

TEST_CASE("certificate serialization is deterministic without timings") {
  Certificate a = verify_theorem1(FineKind::C, 3);
  Certificate b = verify_theorem1(FineKind::C, 3);
  REQUIRE(a.to_json(false).dump() == b.to_json(false).dump());
  REQUIRE(a.to_json(false)["schema"] == "ringlab/certificate/v1");
  REQUIRE(a.to_json(false)["verdict"] == "pass");
  REQUIRE_FALSE(a.to_json(false).contains("timings"));
  REQUIRE(a.to_json(true).contains("timings"));
}
