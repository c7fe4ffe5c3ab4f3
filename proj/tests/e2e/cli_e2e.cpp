// End-to-end tests that drive the installed CLI binary (path in RINGLAB_BIN)
// through a shell, asserting on its exit codes and output text. The exit-code
// contract: 0 confirmed, 1 not confirmed, 2 usage/parse error, 3 cap exceeded.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const char* bin = std::getenv("RINGLAB_BIN");
  REQUIRE(bin != nullptr);
  const fs::path dir = fs::temp_directory_path();
  const std::string tag =
      std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const fs::path outp = dir / ("ringlab_e2e_" + tag + ".out");
  const fs::path errp = dir / ("ringlab_e2e_" + tag + ".err");
  const std::string cmd = std::string("'") + bin + "' " + args + " > '" +
                          outp.string() + "' 2> '" + errp.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(outp);
  r.err = slurp(errp);
  fs::remove(outp);
  fs::remove(errp);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("catalog lists rings, constructors and involutions") {
  RunResult r = run("catalog");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "A(p)"));
  REQUIRE(contains(r.out, "GR(R,G)"));
  REQUIRE(contains(r.out, "antitranspose"));
}

TEST_CASE("build summarizes a ring") {
  RunResult r = run("build --ring 'GR(A(3),C2)'");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "cardinality: 81"));
  REQUIRE(contains(r.out, "unital:      no"));
  REQUIRE(contains(r.out, "reserved:"));
}

TEST_CASE("build --json emits a parseable canonical spec") {
  RunResult r = run("build --ring 'T(Z(4),2)' --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["schema"] == "ringlab/ring/v1");
  REQUIRE(j["orders"].size() == 3);
  REQUIRE(j.contains("unity"));
}

TEST_CASE("exit code contract: algebra rejections are 1, parse errors are 2") {
  REQUIRE(run("build --ring 'A(4)'").code == 1);   // 4 is not prime
  REQUIRE(run("build --ring 'A(3'").code == 2);    // unbalanced parenthesis
  REQUIRE(run("build --ring 'Q(3)'").code == 2);   // unknown constructor
  REQUIRE(run("build").code == 2);                 // no ring given
  REQUIRE(run("build --ring-file /nonexistent/ring.json").code == 2);
  REQUIRE(run("").code == 2);                      // a subcommand is required
  REQUIRE(run("frobnicate").code == 2);
}

TEST_CASE("axioms reports the validated generator laws") {
  RunResult r = run("axioms --ring 'PQ(Z(6),2)'");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "generator triples: pass"));
}

TEST_CASE("elements lists and truncates") {
  RunResult r = run("elements --ring 'Z(6)' --limit 3");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "cardinality 6"));
  REQUIRE(contains(r.out, "... (3 more)"));
}

TEST_CASE("annihilator of an element, with and without the chain") {
  RunResult r = run("annihilator --ring 'Z(4)' --element 2");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "size: 2"));

  RunResult chain = run("annihilator --ring 'Z(4)' --element 2 --chain");
  REQUIRE(chain.code == 0);
  REQUIRE(contains(chain.out, "chain length 2"));

  RunResult left = run(
      "annihilator --ring 'T(Z(4),2)' --element 'E[1,2]' --side left");
  REQUIRE(left.code == 0);
  REQUIRE(contains(left.out, "size: 16"));
}

TEST_CASE("relative annihilators require the embedded construction") {
  RunResult r = run(
      "annihilator --ring 'XGR(A(3),C2)' --element 'e + g' --relative");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "size: 9"));

  REQUIRE(run("annihilator --ring 'GR(A(3),C2)' --element 'a*e' --relative")
              .code == 2);
}

TEST_CASE("idempotents and projections") {
  RunResult idem = run("idempotents --ring 'Z(6)'");
  REQUIRE(idem.code == 0);
  REQUIRE(contains(idem.out, "idempotents: 4"));

  RunResult proj = run("projections --ring 'GR(Z(4),C3)' --involution star");
  REQUIRE(proj.code == 0);
  REQUIRE(contains(proj.out, "projections under 'star': 4"));
}

TEST_CASE("check decides properties and honors --expect") {
  REQUIRE(run("check --ring 'Z(4)' --property gen-pp").code == 0);
  REQUIRE(run("check --ring 'Z(4)' --property right-rickart").code == 1);
  RunResult expect_fails =
      run("check --ring 'Z(4)' --property right-rickart --expect fails");
  REQUIRE(expect_fails.code == 0);
  REQUIRE(contains(expect_fails.out, "expectation confirmed"));
  REQUIRE(run("check --ring 'Z(4)' --property right-rickart --expect holds")
              .code == 1);
  REQUIRE(run("check --ring 'Z(4)' --property nonsense").code == 2);
  REQUIRE(run("check --ring 'A(3)' --property rickart-star --involution star")
              .code == 2);  // star needs a group-ring construction
}

TEST_CASE("check reports a cap overflow as exit 3") {
  REQUIRE(run("check --ring 'XGR(A(3),C2)' --property baer").code == 3);
}

TEST_CASE("verify: certificates succeed and are byte-reproducible") {
  const std::string cmd =
      "verify --claim theorem1 --kind A --p 3 --json --no-timings";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  REQUIRE(j["verdict"] == "pass");
  REQUIRE_FALSE(j.contains("timings"));
}

TEST_CASE("verify: hypothesis violations exit 1") {
  REQUIRE(run("verify --claim theorem1 --p 2").code == 1);
  REQUIRE(run("verify --claim theorem2 --p 3").code == 1);
}

TEST_CASE("verify: remaining claims at small parameters") {
  REQUIRE(run("verify --claim theorem2 --p 2").code == 0);
  REQUIRE(run("verify --claim prop_tn --kind B --p 5 --m 3").code == 0);
  REQUIRE(run("verify --claim prop_triangular --ring 'Z(4)' --n 2").code == 0);
  REQUIRE(run("verify --claim prop_artinian --ring 'Z(4)' --n 2").code == 0);
  REQUIRE(run("verify --claim prop_group_descent --ring 'Z(4)' --group C2")
              .code == 0);
  REQUIRE(run("verify --claim iso_polyquot_consttri --ring 'Z(4)' --n 2")
              .code == 0);
  REQUIRE(run("verify --claim nonsense").code == 2);
}

TEST_CASE("iso confirms the tuple-ring isomorphism and embedding") {
  RunResult r = run("iso --ring 'Z(4)' --n 3");
  REQUIRE(r.code == 0);
  REQUIRE(contains(r.out, "superdiagonal-embedding"));
  REQUIRE(contains(r.out, "verdict: pass"));
}

TEST_CASE("ring specs round-trip through build --json and --ring-file") {
  RunResult first = run("build --ring 'GR(A(3),C2)' --json");
  REQUIRE(first.code == 0);
  const fs::path spec =
      fs::temp_directory_path() /
      ("ringlab_e2e_spec_" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream o(spec);
    o << first.out;
  }
  RunResult second = run("build --ring-file '" + spec.string() + "' --json");
  REQUIRE(second.code == 0);
  REQUIRE(second.out == first.out);
  fs::remove(spec);
}

TEST_CASE("help and version") {
  REQUIRE(run("--help").code == 0);
  RunResult v = run("--version");
  REQUIRE(v.code == 0);
  REQUIRE(contains(v.out, "ringlab 1.0.0"));
}
