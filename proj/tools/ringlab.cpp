// Command-line front end for the finite-ring laboratory: build rings from
// construction expressions or JSON specs, inspect annihilators and
// idempotents, decide annihilator conditions, and emit verification
// certificates for the built-in claims.
//
// Exit codes: 0 = the requested assertion was confirmed, 1 = not confirmed
// (including hypothesis violations), 2 = usage or parse errors, 3 = an
// exhaustive operation exceeded the configured cap.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ringlab/ringlab.hpp"

namespace {

using namespace ringlab;

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ExprParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownLabelError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const IllegalIntegerCoefficientError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const RingError& e) {
    std::cerr << "not confirmed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

/// A ring argument: either a construction expression or a JSON spec file.
struct RingSource {
  std::string expr_text;
  std::string file;

  ExprPtr expr;
  EvaluatedConstruction ev;
  std::optional<Involution> file_involution;

  void attach(CLI::App* cmd, bool required = true) {
    auto* a = cmd->add_option("--ring", expr_text,
                              "construction expression, e.g. GR(A(3),C2)");
    auto* b = cmd->add_option("--ring-file", file,
                              "JSON ring spec (schema ringlab/ring/v1)");
    a->excludes(b);
    b->excludes(a);
    if (required) {
      cmd->callback([this, cmd] {
        if (expr_text.empty() && file.empty())
          throw CLI::RequiredError(cmd->get_name() +
                                   " needs --ring or --ring-file");
      });
    }
  }

  void load() {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ExprParseError(0, "cannot open ring file '" + file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      RingSpecResult r = parse_ring_spec(ss.str());
      ev.ring = r.ring;
      file_involution = std::move(r.involution);
    } else {
      expr = parse_construction(expr_text);
      ev = evaluate(expr);
    }
  }

  Involution involution(const std::string& name) {
    if (!file.empty()) {
      if (name.empty() || name == "custom") {
        if (file_involution) return *file_involution;
        throw UnknownLabelError(
            "the ring file declares no involution; use --involution identity "
            "or add an \"involution\" field");
      }
      if (name == "identity") return Involution::identity(ev.ring);
      throw UnknownLabelError(
          "ring files support --involution identity or custom (the file's "
          "own involution)");
    }
    return resolve_involution(expr, ev, name.empty() ? "identity" : name);
  }
};

std::string summarize_ring(const FiniteRing& R) {
  std::ostringstream out;
  out << "ring:        " << R.provenance() << "\n";
  out << "rank:        " << R.rank() << "\n";
  out << "orders:      [";
  for (std::size_t i = 0; i < R.rank(); ++i)
    out << (i ? "," : "") << R.group().orders[i];
  out << "]\n";
  out << "cardinality: " << R.size() << "\n";
  out << "commutative: " << (R.is_commutative() ? "yes" : "no") << "\n";
  out << "unital:      " << (R.unity() ? "yes" : "no") << "\n";
  out << "generators: ";
  const std::size_t shown = std::min<std::size_t>(R.rank(), 24);
  for (std::size_t i = 0; i < shown; ++i) out << " " << R.label(i);
  if (shown < R.rank()) out << " ... (" << R.rank() << " total)";
  out << "\n";
  if (!R.named_elements().empty()) {
    out << "named:      ";
    for (const auto& [name, coords] : R.named_elements()) out << " " << name;
    out << "\n";
  }
  for (const auto& [name, why] : R.reserved_labels())
    out << "reserved:    " << name << " — " << why << "\n";
  return out.str();
}

std::string verdict_text(const PropertyVerdict& v, const FiniteRing& R) {
  std::ostringstream out;
  out << v.property << ": " << (v.holds ? "holds" : "fails") << " (" << v.mode
      << ")\n";
  if (v.witness)
    out << "  minimal witness: index " << *v.witness << " = "
        << format_element(R.element_at(*v.witness))
        << (v.degenerate ? "  [zero element]" : "") << "\n";
  if (v.nonzero_witness)
    out << "  minimal nonzero witness: index " << *v.nonzero_witness << " = "
        << format_element(R.element_at(*v.nonzero_witness)) << "\n";
  if (!v.chain_sizes.empty()) {
    out << "  witness chain sizes:";
    for (auto s : v.chain_sizes) out << " " << s;
    out << "\n";
  }
  for (const auto& n : v.notes) out << "  note: " << n << "\n";
  return out.str();
}

void print_subset(const ElementSubset& s, const FiniteRing& R,
                  std::size_t limit) {
  std::cout << "size: " << s.count() << "\n";
  std::size_t shown = 0;
  for (auto it = s.min_index(); it && shown < limit;
       it = s.next_index(*it), ++shown) {
    RingElement x = R.element_at(*it);
    std::cout << "  " << *it << "  " << detail::format_coords(R, *it) << "  "
              << format_element(x) << "\n";
  }
  if (s.count() > limit)
    std::cout << "  ... (" << s.count() - limit << " more)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite associative ring laboratory — annihilator conditions, "
      "idempotents, involutions, and machine-checked certificates"};
  app.set_version_flag("--version", "ringlab 1.0.0");
  app.require_subcommand(1);
  int rc = 0;

  // ---- catalog ----
  auto* cmd_catalog =
      app.add_subcommand("catalog", "list the built-in coefficient rings");
  cmd_catalog->callback([&] {
    rc = guarded([&] {
      std::cout << "built-in coefficient rings (p a prime):\n";
      for (const auto& e : catalog_list())
        std::cout << "  " << e.name << "  orders " << e.orders << "  — "
                  << e.description << "\n";
      std::cout << "\nconstructors:\n"
                << "  GR(R,G)   group ring of G over R\n"
                << "  XGR(R,G)  group ring over the unitization, with GR(R,G) "
                   "embedded as a two-sided ideal\n"
                << "  U(R)      unitization Z_N (+) R\n"
                << "  T(R,n)    upper triangular n x n matrices over R\n"
                << "  CT(R,n)   upper triangular matrices constant on each "
                   "diagonal\n"
                << "  PQ(R,n)   polynomials over R modulo x^n\n"
                << "\ngroups: C<order> (cyclic) or @file (JSON Cayley table)\n"
                << "involutions: identity, star (group rings), antitranspose "
                   "(triangular)\n";
      return 0;
    });
  });

  // ---- build ----
  auto* cmd_build = app.add_subcommand(
      "build", "construct a ring and print a summary (or its JSON spec)");
  static RingSource src_build;
  bool build_json = false;
  src_build.attach(cmd_build);
  cmd_build->add_flag("--json", build_json, "emit the canonical JSON spec");
  cmd_build->callback([&] {
    rc = guarded([&] {
      src_build.load();
      if (build_json)
        std::cout << serialize_ring_spec(src_build.ev.ring,
                                         src_build.file_involution
                                             ? &*src_build.file_involution
                                             : nullptr)
                         .dump(2)
                  << "\n";
      else
        std::cout << summarize_ring(*src_build.ev.ring);
      return 0;
    });
  });

  // ---- axioms ----
  auto* cmd_axioms = app.add_subcommand(
      "axioms", "validate the ring axioms on the generator table");
  static RingSource src_axioms;
  src_axioms.attach(cmd_axioms);
  cmd_axioms->callback([&] {
    rc = guarded([&] {
      src_axioms.load();
      const FiniteRing& R = *src_axioms.ev.ring;
      const std::size_t k = R.rank();
      std::cout << "ring: " << R.provenance() << "\n";
      std::cout << "additive orders respected by all " << k * k
                << " generator products: pass\n";
      std::cout << "associativity on all " << k * k * k
                << " generator triples: pass\n";
      std::cout << "distributivity spot checks: pass\n";
      if (R.unity())
        std::cout << "unity laws on all generators: pass\n";
      else
        std::cout << "unity: none declared\n";
      return 0;
    });
  });

  // ---- elements ----
  auto* cmd_elements =
      app.add_subcommand("elements", "list elements of a ring");
  static RingSource src_elements;
  std::size_t elements_limit = 50;
  src_elements.attach(cmd_elements);
  cmd_elements->add_option("--limit", elements_limit, "how many to list");
  cmd_elements->callback([&] {
    rc = guarded([&] {
      src_elements.load();
      const FiniteRing& R = *src_elements.ev.ring;
      std::cout << "cardinality " << R.size() << "\n";
      const std::uint64_t upto =
          std::min<std::uint64_t>(R.size(), elements_limit);
      for (std::uint64_t i = 0; i < upto; ++i)
        std::cout << "  " << i << "  " << detail::format_coords(R, i) << "  "
                  << format_element(R.element_at(i)) << "\n";
      if (upto < R.size())
        std::cout << "  ... (" << R.size() - upto << " more)\n";
      return 0;
    });
  });

  // ---- annihilator ----
  auto* cmd_ann = app.add_subcommand(
      "annihilator", "one-sided annihilator (or annihilator chain) of an "
                     "element");
  static RingSource src_ann;
  std::string ann_element, ann_side = "right";
  bool ann_chain = false, ann_relative = false;
  std::size_t ann_limit = 25, ann_threads = 1;
  src_ann.attach(cmd_ann);
  cmd_ann->add_option("--element", ann_element, "element expression")
      ->required();
  cmd_ann->add_option("--side", ann_side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  cmd_ann->add_flag("--chain", ann_chain,
                    "compute the full chain r(x) ⊆ r(x^2) ⊆ ... to "
                    "stabilization");
  cmd_ann->add_flag("--relative", ann_relative,
                    "for XGR rings: annihilator taken inside the embedded "
                    "group ring");
  cmd_ann->add_option("--limit", ann_limit, "member listing cap");
  cmd_ann->add_option("--threads", ann_threads, "worker threads");
  cmd_ann->callback([&] {
    rc = guarded([&] {
      src_ann.load();
      const RingPtr& ring = src_ann.ev.ring;
      RingElement x = parse_element(ring, ann_element);
      const Side side = (ann_side == "left") ? Side::Left : Side::Right;
      AnnihilatorOptions opts;
      opts.workers = ann_threads;
      std::cout << "element: " << format_element(x) << "  (index "
                << x.index() << ")\n";
      if (ann_relative) {
        if (!src_ann.ev.extension)
          throw UnknownLabelError(
              "--relative requires an XGR(...) construction");
        const auto& emb = src_ann.ev.extension->embedding;
        const FiniteRing& S = *src_ann.ev.extension->subring;
        if (ann_chain) {
          auto chain = annihilator_chain_in_embedding(emb, x, side, opts);
          std::cout << "relative chain length " << chain.size() << "\n";
          for (std::size_t i = 0; i < chain.size(); ++i) {
            std::cout << "term " << i + 1 << " (power " << i + 1 << "): ";
            print_subset(chain[i], S, ann_limit);
          }
        } else {
          ElementSubset s = annihilator_in_embedding(emb, x, side, opts);
          print_subset(s, S, ann_limit);
        }
        return 0;
      }
      const FiniteRing& R = *ring;
      if (ann_chain) {
        auto chain = annihilator_chain(x, side, opts);
        std::cout << "chain length " << chain.size() << "\n";
        for (std::size_t i = 0; i < chain.size(); ++i) {
          std::cout << "term " << i + 1 << " (power " << i + 1 << "): ";
          print_subset(chain[i], R, ann_limit);
        }
      } else {
        ElementSubset s = annihilator(x, side, opts);
        print_subset(s, R, ann_limit);
      }
      return 0;
    });
  });

  // ---- idempotents ----
  auto* cmd_idem =
      app.add_subcommand("idempotents", "enumerate idempotent elements");
  static RingSource src_idem;
  std::size_t idem_limit = 50, idem_threads = 1;
  src_idem.attach(cmd_idem);
  cmd_idem->add_option("--limit", idem_limit, "listing cap");
  cmd_idem->add_option("--threads", idem_threads, "worker threads");
  cmd_idem->callback([&] {
    rc = guarded([&] {
      src_idem.load();
      const FiniteRing& R = *src_idem.ev.ring;
      auto es = enumerate_idempotents(R, 0, idem_threads);
      std::cout << "idempotents: " << es.size() << "\n";
      for (std::size_t i = 0; i < es.size() && i < idem_limit; ++i)
        std::cout << "  " << es[i].index() << "  " << format_element(es[i])
                  << "\n";
      if (es.size() > idem_limit)
        std::cout << "  ... (" << es.size() - idem_limit << " more)\n";
      return 0;
    });
  });

  // ---- projections ----
  auto* cmd_proj = app.add_subcommand(
      "projections", "enumerate projections (idempotents fixed by the "
                     "involution)");
  static RingSource src_proj;
  std::string proj_inv = "identity";
  std::size_t proj_limit = 50, proj_threads = 1;
  src_proj.attach(cmd_proj);
  cmd_proj->add_option("--involution", proj_inv,
                       "identity | star | antitranspose | custom");
  cmd_proj->add_option("--limit", proj_limit, "listing cap");
  cmd_proj->add_option("--threads", proj_threads, "worker threads");
  cmd_proj->callback([&] {
    rc = guarded([&] {
      src_proj.load();
      Involution inv = src_proj.involution(proj_inv);
      const FiniteRing& R = *src_proj.ev.ring;
      auto ps = enumerate_projections(R, inv, 0, proj_threads);
      std::cout << "projections under '" << inv.name() << "': " << ps.size()
                << "\n";
      for (std::size_t i = 0; i < ps.size() && i < proj_limit; ++i)
        std::cout << "  " << ps[i].index() << "  " << format_element(ps[i])
                  << "\n";
      if (ps.size() > proj_limit)
        std::cout << "  ... (" << ps.size() - proj_limit << " more)\n";
      return 0;
    });
  });

  // ---- check ----
  auto* cmd_check = app.add_subcommand(
      "check", "decide an annihilator condition on a ring");
  static RingSource src_check;
  std::string check_property, check_inv, check_expect;
  std::size_t check_threads = 1;
  bool check_json = false;
  src_check.attach(cmd_check);
  cmd_check
      ->add_option("--property", check_property,
                   "gen-pp | right-rickart | left-rickart | rickart-star | "
                   "gen-rickart-star | baer | abelian")
      ->required()
      ->check(CLI::IsMember({"gen-pp", "right-rickart", "left-rickart",
                             "rickart-star", "gen-rickart-star", "baer",
                             "abelian"}));
  cmd_check->add_option("--involution", check_inv,
                        "required for the * properties");
  cmd_check->add_option("--expect", check_expect, "holds or fails")
      ->check(CLI::IsMember({"holds", "fails"}));
  cmd_check->add_option("--threads", check_threads, "worker threads");
  cmd_check->add_flag("--json", check_json, "emit the verdict as JSON");
  cmd_check->callback([&] {
    rc = guarded([&] {
      src_check.load();
      const RingPtr& ring = src_check.ev.ring;
      DeciderOptions opts;
      opts.workers = check_threads;
      PropertyVerdict v;
      if (check_property == "gen-pp")
        v = is_generalized_right_pp(*ring, opts);
      else if (check_property == "right-rickart")
        v = is_right_rickart(*ring, opts);
      else if (check_property == "left-rickart")
        v = is_left_rickart(*ring, opts);
      else if (check_property == "baer")
        v = is_baer(*ring, opts);
      else if (check_property == "abelian")
        v = is_abelian(*ring, opts);
      else {
        Involution inv = src_check.involution(check_inv);
        v = (check_property == "rickart-star")
                ? is_rickart_star(*ring, inv, opts)
                : is_generalized_rickart_star(*ring, inv, opts);
      }
      if (check_json)
        std::cout << verdict_to_json(v).dump(2) << "\n";
      else
        std::cout << verdict_text(v, *ring);
      if (!check_expect.empty()) {
        const bool want = check_expect == "holds";
        if (want == v.holds) {
          std::cout << "expectation confirmed: " << check_expect << "\n";
          return 0;
        }
        std::cout << "expectation NOT met: expected " << check_expect
                  << ", property " << (v.holds ? "holds" : "fails") << "\n";
        return 1;
      }
      return v.holds ? 0 : 1;
    });
  });

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand(
      "verify", "run a built-in claim and emit its certificate");
  static RingSource src_verify;
  std::string verify_claim, verify_kind = "A", verify_group = "C2";
  std::optional<std::uint32_t> verify_p;
  std::size_t verify_n = 2, verify_threads = 1;
  int verify_m = 2;
  bool verify_strict = true, verify_json = false, verify_no_timings = false;
  src_verify.attach(cmd_verify, /*required=*/false);
  cmd_verify
      ->add_option("--claim", verify_claim,
                   "theorem1 | theorem2 | prop_tn | prop_triangular | "
                   "prop_artinian | prop_group_descent | example_ex50 | "
                   "example_SH | iso_polyquot_consttri")
      ->required();
  cmd_verify->add_option("--kind", verify_kind, "A | B | C | D | Dalt");
  cmd_verify->add_option("--p", verify_p, "prime parameter");
  cmd_verify->add_option("--n", verify_n, "matrix/truncation degree");
  cmd_verify->add_option("--m", verify_m, "condition family: 2 or 3");
  cmd_verify->add_option("--group", verify_group, "C<order> or @file");
  cmd_verify->add_flag("--strict,!--no-strict", verify_strict,
                       "include the exhaustive whole-ring scan");
  cmd_verify->add_option("--threads", verify_threads, "worker threads");
  cmd_verify->add_flag("--json", verify_json, "emit the certificate as JSON");
  cmd_verify->add_flag("--no-timings", verify_no_timings,
                       "omit wall-clock timings (byte-reproducible output)");
  cmd_verify->callback([&] {
    rc = guarded([&] {
      DeciderOptions opts;
      opts.workers = verify_threads;
      const FineKind kind = fine_kind_from_name(verify_kind);
      Certificate cert;
      if (verify_claim == "theorem1") {
        cert = verify_theorem1(kind, verify_p.value_or(3), verify_strict, opts);
      } else if (verify_claim == "theorem2") {
        cert = verify_theorem2(kind, verify_p.value_or(5), verify_strict, opts);
      } else if (verify_claim == "prop_tn") {
        cert = verify_prop_tn_conditions(kind, verify_p.value_or(3), verify_n,
                                         verify_m, opts);
      } else if (verify_claim == "prop_triangular") {
        src_verify.load();
        cert = verify_prop_triangular(src_verify.ev.ring, verify_n, opts);
      } else if (verify_claim == "prop_artinian") {
        src_verify.load();
        cert = verify_prop_artinian(src_verify.ev.ring, verify_n, opts);
      } else if (verify_claim == "prop_group_descent") {
        src_verify.load();
        cert = verify_prop_group_descent(
            src_verify.ev.ring, resolve_group(parse_group_ref(verify_group)),
            opts);
      } else if (verify_claim == "example_ex50") {
        cert = verify_example_ex50(kind, verify_p.value_or(3), verify_n, opts);
      } else if (verify_claim == "example_SH") {
        cert = verify_derived_examples(
            kind, verify_p.value_or(3),
            resolve_group(parse_group_ref(verify_group)), opts);
      } else if (verify_claim == "iso_polyquot_consttri") {
        src_verify.load();
        cert = verify_iso_polyquot_consttri(src_verify.ev.ring, verify_n);
      } else {
        throw UnknownLabelError("unknown claim '" + verify_claim + "'");
      }
      std::cout << emit_certificate(cert, verify_json ? "json" : "text",
                                    !verify_no_timings);
      return cert.verdict ? 0 : 1;
    });
  });

  // ---- iso ----
  auto* cmd_iso = app.add_subcommand(
      "iso", "verify PQ(R,n) ≅ CT(R,n) and the superdiagonal embedding into "
             "T(R,n)");
  static RingSource src_iso;
  std::size_t iso_n = 2;
  bool iso_json = false;
  src_iso.attach(cmd_iso);
  cmd_iso->add_option("--n", iso_n, "truncation degree")->required();
  cmd_iso->add_flag("--json", iso_json, "emit the certificate as JSON");
  cmd_iso->callback([&] {
    rc = guarded([&] {
      src_iso.load();
      Certificate cert = verify_iso_polyquot_consttri(src_iso.ev.ring, iso_n);
      const bool embeds = consttri_embeds_in_triangular(src_iso.ev.ring, iso_n);
      cert.add_step({"superdiagonal-embedding",
                     "CT(R,n) embeds in T(R,n) by sending slot s to the s-th "
                     "superdiagonal",
                     embeds, "computation", ojson::object()});
      std::cout << emit_certificate(cert, iso_json ? "json" : "text");
      return cert.verdict ? 0 : 1;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
