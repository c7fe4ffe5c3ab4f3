#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

using ojson = nlohmann::ordered_json;

/// One verification step of a claim. `verified_by` distinguishes steps this
/// library computed ("computation") from facts consumed from the literature
/// ("citation") so consumers can tell machine-checked content apart.
struct CertStep {
  std::string name;
  std::string description;
  bool pass = false;
  std::string verified_by = "computation";
  ojson data = ojson::object();
};

/// Replayable record of one claim verification. The content (everything but
/// timings) is deterministic: identical parameters produce byte-identical
/// serialized content.
struct Certificate {
  std::string claim;
  ojson parameters = ojson::object();
  std::vector<CertStep> steps;
  bool verdict = true;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  CertStep& add_step(CertStep s) {
    verdict = verdict && s.pass;
    steps.push_back(std::move(s));
    return steps.back();
  }

  void add_note(std::string n) { notes.push_back(std::move(n)); }

  /// Stable-field-order JSON. Timings are segregated under a single key so
  /// that stripping it (or passing with_timings = false) yields reproducible
  /// bytes.
  ojson to_json(bool with_timings = true) const {
    ojson j = ojson::object();
    j["schema"] = "ringlab/certificate/v1";
    j["claim"] = claim;
    j["parameters"] = parameters;
    j["verdict"] = verdict ? "pass" : "fail";
    ojson steps_j = ojson::array();
    for (const CertStep& s : steps) {
      ojson sj = ojson::object();
      sj["name"] = s.name;
      sj["description"] = s.description;
      sj["pass"] = s.pass;
      sj["verified_by"] = s.verified_by;
      sj["data"] = s.data;
      steps_j.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps_j);
    j["notes"] = notes;
    if (with_timings) {
      ojson t = ojson::object();
      t["elapsed_seconds"] = elapsed_seconds;
      j["timings"] = std::move(t);
    }
    return j;
  }

  std::string to_text() const {
    std::string out;
    out += "claim: " + claim + "\n";
    out += "parameters: " + parameters.dump() + "\n";
    for (const CertStep& s : steps) {
      out += std::string("  [") + (s.pass ? "pass" : "FAIL") + "] " + s.name +
             " — " + s.description;
      if (s.verified_by != "computation") out += " (by " + s.verified_by + ")";
      out += "\n";
      if (s.data.contains("chain_sizes")) {
        out += "        chain sizes per power:";
        for (const auto& c : s.data["chain_sizes"])
          out += " " + c.dump();
        out += "\n";
      }
    }
    for (const std::string& n : notes) out += "  note: " + n + "\n";
    out += std::string("verdict: ") + (verdict ? "pass" : "fail") + "\n";
    return out;
  }
};

inline std::string emit_certificate(const Certificate& cert,
                                    const std::string& format,
                                    bool with_timings = true) {
  if (format == "json") return cert.to_json(with_timings).dump(2) + "\n";
  if (format == "text") return cert.to_text();
  throw RingError("unknown certificate format '" + format + "'");
}

/// Embed a decider verdict into step data with stable key order.
inline ojson verdict_to_json(const PropertyVerdict& v) {
  ojson j = ojson::object();
  j["property"] = v.property;
  j["holds"] = v.holds;
  j["mode"] = v.mode;
  if (v.witness) {
    j["witness"] = *v.witness;
    j["degenerate"] = v.degenerate;
  }
  if (v.nonzero_witness) j["nonzero_witness"] = *v.nonzero_witness;
  if (!v.chain_sizes.empty()) j["chain_sizes"] = v.chain_sizes;
  if (v.idempotents_scanned) j["idempotents_scanned"] = v.idempotents_scanned;
  if (v.projections_scanned) j["projections_scanned"] = v.projections_scanned;
  j["elements_scanned"] = v.elements_scanned;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

}  // namespace ringlab
