#include "syzygy/report.hpp"

namespace syz::report {

json polynomials(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json matrix(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(polynomials(m.row(r)));
  return out;
}

json module(const FPModule& m) {
  return json{{"presentation", matrix(m.presentation())},
              {"generator_shifts", m.generator_shifts()},
              {"relation_shifts", m.relation_shifts()}};
}

json betti(const BettiTable& t) {
  json out = json::array();
  for (const auto& row : t) {
    json r = json::object();
    for (const auto& [deg, b] : row) r[std::to_string(deg)] = b;
    out.push_back(r);
  }
  return out;
}

json homology(const HomologyReport& h) {
  json out{{"index", h.index}, {"zero", h.is_zero()}, {"summary", h.describe()}};
  if (h.finite_length_dimension)
    out["dimension"] = *h.finite_length_dimension;
  else
    out["hilbert_function"] = json{{"from", h.hf_from}, {"values", h.truncated_hf}};
  return out;
}

json split_certificate(const SplitCertificate& c) {
  return json{{"f", matrix(c.f.matrix)},
              {"g", matrix(c.g.matrix)},
              {"composite", matrix(c.composite)},
              {"f_degrees", c.f_degrees},
              {"g_degrees", c.g_degrees},
              {"graded", c.graded},
              {"verified", c.verify()}};
}

json decomposition(const DecompositionCertificate& c) {
  return json{{"first", module(c.first)},
              {"second", module(c.second)},
              {"to_sum", matrix(c.to_sum.matrix)},
              {"from_sum", matrix(c.from_sum.matrix)},
              {"verified", c.verify()}};
}

json split(const SplitReport& r) {
  json out{{"verdict", to_string(r.verdict)}, {"trials_used", r.trials_used}, {"diagnostics", r.diagnostics}};
  if (!r.obstruction.empty()) out["obstruction"] = r.obstruction;
  if (r.certificate) out["certificate"] = split_certificate(*r.certificate);
  return out;
}

json decompose(const DecomposeReport& r) {
  json out{{"verdict", to_string(r.verdict)}, {"reason", r.reason},
           {"endomorphism_dimension", r.endomorphism_dimension}};
  if (r.certificate) out["certificate"] = decomposition(*r.certificate);
  return out;
}

json syzygy_case(const SyzygyCaseReport& r) {
  json out{{"case_label", r.label},
           {"evidence", r.evidence},
           {"depth_quotient_i", r.depth_quotient_i},
           {"depth_quotient_j", r.depth_quotient_j},
           {"depth_zero_factor", r.depth_zero_factor},
           {"consistent", r.consistent},
           {"explanation", r.explanation}};
  if (r.certificate) out["certificate"] = split_certificate(*r.certificate);
  if (r.decomposition) out["decomposition"] = decomposition(*r.decomposition);
  return out;
}

json scan(const ScanReport& r) {
  json dims = json::array();
  for (const auto& d : r.dimensions) dims.push_back(d ? json(*d) : json("infinite length"));
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"rule", c.rule}, {"index", c.index}, {"conclusion", c.conclusion}, {"holds", c.holds}});
  return json{{"functor", to_string(r.functor)}, {"from", r.from},
              {"to", r.to},                      {"dimensions", dims},
              {"decomposable_maximal_ideal", r.decomposable_maximal_ideal},
              {"checks", checks},                {"violations", r.violations}};
}

json locus(const LocusDescription& l) {
  return json{{"kind", to_string(l.kind)},
              {"defining_ideal", polynomials(l.defining_ideal)},
              {"empty", l.is_empty()},
              {"closed_point", l.is_closed_point()},
              {"flags", l.validity_flags},
              {"summary", l.describe()}};
}

json Envelope::to_json() const {
  return json{{"command", command},   {"inputs_echo", inputs_echo},   {"paper_anchor", paper_anchor},
              {"status", status},     {"certificates", certificates}, {"seed", seed},
              {"elapsed_ms", elapsed_ms}};
}

}  // namespace syz::report
