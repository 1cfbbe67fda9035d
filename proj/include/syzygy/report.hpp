#pragma once

#include "syzygy/verify.hpp"

#include <json.hpp>

#include <string>

namespace syz::report {

using nlohmann::json;

/// Nested arrays of polynomial strings, one inner array per row.
json matrix(const Matrix& m);
json module(const FPModule& m);
json betti(const BettiTable& t);
json homology(const HomologyReport& h);
json split_certificate(const SplitCertificate& c);
json decomposition(const DecompositionCertificate& c);
json split(const SplitReport& r);
json decompose(const DecomposeReport& r);
json syzygy_case(const SyzygyCaseReport& r);
json scan(const ScanReport& r);
json locus(const LocusDescription& l);
json polynomials(const std::vector<Polynomial>& ps);

/// Envelope shared by every command.
struct Envelope {
  std::string command;
  json inputs_echo = json::object();
  std::string paper_anchor;
  /// "pass", "fail" or "error".
  std::string status = "pass";
  json certificates = json::object();
  std::uint64_t seed = 0;
  double elapsed_ms = 0;

  json to_json() const;
};

}  // namespace syz::report
