#pragma once

#include <cstddef>

/// Process-wide invariant monitor. When enabled, every reduced Groebner basis
/// is re-checked against Buchberger's criterion and every resolution against
/// d^2 = 0 and minimality; violations are counted, never thrown.
namespace syz::audit {

struct Counters {
  std::size_t bases_checked = 0;
  std::size_t basis_violations = 0;
  std::size_t resolutions_checked = 0;
  std::size_t resolution_violations = 0;
  std::size_t corollary_checks = 0;
  std::size_t corollary_violations = 0;
};

void enable(bool on = true);
bool enabled();
void reset();
Counters snapshot();

void record_basis(bool ok);
void record_resolution(bool ok);
void record_corollary(bool ok);

}  // namespace syz::audit
