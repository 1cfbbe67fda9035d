#include "syzygy/audit.hpp"

#include <atomic>

namespace syz::audit {

namespace {

std::atomic<bool> g_enabled{false};
std::atomic<std::size_t> g_bases{0}, g_basis_bad{0}, g_res{0}, g_res_bad{0}, g_cor{0},
    g_cor_bad{0};

}  // namespace

void enable(bool on) { g_enabled = on; }
bool enabled() { return g_enabled; }

void reset() {
  g_bases = g_basis_bad = g_res = g_res_bad = g_cor = g_cor_bad = 0;
}

Counters snapshot() {
  return Counters{g_bases, g_basis_bad, g_res, g_res_bad, g_cor, g_cor_bad};
}

void record_basis(bool ok) {
  ++g_bases;
  if (!ok) ++g_basis_bad;
}

void record_resolution(bool ok) {
  ++g_res;
  if (!ok) ++g_res_bad;
}

void record_corollary(bool ok) {
  ++g_cor;
  if (!ok) ++g_cor_bad;
}

}  // namespace syz::audit
