#include "syzygy/detail/gb_engine.hpp"

#include "syzygy/audit.hpp"

#include <algorithm>
#include <tuple>

namespace syz::detail {

ModPoly add_multiple(const ModPoly& a, const Scalar& c, const Monomial& m, const ModPoly& b) {
  ModPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    ModTerm bt{b[j].coeff * c, b[j].mono * m, b[j].comp};
    if (i == a.size() || pot_greater(bt, a[i])) {
      out.push_back(std::move(bt));
      ++j;
    } else if (pot_greater(a[i], bt)) {
      out.push_back(a[i++]);
    } else {
      Scalar s = a[i].coeff + bt.coeff;
      if (!s.is_zero()) out.push_back(ModTerm{s, bt.mono, bt.comp});
      ++i;
      ++j;
    }
  }
  return out;
}

ModPoly normalize(ModPoly v) {
  std::sort(v.begin(), v.end(), pot_greater);
  ModPoly out;
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

ModPoly make_monic(ModPoly v) {
  if (v.empty() || v.front().coeff.is_one()) return v;
  Scalar inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
  return v;
}

bool single_component(const ModPoly& v) {
  for (const auto& t : v)
    if (t.comp != v.front().comp) return false;
  return true;
}

ModPoly to_modpoly(const std::vector<Polynomial>& v, std::uint32_t offset) {
  ModPoly out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms())
      out.push_back(ModTerm{t.coeff, t.mono, offset + static_cast<std::uint32_t>(i)});
  return out;  // already in position-over-term order
}

std::vector<Polynomial> from_modpoly(const PolyRingPtr& ring, const ModPoly& v, std::size_t rank,
                                     std::uint32_t offset) {
  std::vector<std::vector<Term>> terms(rank);
  for (const auto& t : v)
    if (t.comp >= offset && t.comp < offset + rank) terms[t.comp - offset].push_back(Term{t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& ts : terms) out.emplace_back(ring, std::move(ts));
  return out;
}

GbEngine::GbEngine(PolyRingPtr ring, std::vector<int> shifts)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), active_by_comp_(shifts_.size()) {}

int GbEngine::degree(const ModPoly& v) const {
  if (v.empty()) return 0;
  return v.front().mono.degree() + shifts_[v.front().comp];
}

void GbEngine::add_generator(ModPoly v) {
  v = normalize(std::move(v));
  if (v.empty()) return;
  int d = degree(v);
  pending_.push_back(Pending{d, seq_++, std::move(v)});
}

bool GbEngine::has_pending(int degree_bound) const {
  for (const auto& p : pending_)
    if (p.degree <= degree_bound) return true;
  for (const auto& p : pairs_)
    if (p.degree <= degree_bound) return true;
  return false;
}

const ModPoly* GbEngine::find_reducer(const ModTerm& t) const {
  for (std::size_t idx : active_by_comp_[t.comp]) {
    const ModPoly& g = elements_[idx];
    if (g.front().mono.divides(t.mono)) return &g;
  }
  return nullptr;
}

ModPoly GbEngine::reduce(ModPoly v) const {
  ModPoly done;
  // `v` keeps the unprocessed part; terms move to `done` once irreducible.
  std::size_t pos = 0;
  while (pos < v.size()) {
    const ModTerm& t = v[pos];
    const ModPoly* g = find_reducer(t);
    if (!g) {
      done.push_back(t);
      ++pos;
      continue;
    }
    ModPoly rest(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
    Monomial q = t.mono.quotient(g->front().mono);
    Scalar c = -t.coeff;  // g is monic
    v = add_multiple(rest, c, q, *g);
    pos = 0;
  }
  return done;
}

ModPoly GbEngine::s_vector(const Pair& p) const {
  const ModPoly& f = elements_[p.i];
  const ModPoly& g = elements_[p.j];
  Monomial mf = p.lcm.quotient(f.front().mono);
  Monomial mg = p.lcm.quotient(g.front().mono);
  ModPoly sf = add_multiple(ModPoly{}, Scalar::one(ring_->field()), mf, f);
  return add_multiple(sf, -Scalar::one(ring_->field()), mg, g);
}

void GbEngine::insert(ModPoly h) {
  h = make_monic(std::move(h));
  const std::size_t n = elements_.size();
  const std::uint32_t comp = h.front().comp;
  const Monomial lm = h.front().mono;
  const bool h_single = single_component(h);
  elements_.push_back(std::move(h));
  single_comp_.push_back(h_single);

  // Gebauer-Moeller update.
  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool coprime;
    bool alive = true;
  };
  std::vector<Cand> cands;
  for (std::size_t g : active_by_comp_[comp]) {
    const Monomial& lg = elements_[g].front().mono;
    cands.push_back(Cand{g, ring_->lcm(lm, lg), lm.coprime(lg)});
  }
  // Keep a candidate if coprime or no other surviving candidate's lcm divides it.
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (cands[a].coprime) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || !cands[b].alive) continue;
      if (cands[b].lcm.divides(cands[a].lcm)) {
        // Equal lcms: keep the earlier one only.
        if (cands[b].lcm == cands[a].lcm && b > a) continue;
        cands[a].alive = false;
        break;
      }
    }
  }
  // Chain criterion on old pairs.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (elements_[p.i].front().comp != comp) return false;
    if (!lm.divides(p.lcm)) return false;
    Monomial li = ring_->lcm(elements_[p.i].front().mono, lm);
    Monomial lj = ring_->lcm(elements_[p.j].front().mono, lm);
    return !(li == p.lcm) && !(lj == p.lcm);
  });
  for (const auto& c : cands) {
    if (!c.alive) continue;
    // Product criterion holds only for vectors supported in a single component.
    if (c.coprime && h_single && single_comp_[c.g]) continue;
    pairs_.push_back(Pair{c.lcm.degree() + shifts_[comp], c.g, n, c.lcm});
  }
  auto& act = active_by_comp_[comp];
  std::erase_if(act, [&](std::size_t g) { return lm.divides(elements_[g].front().mono); });
  act.push_back(n);
}

void GbEngine::complete(int degree_bound) {
  for (;;) {
    // Lowest degree first; generators before pairs; ties by insertion order.
    int best_deg = INT_MAX;
    int best_kind = -1;
    std::size_t best_idx = 0;
    for (std::size_t k = 0; k < pending_.size(); ++k) {
      const auto& p = pending_[k];
      if (p.degree < best_deg || (p.degree == best_deg && best_kind == 0 && p.seq < pending_[best_idx].seq)) {
        best_deg = p.degree;
        best_kind = 0;
        best_idx = k;
      }
    }
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto& p = pairs_[k];
      if (p.degree < best_deg) {
        best_deg = p.degree;
        best_kind = 1;
        best_idx = k;
      } else if (p.degree == best_deg && best_kind == 1) {
        const auto& b = pairs_[best_idx];
        if (std::tie(p.j, p.i) < std::tie(b.j, b.i)) best_idx = k;
      }
    }
    if (best_kind < 0 || best_deg > degree_bound) return;
    ModPoly v;
    if (best_kind == 0) {
      v = std::move(pending_[best_idx].v);
      pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(best_idx));
    } else {
      Pair p = pairs_[best_idx];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best_idx));
      v = s_vector(p);
      ++pairs_processed_;
    }
    v = reduce(std::move(v));
    if (!v.empty()) insert(std::move(v));
  }
}

std::vector<ModPoly> GbEngine::reduced_basis() const {
  std::vector<std::size_t> order;
  for (const auto& comp : active_by_comp_)
    for (std::size_t idx : comp) order.push_back(idx);
  std::sort(order.begin(), order.end());
  std::vector<ModPoly> out;
  out.reserve(order.size());
  for (std::size_t idx : order) {
    const ModPoly& e = elements_[idx];
    ModPoly tail(e.begin() + 1, e.end());
    ModPoly reduced = reduce(std::move(tail));
    ModPoly full;
    full.reserve(reduced.size() + 1);
    full.push_back(e.front());
    full.insert(full.end(), reduced.begin(), reduced.end());
    out.push_back(std::move(full));
  }
  if (audit::enabled()) audit::record_basis(satisfies_buchberger_criterion(ring_, shifts_, out));
  return out;
}

std::vector<std::vector<Monomial>> GbEngine::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(shifts_.size());
  for (std::size_t c = 0; c < active_by_comp_.size(); ++c)
    for (std::size_t idx : active_by_comp_[c]) out[c].push_back(elements_[idx].front().mono);
  return out;
}

bool satisfies_buchberger_criterion(const PolyRingPtr& ring, const std::vector<int>& shifts,
                                    const std::vector<ModPoly>& basis) {
  // Reduce against the basis itself, not a recomputed one.
  GbEngine probe(ring, shifts);
  for (const auto& b : basis) {
    if (b.empty()) continue;
    probe.elements_.push_back(make_monic(b));
    probe.single_comp_.push_back(single_component(b));
    probe.active_by_comp_[b.front().comp].push_back(probe.elements_.size() - 1);
  }
  const auto& els = probe.elements_;
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (els[i].front().comp != els[j].front().comp) continue;
      Monomial l = ring->lcm(els[i].front().mono, els[j].front().mono);
      ModPoly s = probe.s_vector(GbEngine::Pair{0, i, j, l});
      if (!probe.reduce(std::move(s)).empty()) return false;
    }
  }
  return true;
}

}  // namespace syz::detail
