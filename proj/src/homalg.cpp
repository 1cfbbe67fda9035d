#include "syzygy/homalg.hpp"

#include "syzygy/errors.hpp"

#include <sstream>

namespace syz {

std::string HomologyReport::describe() const {
  std::ostringstream out;
  if (finite_length_dimension) {
    out << "dim_k = " << *finite_length_dimension;
  } else {
    out << "infinite length; HF[" << hf_from << ".." << hf_bound << "] =";
    for (long long v : truncated_hf) out << " " << v;
  }
  return out.str();
}

HomologyReport make_homology_report(std::size_t index, FPModule module) {
  HomologyReport rep(index, std::move(module));
  rep.finite_length_dimension = finite_length(rep.module);
  if (!rep.finite_length_dimension) {
    int from = 0;
    for (int s : rep.module.generator_shifts()) from = std::min(from, s);
    rep.hf_from = from;
    rep.truncated_hf = hilbert_function(rep.module, from, rep.hf_bound);
  }
  return rep;
}

FPModule tensor_free(const FreeModule& f, const FPModule& n) {
  std::vector<FPModule> parts;
  for (int s : f.shifts) parts.push_back(twist(n, -s));
  return direct_sum(parts, n.ring());
}

FPModule hom_free(const FreeModule& f, const FPModule& n) {
  std::vector<FPModule> parts;
  for (int s : f.shifts) parts.push_back(twist(n, s));
  return direct_sum(parts, n.ring());
}

HomologyReport tor(const FPModule& m, const FPModule& n, std::size_t i) {
  require_same_ring(*m.ring(), *n.ring());
  const auto& ring = m.ring();
  MinimalResolution res = free_resolution(m, i + 1);
  const std::size_t g = n.num_generators();
  FPModule zero = FPModule::zero(ring);
  FPModule ti = tensor_free(res.free_module(i), n);
  FPModule tnext = tensor_free(res.free_module(i + 1), n);
  ModuleHom in{tnext, ti, res.matrix(i + 1).kronecker_identity(g)};
  if (!in.matrix.ring()) in.matrix = Matrix(ring->ambient(), ti.num_generators(), tnext.num_generators());
  ModuleHom out = ModuleHom::zero(ti, zero);
  if (i >= 1) {
    FPModule tprev = tensor_free(res.free_module(i - 1), n);
    out = ModuleHom{ti, tprev, res.matrix(i).kronecker_identity(g)};
    if (!out.matrix.ring()) out.matrix = Matrix(ring->ambient(), tprev.num_generators(), ti.num_generators());
  }
  return make_homology_report(i, homology(in, out));
}

HomologyReport ext(const FPModule& m, const FPModule& n, std::size_t i) {
  require_same_ring(*m.ring(), *n.ring());
  const auto& ring = m.ring();
  MinimalResolution res = free_resolution(m, i + 1);
  const std::size_t g = n.num_generators();
  FPModule zero = FPModule::zero(ring);
  FPModule hi = hom_free(res.free_module(i), n);
  FPModule hnext = hom_free(res.free_module(i + 1), n);
  auto dual = [&](std::size_t j, const FPModule& src, const FPModule& dst) {
    Matrix mat = res.matrix(j).transpose().kronecker_identity(g);
    if (!mat.ring() || mat.rows() != dst.num_generators() || mat.cols() != src.num_generators())
      mat = Matrix(ring->ambient(), dst.num_generators(), src.num_generators());
    return ModuleHom{src, dst, mat};
  };
  ModuleHom out = dual(i + 1, hi, hnext);
  ModuleHom in = ModuleHom::zero(zero, hi);
  if (i >= 1) in = dual(i, hom_free(res.free_module(i - 1), n), hi);
  return make_homology_report(i, homology(in, out));
}

std::size_t depth(const FPModule& m) {
  if (m.is_zero()) throw ZeroModuleError("depth of the zero module is undefined");
  FPModule k = FPModule::residue_field(m.ring());
  const std::size_t n = m.ring()->num_variables();
  for (std::size_t i = 0; i <= n; ++i)
    if (!ext(k, m, i).is_zero()) return i;
  throw Error("internal: Ext(k, M) vanished through the number of variables");
}

std::size_t depth(const QuotientRingPtr& ring) { return depth(FPModule::free(ring, {0})); }

BassReport bass_numbers(const FPModule& n, std::size_t max_index) {
  BassReport rep;
  FPModule k = FPModule::residue_field(n.ring());
  rep.depth = max_index + 1;
  for (std::size_t i = 0; i <= max_index; ++i) {
    HomologyReport e = ext(k, n, i);
    long long mu = e.finite_length_dimension.value_or(-1);
    rep.mu.push_back(mu);
    if (mu != 0 && rep.depth > max_index) rep.depth = i;
  }
  for (std::size_t i = rep.depth + 1; i <= max_index; ++i)
    if (rep.mu[i] == 0) rep.finite_injdim_hint = true;
  return rep;
}

std::string ProjectiveDimensionReport::describe() const {
  switch (kind) {
    case Kind::exact:
      return std::to_string(value);
    case Kind::at_least:
      return ">= " + std::to_string(value);
    case Kind::infinite:
      return "infinite";
  }
  return "";
}

ProjectiveDimensionReport projective_dimension(const FPModule& m, std::size_t bound) {
  if (bound < 1) throw PreconditionError("projective_dimension needs bound >= 1");
  ProjectiveDimensionReport rep;
  if (m.is_zero()) {
    rep.kind = ProjectiveDimensionReport::Kind::exact;
    rep.value = 0;
    rep.reason = "zero module";
    return rep;
  }
  MinimalResolution res = free_resolution(m, bound + 1);
  auto betti = res.betti();
  for (std::size_t j = 1; j < betti.size(); ++j)
    if (betti[j] == 0) {
      rep.kind = ProjectiveDimensionReport::Kind::exact;
      rep.value = j - 1;
      rep.reason = "resolution stops at F_" + std::to_string(j - 1);
      return rep;
    }
  rep.value = bound + 1;
  std::size_t dr = depth(m.ring());
  if (bound + 1 > dr) {
    rep.kind = ProjectiveDimensionReport::Kind::infinite;
    rep.reason = "F_" + std::to_string(bound + 1) + " != 0 and depth R = " + std::to_string(dr) +
                 " bounds every finite projective dimension";
  } else {
    rep.kind = ProjectiveDimensionReport::Kind::at_least;
    rep.reason = "resolution still running at F_" + std::to_string(bound + 1);
  }
  return rep;
}

ModuleHom multiplication_map(const FPModule& m, const Polynomial& f) {
  int d = f.is_zero() ? 0 : f.degree();
  FPModule target = twist(m, d);
  Matrix mat = Matrix::identity(m.ring()->ambient(), m.num_generators()).scaled(f);
  return ModuleHom{m, target, mat};
}

RegularSequenceReport is_regular_sequence(const std::vector<Polynomial>& x, const FPModule& m) {
  RegularSequenceReport rep;
  const auto& ring = m.ring();
  std::vector<Polynomial> prefix;
  FPModule cur = m;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Polynomial xj = ring->reduce(x[j]);
    if (!xj.is_homogeneous()) throw HomogeneityError("sequence element " + x[j].to_string() + " is not homogeneous");
    if (xj.is_unit()) throw PreconditionError("sequence element " + x[j].to_string() + " is not in the maximal ideal");
    if (xj.is_zero()) {
      rep.regular = false;
      rep.failing_index = j;
      rep.reason = "element " + std::to_string(j) + " is zero in R";
      if (cur.num_generators() > 0) {
        rep.witness.assign(cur.num_generators(), Polynomial(ring->ambient()));
        rep.witness[0] = ring->constant(1);
      }
      return rep;
    }
    GradedGenerators ker = kernel_generators(multiplication_map(cur, xj));
    if (ker.size() > 0) {
      rep.regular = false;
      rep.failing_index = j;
      rep.witness = ker.vectors.front();
      rep.reason = "element " + x[j].to_string() + " kills a nonzero element";
      return rep;
    }
    prefix.push_back(xj);
    cur = quotient_module(m, prefix);
  }
  if (cur.is_zero()) {
    rep.regular = false;
    rep.reason = "final quotient is zero";
  }
  return rep;
}

}  // namespace syz
