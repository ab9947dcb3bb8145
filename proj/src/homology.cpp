#include "tracekit/homology.hpp"

#include <stdexcept>

namespace tracekit {

namespace {

// Drop kernel generators that are R-combinations of the remaining ones.
RMat prune_columns(const RMat& A) {
  RMat cur = A;
  bool changed = true;
  while (changed && cur.cols() > 0) {
    changed = false;
    for (int c = 0; c < cur.cols(); ++c) {
      std::vector<FreeVec> others;
      for (int cc = 0; cc < cur.cols(); ++cc) {
        if (cc == c) continue;
        FreeVec v(cur.ring()->poly_ring(), cur.rows());
        for (int r = 0; r < cur.rows(); ++r) v[r] = cur.at(r, cc).poly();
        others.push_back(std::move(v));
      }
      std::vector<FreeVec> gb = submodule_gb(cur.ring(), others, cur.rows());
      FreeVec v(cur.ring()->poly_ring(), cur.rows());
      for (int r = 0; r < cur.rows(); ++r) v[r] = cur.at(r, c).poly();
      if (submodule_member(cur.ring(), v, gb)) {
        RMat next(cur.ring(), cur.rows(), cur.cols() - 1);
        for (int r = 0; r < cur.rows(); ++r) {
          int k = 0;
          for (int cc = 0; cc < cur.cols(); ++cc) {
            if (cc == c) continue;
            next.at(r, k++) = cur.at(r, cc);
          }
        }
        cur = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

// Differential of Hom(F., N): phi -> phi o d, i.e. d^T acting blockwise on
// coordinate vectors of N^{rank}.
RMat hom_differential(const RMat& d, int gN) {
  const AmbientRingPtr& ring = d.ring();
  int a = d.rows(), b = d.cols();
  RMat out(ring, b * gN, a * gN);
  for (int q = 0; q < a; ++q)
    for (int j = 0; j < b; ++j)
      for (int r = 0; r < gN; ++r) out.at(j * gN + r, q * gN + r) = d.at(q, j);
  return out;
}

}  // namespace

FreeResolution free_resolution(const FPModule& M, int length, bool minimize) {
  if (length < 1) throw std::runtime_error("resolution length must be >= 1");
  FreeResolution F;
  F.module = M;
  F.ranks.push_back(M.gen_count());
  RMat d = M.presentation();
  F.diffs.push_back(d);
  F.ranks.push_back(d.cols());
  for (int k = 1; k < length; ++k) {
    RMat next = kernel_over_quotient(F.diffs.back());
    if (minimize) next = prune_columns(next);
    F.ranks.push_back(next.cols());
    F.diffs.push_back(std::move(next));
  }
  return F;
}

ExtGroup ext_group(const FreeResolution& F, int i, const FPModule& N) {
  if (i < 0 || F.length() < i + 1)
    throw std::runtime_error("resolution too short for the requested Ext");
  const AmbientRingPtr& ring = N.ring();
  check_same_ring(F.module.ring(), ring);
  int gN = N.gen_count();

  RMat delta_i = hom_differential(F.diffs[i], gN);
  const RMat& AN = N.reduced_relations();
  RMat rel_next = block_diag(AN, F.diffs[i].cols());
  RMat U = preimage_gens(delta_i, rel_next);

  RMat rel_here = block_diag(AN, F.ranks[i]);
  RMat V = (i >= 1) ? hcat(hom_differential(F.diffs[i - 1], gN), rel_here)
                    : rel_here;
  RMat pres = preimage_gens(U, V);
  return {i, FPModule::from_presentation(ring, std::move(pres))};
}

ExtGroup ext(int i, const FPModule& M, const FPModule& N) {
  return ext_group(free_resolution(M, i + 1), i, N);
}

int depth_module(const FPModule& M) {
  if (M.is_zero_module())
    throw std::runtime_error("depth of the zero module is undefined");
  const AmbientRingPtr& ring = M.ring();
  int d = ring->krull_dimension();
  FPModule residue = FPModule::quotient_by_ideal(maximal_ideal(ring));
  FreeResolution F = free_resolution(residue, d + 1);
  for (int i = 0; i <= d; ++i) {
    if (!ext_group(F, i, M).is_zero()) return i;
  }
  throw std::runtime_error(
      "module has no cohomology against the residue field up to the "
      "dimension bound; it is not supported at the maximal ideal");
}

bool is_rigid(const FPModule& M) { return ext(1, M, M).is_zero(); }

// --- grade, depth and the Gorenstein test for the ambient ring ---

ExtendedGrade grade(const Ideal& I) {
  if (I.contains_one()) return ExtendedGrade::inf();
  const AmbientRingPtr& ring = I.ring();
  int d = ring->krull_dimension();
  FPModule quotient = FPModule::quotient_by_ideal(I);
  FPModule free = FPModule::free_module(ring, 1);
  FreeResolution F = free_resolution(quotient, d + 1);
  for (int i = 0; i <= d; ++i) {
    if (!ext_group(F, i, free).is_zero()) return ExtendedGrade::of(i);
  }
  throw std::logic_error("grade of a proper ideal exceeded the dimension");
}

int depth(const AmbientRingPtr& ring) {
  ExtendedGrade g = grade(maximal_ideal(ring));
  if (g.infinite) throw std::logic_error("maximal ideal cannot be the unit");
  return g.value;
}

bool is_gorenstein(const AmbientRingPtr& ring) {
  int d = ring->krull_dimension();
  FPModule residue = FPModule::quotient_by_ideal(maximal_ideal(ring));
  FreeResolution F = free_resolution(residue, d + 2);
  FPModule free = FPModule::free_module(ring, 1);
  return ext_group(F, d + 1, free).is_zero();
}

}  // namespace tracekit
