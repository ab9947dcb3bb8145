#pragma once

#include <vector>

#include "tracekit/fpmod.hpp"

namespace tracekit {

// Finitely many steps of a free resolution ... -> R^{r2} -> R^{r1} -> R^{r0}
// with diffs[0] the presentation of the module. d_i * d_{i+1} = 0 exactly.
struct FreeResolution {
  FPModule module;
  std::vector<int> ranks;   // ranks[k] = rank of F_k
  std::vector<RMat> diffs;  // diffs[k] = d_{k+1} : F_{k+1} -> F_k
  int length() const { return int(diffs.size()); }
};

// Iterated kernels of the presentation. With `minimize` set, redundant
// generators of each kernel step are pruned (the first differential is never
// touched).
FreeResolution free_resolution(const FPModule& M, int length,
                               bool minimize = true);

struct ExtGroup {
  int index = 0;
  FPModule module;
  bool is_zero() const { return module.is_zero_module(); }
};

// Cohomology of Hom(F., N) at position i, for a resolution F. of M of length
// at least i+1.
ExtGroup ext_group(const FreeResolution& F, int i, const FPModule& N);
ExtGroup ext(int i, const FPModule& M, const FPModule& N);

// min { i : Ext^i(R/m, M) != 0 } under the graded-local convention.
int depth_module(const FPModule& M);

// Ext^1(M, M) = 0.
bool is_rigid(const FPModule& M);

}  // namespace tracekit
