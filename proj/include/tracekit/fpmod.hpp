#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tracekit/ring.hpp"

namespace tracekit {

// A finitely presented R-module M = coker(A) for a presentation matrix A
// (generators x relations). The Groebner basis of the relation submodule
// (columns of A together with J*R^g) is computed once on demand.
class FPModule {
 public:
  FPModule() = default;

  static FPModule from_presentation(AmbientRingPtr ring, RMat pres);
  static FPModule free_module(const AmbientRingPtr& ring, int rank);
  // The ideal's given generators with their syzygy matrix as relations.
  static FPModule from_ideal(const Ideal& I);
  // R/I on one generator.
  static FPModule quotient_by_ideal(const Ideal& I);

  const AmbientRingPtr& ring() const;
  const RMat& presentation() const;
  int gen_count() const;
  int rel_count() const;

  const std::vector<FreeVec>& relation_gb() const;
  // Canonical generators of the relation submodule; a smaller presentation
  // of the same module, used by the heavier constructions.
  const RMat& reduced_relations() const;
  // Is the coordinate vector v (length gen_count) zero in M?
  bool element_is_zero(const std::vector<RingElement>& v) const;
  bool elements_equal(const std::vector<RingElement>& u,
                      const std::vector<RingElement>& v) const;

  bool is_zero_module() const;
  // dim_k M/mM under the graded-local convention.
  int minimal_generators() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

class ModuleHomomorphism {
 public:
  ModuleHomomorphism() = default;
  // mat is gen_count(target) x gen_count(source). When `check` is set the
  // lifting condition mat * A_source ⊆ col-span(A_target) is verified.
  ModuleHomomorphism(FPModule source, FPModule target, RMat mat,
                     bool check = true);

  static ModuleHomomorphism identity(const FPModule& M);
  static ModuleHomomorphism multiplication(const FPModule& M,
                                           const RingElement& r);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const RMat& matrix() const { return mat_; }

  std::vector<RingElement> apply(const std::vector<RingElement>& v) const;

  // Equality in Hom(M,N): every column of the difference lies in the
  // relation submodule of the target.
  bool equals(const ModuleHomomorphism& o) const;
  bool is_zero() const;
  ModuleHomomorphism compose(const ModuleHomomorphism& inner) const;
  ModuleHomomorphism operator+(const ModuleHomomorphism& o) const;
  ModuleHomomorphism operator-(const ModuleHomomorphism& o) const;

  bool commutes_with(const ModuleHomomorphism& o) const;

  struct KernelData {
    FPModule module;
    RMat inclusion;  // gen_count(source) x gens(kernel)
  };
  KernelData kernel() const;
  bool kernel_is_zero() const;
  FPModule cokernel() const;
  bool is_isomorphism() const;  // zero kernel and zero cokernel

  // Ideal generated by the entries of the matrix; for maps into R^1 this is
  // the image ideal.
  Ideal entry_ideal() const;

 private:
  FPModule source_, target_;
  RMat mat_;
};

// Hom(M,N) presented as an FPModule, with each generator decoded to an
// explicit matrix and an encoder back into generator coordinates.
class HomModule {
 public:
  const FPModule& module() const { return module_; }
  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  int gen_count() const { return int(decode_.size()); }
  const RMat& decode_matrix(int i) const { return decode_[i]; }
  ModuleHomomorphism decode(int i) const;
  ModuleHomomorphism decode_combination(const std::vector<RingElement>& c) const;
  // Coefficients over the generators, when phi is a genuine homomorphism.
  std::optional<std::vector<RingElement>> encode(const RMat& phi) const;

  friend HomModule hom_module(const FPModule& M, const FPModule& N);

 private:
  FPModule module_, source_, target_;
  std::vector<RMat> decode_;
  std::vector<FreeVec> basis_cols_;  // vec'd generators
  std::vector<FreeVec> zero_cols_;   // vec'd zero-homomorphisms
};

HomModule hom_module(const FPModule& M, const FPModule& N);

// End(M) together with a multiplication table: table[i][j] holds the
// generator coordinates of decode(i) o decode(j).
struct EndAlgebra {
  HomModule hom;
  std::vector<std::vector<std::vector<RingElement>>> table;
  bool is_commutative() const;
};
EndAlgebra end_algebra(const FPModule& M);

// Hom(M, R) together with the value matrix B: B[i][j] = (functional j applied
// to generator i). The columns of B generate ker(A^T) over R.
struct DualModule {
  HomModule hom;
  RMat values;
  const FPModule& module() const { return hom.module(); }
};
DualModule dual(const FPModule& M);

// Presentation [A_M (x) I | I (x) A_N] on gen_count(M)*gen_count(N)
// generators; generator (i,j) sits at flat index i*gen_count(N)+j.
FPModule tensor(const FPModule& M, const FPModule& N);
FPModule direct_sum(const FPModule& M, const FPModule& N);

// The natural map M -> (M*)*.
ModuleHomomorphism evaluation_map(const FPModule& M);
bool is_torsionless(const FPModule& M);
bool is_reflexive(const FPModule& M);

Ideal annihilator(const FPModule& M);
bool is_faithful(const FPModule& M);

// Kernel of the evaluation map; only meaningful over catalog domains.
FPModule torsion_submodule(const FPModule& M);

}  // namespace tracekit
