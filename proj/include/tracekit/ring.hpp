#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tracekit/groebner.hpp"
#include "tracekit/poly.hpp"

namespace tracekit {

class AmbientRing;
using AmbientRingPtr = std::shared_ptr<const AmbientRing>;

// The quotient ring R = k[x_1..x_n]/J under the fixed grevlex order. The
// reduced Groebner basis of J is computed once at construction. J must lie in
// (x_1..x_n): the graded-local convention reads every local hypothesis at
// the maximal ideal m = (x_1..x_n).
class AmbientRing {
 public:
  static AmbientRingPtr make(std::uint32_t p, std::vector<std::string> vars,
                             const std::vector<std::string>& relations,
                             bool domain = false);
  static AmbientRingPtr make(PolyRingPtr poly,
                             std::vector<Polynomial> relations,
                             bool domain = false);

  const PolyRingPtr& poly_ring() const { return poly_; }
  // Reduced Groebner basis of the defining ideal J (possibly empty).
  const std::vector<Polynomial>& defining_gb() const { return j_gb_; }
  int var_count() const { return poly_->var_count(); }
  int krull_dimension() const { return dim_; }
  // Catalog metadata: primality of J is asserted by the constructor's caller,
  // not decided algorithmically.
  bool is_domain() const { return domain_; }

  Polynomial normal_form(const Polynomial& f) const;
  std::string name() const;

  AmbientRing(PolyRingPtr poly, std::vector<Polynomial> relations, bool domain);

 private:
  PolyRingPtr poly_;
  std::vector<Polynomial> j_gb_;
  bool domain_ = false;
  int dim_ = 0;
};

void check_same_ring(const AmbientRingPtr& a, const AmbientRingPtr& b);

// An element of R in normal form; equality is representation equality.
class RingElement {
 public:
  RingElement() = default;
  RingElement(AmbientRingPtr ring, const Polynomial& f);

  static RingElement zero(const AmbientRingPtr& ring);
  static RingElement one(const AmbientRingPtr& ring);
  static RingElement scalar(const AmbientRingPtr& ring, std::uint32_t c);

  const AmbientRingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement negated() const;
  bool operator==(const RingElement& o) const { return nf_ == o.nf_; }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  std::string str() const { return nf_.str(); }

 private:
  AmbientRingPtr ring_;
  Polynomial nf_;
};

RingElement parse_element(const AmbientRingPtr& ring, const std::string& text);

// Matrix over R, row-major, entries in normal form.
class RMat {
 public:
  RMat() = default;
  RMat(AmbientRingPtr ring, int rows, int cols);

  static RMat identity(const AmbientRingPtr& ring, int n);

  const AmbientRingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RingElement& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const RingElement& at(int r, int c) const {
    return a_[std::size_t(r) * cols_ + c];
  }

  RMat transpose() const;
  RMat mul(const RMat& o) const;
  RMat operator-(const RMat& o) const;
  std::vector<RingElement> col(int c) const;
  bool is_zero() const;

  std::string str() const;

 private:
  AmbientRingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<RingElement> a_;
};

RMat block_diag(const RMat& A, int copies);
RMat hcat(const RMat& A, const RMat& B);

// --- submodule computations over R (columns of length `rank`) ---

// Lift columns to k[x]^rank and append J*e_i for every defining relation.
std::vector<FreeVec> lift_with_relations(const AmbientRingPtr& ring,
                                         const std::vector<FreeVec>& cols,
                                         int rank);
std::vector<FreeVec> matrix_columns(const RMat& A);

// Reduced poly-level Groebner basis of (columns + J*R^rank); determines
// membership and equality of the R-submodule canonically.
std::vector<FreeVec> submodule_gb(const AmbientRingPtr& ring,
                                  const std::vector<FreeVec>& cols, int rank);
bool submodule_member(const AmbientRingPtr& ring, const FreeVec& v,
                      const std::vector<FreeVec>& gb);

// Canonical generators over R: the submodule GB with vectors lying in J*R^g
// dropped, entries normalized, duplicates removed.
std::vector<FreeVec> canonical_submodule_gens(const AmbientRingPtr& ring,
                                              const std::vector<FreeVec>& gb);

// Columns generating ker(A : R^cols -> R^rows).
RMat kernel_over_quotient(const RMat& A);

// Coefficients over `cols` expressing `target` as an R-combination, if any.
std::optional<std::vector<RingElement>> lift_over_ring(
    const AmbientRingPtr& ring, const FreeVec& target,
    const std::vector<FreeVec>& cols, int rank);

// Generators of { v : A v lies in the span of rel's columns } as a matrix.
RMat preimage_gens(const RMat& A, const RMat& rel);

// --- ideals ---

class Ideal {
 public:
  Ideal() = default;
  Ideal(AmbientRingPtr ring, std::vector<RingElement> gens);

  static Ideal zero(const AmbientRingPtr& ring);
  static Ideal unit(const AmbientRingPtr& ring);
  static Ideal span(const AmbientRingPtr& ring,
                    const std::vector<std::string>& gens);

  const AmbientRingPtr& ring() const { return ring_; }
  const std::vector<RingElement>& gens() const { return gens_; }

  // Reduced GB of (gens + J) in k[x]; canonical for the ideal.
  const std::vector<Polynomial>& poly_gb() const;
  // GB members surviving modulo J, as ring elements: the printed form.
  const std::vector<RingElement>& canonical_gens() const;

  bool contains(const RingElement& r) const;
  bool contains_one() const;
  bool is_zero() const;
  bool equals(const Ideal& o) const;
  bool contains_ideal(const Ideal& o) const;
  RingElement reduce(const RingElement& r) const;

  std::string str() const;
  std::uint64_t content_hash() const;

 private:
  struct Cache;
  AmbientRingPtr ring_;
  std::vector<RingElement> gens_;
  std::shared_ptr<Cache> cache_;
  void ensure_cache() const;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal scale_ideal(const RingElement& c, const Ideal& a);
// { r in R : r * J2 is contained in I }
Ideal ideal_quotient(const Ideal& I, const Ideal& J2);
// Union over k of (I : f^k), by adjoining an inverse variable and eliminating.
Ideal saturate(const Ideal& I, const RingElement& f);

Ideal maximal_ideal(const AmbientRingPtr& ring);

bool is_nonzerodivisor(const RingElement& g);

struct NzdWitness {
  RingElement element;
  std::vector<RingElement> combo;  // element = sum combo[k] * gens[k]
};
// An element of I with zero annihilator: tries the generators, then random
// field-coefficient combinations (default bound 100), then a deterministic
// small-coefficient enumeration. Throws when I consists of zerodivisors,
// detected up front via (0 : I) != 0.
NzdWitness find_nonzerodivisor(const Ideal& I, std::uint64_t seed = 0,
                               int random_tries = 100);

// Grade of an ideal: the unit ideal has infinite grade by convention.
struct ExtendedGrade {
  bool infinite = false;
  int value = 0;
  static ExtendedGrade inf() { return {true, 0}; }
  static ExtendedGrade of(int v) { return {false, v}; }
  bool at_least(int k) const { return infinite || value >= k; }
  bool operator==(const ExtendedGrade& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  std::string str() const {
    return infinite ? "infinite" : std::to_string(value);
  }
};

// min { i : Ext^i(R/I, R) != 0 }; implemented with the homology engine.
ExtendedGrade grade(const Ideal& I);
// grade of the designated maximal ideal (x_1..x_n).
int depth(const AmbientRingPtr& ring);
// Ext^{dim+1}(R/m, R) = 0, the one-step vanishing test.
bool is_gorenstein(const AmbientRingPtr& ring);

// R with one fresh variable adjoined (a flat extension); the defining ideal
// is extended verbatim.
AmbientRingPtr adjoin_variable(const AmbientRingPtr& ring,
                               const std::string& name);
RingElement extend_element(const RingElement& r, const AmbientRingPtr& bigger);
Ideal extend_ideal(const Ideal& I, const AmbientRingPtr& bigger);
RMat extend_matrix(const RMat& A, const AmbientRingPtr& bigger);

}  // namespace tracekit
