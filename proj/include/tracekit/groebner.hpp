#pragma once

#include <optional>
#include <vector>

#include "tracekit/poly.hpp"

namespace tracekit {

// Element of a free module k[x]^rank. Components are dense; rank 0 is the
// zero module. The module order is position-over-term: component 0 highest,
// ties broken by the ring's monomial order.
class FreeVec {
 public:
  FreeVec() = default;
  FreeVec(PolyRingPtr ring, int rank);
  FreeVec(PolyRingPtr ring, std::vector<Polynomial> comps);

  static FreeVec unit(PolyRingPtr ring, int rank, int comp);
  static FreeVec from_poly(const Polynomial& p);  // rank 1

  const PolyRingPtr& ring() const { return ring_; }
  int rank() const { return int(comps_.size()); }
  const Polynomial& operator[](int i) const { return comps_[i]; }
  Polynomial& operator[](int i) { return comps_[i]; }
  const std::vector<Polynomial>& comps() const { return comps_; }

  bool is_zero() const;
  // Leading component index under position-over-term, -1 when zero.
  int lead_comp() const;
  const Term& lead_term() const;  // requires nonzero

  FreeVec operator+(const FreeVec& o) const;
  FreeVec operator-(const FreeVec& o) const;
  FreeVec scaled(std::uint32_t c) const;
  FreeVec mul_poly(const Polynomial& f) const;
  // this - c * m * g
  FreeVec axpy_sub(std::uint32_t c, const Monomial& m, const FreeVec& g) const;
  // In-place variant; skips zero components of g.
  void axpy_sub_inplace(std::uint32_t c, const Monomial& m, const FreeVec& g);
  FreeVec monic() const;

  bool operator==(const FreeVec& o) const;

  std::string str() const;

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> comps_;
};

// Total order on nonzero leading terms (component, then monomial).
int compare_leads(const FreeVec& a, const FreeVec& b);

struct VecDivision {
  FreeVec remainder;
  std::vector<Polynomial> quotients;  // over the divisor list
};
// Full normal form against G; reducers are scanned in list order.
VecDivision divide_vec(const FreeVec& f, const std::vector<FreeVec>& G,
                       bool track_quotients);

struct GroebnerResult {
  // Reduced Groebner basis: monic, auto-reduced, sorted descending by lead.
  std::vector<FreeVec> basis;
};

// Buchberger with normal (degree-ascending) pair selection. Canonical: the
// output depends only on the generated submodule and the order.
GroebnerResult buchberger(const std::vector<FreeVec>& gens);

// All S-pairs of `basis` must reduce to zero against it; used as an assertable
// soundness check in tests.
bool is_groebner_basis(const std::vector<FreeVec>& basis);

// Reduced basis of { (a_1..a_s) : sum a_i cols[i] = 0 }, computed from the
// Groebner basis of the columns augmented with shadow coordinates: the
// position-over-term order eliminates the column block, and the basis
// elements supported purely on the shadow block are the syzygies. Every
// output v satisfies sum v[i]*cols[i] = 0 exactly.
std::vector<FreeVec> syzygies(const std::vector<FreeVec>& cols);

// Coefficients expressing `target` in terms of `cols`, if it lies in their
// span.
std::optional<std::vector<Polynomial>> lift_membership(
    const FreeVec& target, const std::vector<FreeVec>& cols);

// Generators of I ∩ k[keep] for an ideal of the ring of `gens`; `drop` lists
// the variable indices to eliminate. Output lives in `target`, whose
// variables are the kept ones in original order.
std::vector<Polynomial> eliminate_variables(const std::vector<Polynomial>& gens,
                                            const std::vector<int>& drop,
                                            const PolyRingPtr& target);

}  // namespace tracekit
