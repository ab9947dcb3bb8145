#pragma once

#include <utility>
#include <vector>

#include "tracekit/fpmod.hpp"

namespace tracekit {

// A finite R-submodule (1/d)*N of the total quotient ring; d is a verified
// nonzerodivisor. Fractions are never reduced: equality and membership go
// through cross-multiplication.
struct FractionalIdeal {
  Ideal numerator;
  RingElement denominator;

  static FractionalIdeal whole_ring(const AmbientRingPtr& ring);

  const AmbientRingPtr& ring() const { return numerator.ring(); }
  bool contains_one() const;
  // a/b with b a nonzerodivisor: a*d in b*N.
  bool contains_fraction(const RingElement& a, const RingElement& b) const;
  bool subset_of(const FractionalIdeal& o) const;
  std::string str() const;
};

bool fractional_equal(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal fractional_product(const FractionalIdeal& a,
                                   const FractionalIdeal& b);
// C*C inside C, via numerator cross-multiplication.
bool fractional_mult_closed(const FractionalIdeal& c);

struct Fraction {
  RingElement num;
  RingElement den;  // nonzerodivisor
  std::string str() const;
};
bool fraction_equal(const Fraction& a, const Fraction& b);

// Trace data of a module: the value matrix B of Hom(M,R) (columns generate
// ker(A^T) over R), the trace ideal I_1(B), and for each trace generator a
// certificate (i,j) recording it as functional j applied to generator i.
struct TraceData {
  FPModule module;
  DualModule dual_mod;
  Ideal tau;
  std::vector<std::pair<int, int>> certificates;  // tau.gens()[k] = B[i][j]

  const RMat& B() const { return dual_mod.values; }
};

TraceData trace_data(const FPModule& M);

// I_1 of the kernel of the transposed presentation; the direct route that
// does not go through the Hom machinery.
Ideal trace_ideal(const FPModule& M);

// M (x) M* -> R, generator (i,j) -> B[i][j]. Its entry ideal equals the
// trace ideal.
ModuleHomomorphism trace_map(const TraceData& td);

// Hom(I, R) as (1/x)(x : I) for a found nonzerodivisor x in I.
FractionalIdeal fractional_dual(const Ideal& I, std::uint64_t seed = 0);
// End(I) as (1/x)(xI : I).
FractionalIdeal fractional_end(const Ideal& I, std::uint64_t seed = 0);

// The endomorphism of M acting as multiplication by q = a/d: columns solve
// a*m_i = d * (sum Phi[j][i] m_j) modulo relations.
ModuleHomomorphism sigma_embed(const FPModule& M, const Fraction& q);

// The endomorphism of M* sending a functional to (a/d) times it; every value
// is divided exactly by d.
ModuleHomomorphism rho_embed(const TraceData& td, const Fraction& q);

// Descends a central endomorphism to the fraction qbar(x)/x where qbar(x) is
// assembled from the trace certificates. Verifies centrality against the
// supplied End(M) generators.
Fraction center_descend(const TraceData& td, const ModuleHomomorphism& f,
                        const NzdWitness& x,
                        const std::vector<ModuleHomomorphism>& end_gens);

}  // namespace tracekit
