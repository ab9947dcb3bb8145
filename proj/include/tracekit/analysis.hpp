#pragma once

#include <string>
#include <vector>

#include "tracekit/homology.hpp"
#include "tracekit/trace.hpp"

namespace tracekit {

// Generators of the center of End(M) and whether the center reduces to
// multiplications by ring elements.
struct CenterData {
  EndAlgebra algebra;
  std::vector<ModuleHomomorphism> generators;
  bool scalar = true;  // center = R * id
};

CenterData center_of_end(const FPModule& M);

// Faithful with center = R*id: the natural map R -> Z(End M) is bijective.
bool is_balanced(const FPModule& M);

// 1 lies in the trace ideal (graded-local reading of free summands).
bool has_free_summand(const FPModule& M);

// Presents a multiplicatively closed fractional ideal C = (1/d)(a_1..a_m),
// 1 in C, as an affine ring: adjoin u_i -> a_i/d for the generators with
// a_i/d outside R and eliminate the inverted denominator. The result stays
// centered at the origin so its Gorenstein test is meaningful.
AmbientRingPtr ring_presentation_of_fractional(const FractionalIdeal& C);

enum class CheckState { Satisfied, NotSatisfied, Unverifiable, NotApplicable };

struct CheckItem {
  std::string name;
  CheckState state = CheckState::Satisfied;
  std::string detail;
  bool ok() const {
    return state == CheckState::Satisfied || state == CheckState::NotApplicable;
  }
};

enum class ReportStatus { Pass, HypothesesNotMet, Fail };

std::string to_string(ReportStatus s);

// Structured outcome of one theorem check. FAIL only occurs when every
// hypothesis holds and some conclusion fails; such a report always carries a
// witness.
struct VerificationReport {
  std::string theorem;
  ReportStatus status = ReportStatus::Pass;
  std::vector<CheckItem> hypotheses;
  std::vector<CheckItem> conclusions;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  void finalize();  // derives `status` from the checklists
  std::string text() const;
  std::string json() const;  // stable shape, key order fixed
};

// Center of End(M) versus End of the trace ideal, through the sigma
// embedding and its descent; hypotheses: M reflexive and faithful.
VerificationReport verify_theorem_main(const FPModule& M,
                                       std::uint64_t seed = 0);
// The dual-side statement through rho; hypothesis: the trace ideal has
// positive grade.
VerificationReport verify_theorem_main2(const FPModule& M,
                                        std::uint64_t seed = 0);
// The trace-ideal calculus: generation, additivity, idempotence, the tensor
// identity, dual-end agreement, annihilators, flat extension.
VerificationReport verify_trace_properties(const FPModule& M,
                                           const FPModule& N,
                                           std::uint64_t seed = 0);
// Free summands of End(M) force free summands of M; balanced iff free
// summand; dual of the trace ideal trivial forces the trace ideal trivial.
// Hypotheses: depth R <= 1 and M reflexive.
VerificationReport verify_free_summand_theorems(const FPModule& M,
                                                std::uint64_t seed = 0);
// Rigid + Gorenstein center forces a free summand over a one-dimensional
// Gorenstein ring; also the tensor depth consequence of rigidity.
VerificationReport verify_rigidity_theorem(const FPModule& M,
                                           std::uint64_t seed = 0);
// Torsion in tau (x) tau* for non-trivial trace ideals over one-dimensional
// Gorenstein domains; vacuous when the trace ideal is the unit ideal.
VerificationReport hw_trace_check(const Ideal& I, std::uint64_t seed = 0);

}  // namespace tracekit
