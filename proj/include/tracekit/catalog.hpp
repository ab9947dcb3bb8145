#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tracekit/fpmod.hpp"

namespace tracekit {

// The built-in test rings. Domain flags are asserted by construction.
struct Catalog {
  AmbientRingPtr plane;  // F_p[x,y]
  AmbientRingPtr node;   // F_p[x,y]/(xy), two lines
  AmbientRingPtr cusp;   // F_p[x,y]/(y^2-x^3), the semigroup ring of <2,3>
  AmbientRingPtr t345;   // F_p[x,y,z]/(y^2-xz, x^2y-z^2, x^3-yz) = k[t^3,t^4,t^5]
  AmbientRingPtr fat;    // F_p[x,y]/(xy, y^2), a non-reduced line

  std::vector<std::pair<std::string, AmbientRingPtr>> all() const {
    return {{"plane", plane}, {"node", node}, {"cusp", cusp},
            {"t345", t345},  {"fat", fat}};
  }
};

Catalog make_catalog(std::uint32_t p = kDefaultPrime);

// coker [[-z,-y,x^2],[y,x,-z]] over the monomial curve ring.
FPModule monomial_curve_module(const AmbientRingPtr& t345);

}  // namespace tracekit
