#include "tracekit/catalog.hpp"

namespace tracekit {

Catalog make_catalog(std::uint32_t p) {
  Catalog c;
  c.plane = AmbientRing::make(p, {"x", "y"}, {}, true);
  c.node = AmbientRing::make(p, {"x", "y"}, {"x*y"}, false);
  c.cusp = AmbientRing::make(p, {"x", "y"}, {"y^2-x^3"}, true);
  c.t345 = AmbientRing::make(p, {"x", "y", "z"},
                             {"y^2-x*z", "x^2*y-z^2", "x^3-y*z"}, true);
  c.fat = AmbientRing::make(p, {"x", "y"}, {"x*y", "y^2"}, false);
  return c;
}

FPModule monomial_curve_module(const AmbientRingPtr& t345) {
  RMat pres(t345, 2, 3);
  pres.at(0, 0) = parse_element(t345, "-z");
  pres.at(0, 1) = parse_element(t345, "-y");
  pres.at(0, 2) = parse_element(t345, "x^2");
  pres.at(1, 0) = parse_element(t345, "y");
  pres.at(1, 1) = parse_element(t345, "x");
  pres.at(1, 2) = parse_element(t345, "-z");
  return FPModule::from_presentation(t345, std::move(pres));
}

}  // namespace tracekit
