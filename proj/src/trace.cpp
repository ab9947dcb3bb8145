#include "tracekit/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace tracekit {

FractionalIdeal FractionalIdeal::whole_ring(const AmbientRingPtr& ring) {
  return {Ideal::unit(ring), RingElement::one(ring)};
}

bool FractionalIdeal::contains_one() const {
  return numerator.contains(denominator);
}

bool FractionalIdeal::contains_fraction(const RingElement& a,
                                        const RingElement& b) const {
  // a/b in (1/d)N  iff  a*d in b*N.
  Ideal bn = scale_ideal(b, numerator);
  return bn.contains(a * denominator);
}

bool FractionalIdeal::subset_of(const FractionalIdeal& o) const {
  for (const RingElement& a : numerator.gens()) {
    if (!o.contains_fraction(a, denominator)) return false;
  }
  return true;
}

std::string FractionalIdeal::str() const {
  std::ostringstream os;
  os << "(1/" << denominator.str() << ")*" << numerator.str();
  return os.str();
}

bool fractional_equal(const FractionalIdeal& a, const FractionalIdeal& b) {
  check_same_ring(a.ring(), b.ring());
  Ideal lhs = scale_ideal(b.denominator, a.numerator);
  Ideal rhs = scale_ideal(a.denominator, b.numerator);
  return lhs.equals(rhs);
}

FractionalIdeal fractional_product(const FractionalIdeal& a,
                                   const FractionalIdeal& b) {
  return {ideal_product(a.numerator, b.numerator),
          a.denominator * b.denominator};
}

bool fractional_mult_closed(const FractionalIdeal& c) {
  // (1/d^2) N*N inside (1/d) N  iff  N*N inside d*N.
  Ideal dn = scale_ideal(c.denominator, c.numerator);
  for (const RingElement& x : c.numerator.gens())
    for (const RingElement& y : c.numerator.gens())
      if (!dn.contains(x * y)) return false;
  return true;
}

std::string Fraction::str() const {
  return "(" + num.str() + ")/(" + den.str() + ")";
}

bool fraction_equal(const Fraction& a, const Fraction& b) {
  return (a.num * b.den) == (b.num * a.den);
}

TraceData trace_data(const FPModule& M) {
  TraceData td;
  td.module = M;
  td.dual_mod = dual(M);
  const RMat& B = td.dual_mod.values;
  std::vector<RingElement> gens;
  for (int j = 0; j < B.cols(); ++j) {
    for (int i = 0; i < B.rows(); ++i) {
      const RingElement& e = B.at(i, j);
      if (e.is_zero()) continue;
      bool dup = false;
      for (const RingElement& g : gens)
        if (g == e) {
          dup = true;
          break;
        }
      if (dup) continue;
      gens.push_back(e);
      td.certificates.push_back({i, j});
    }
  }
  td.tau = Ideal(M.ring(), std::move(gens));
  return td;
}

Ideal trace_ideal(const FPModule& M) {
  RMat B = kernel_over_quotient(M.reduced_relations().transpose());
  std::vector<RingElement> gens;
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j)
      if (!B.at(i, j).is_zero()) gens.push_back(B.at(i, j));
  return Ideal(M.ring(), std::move(gens));
}

ModuleHomomorphism trace_map(const TraceData& td) {
  const FPModule& M = td.module;
  const AmbientRingPtr& ring = M.ring();
  FPModule src = tensor(M, td.dual_mod.module());
  FPModule tgt = FPModule::free_module(ring, 1);
  int h = td.dual_mod.hom.gen_count();
  RMat mat(ring, 1, M.gen_count() * h);
  for (int i = 0; i < M.gen_count(); ++i)
    for (int j = 0; j < h; ++j) mat.at(0, i * h + j) = td.B().at(i, j);
  // The check validates that the pairing kills the tensor relations.
  return ModuleHomomorphism(src, tgt, std::move(mat), true);
}

FractionalIdeal fractional_dual(const Ideal& I, std::uint64_t seed) {
  NzdWitness x = find_nonzerodivisor(I, seed);
  Ideal num = ideal_quotient(Ideal(I.ring(), {x.element}), I);
  return {std::move(num), x.element};
}

FractionalIdeal fractional_end(const Ideal& I, std::uint64_t seed) {
  NzdWitness x = find_nonzerodivisor(I, seed);
  Ideal num = ideal_quotient(scale_ideal(x.element, I), I);
  return {std::move(num), x.element};
}

ModuleHomomorphism sigma_embed(const FPModule& M, const Fraction& q) {
  const AmbientRingPtr& ring = M.ring();
  const PolyRingPtr& poly = ring->poly_ring();
  int g = M.gen_count();
  std::vector<FreeVec> cols;
  for (int l = 0; l < g; ++l) {
    FreeVec v(poly, g);
    v[l] = q.den.poly();
    cols.push_back(std::move(v));
  }
  std::vector<FreeVec> rel = matrix_columns(M.reduced_relations());
  cols.insert(cols.end(), rel.begin(), rel.end());

  RMat phi(ring, g, g);
  for (int i = 0; i < g; ++i) {
    FreeVec target(poly, g);
    target[i] = (q.num).poly();
    auto coeffs = lift_over_ring(ring, target, cols, g);
    if (!coeffs)
      throw std::runtime_error("fraction does not act on the module");
    for (int l = 0; l < g; ++l) phi.at(l, i) = (*coeffs)[l];
  }
  return ModuleHomomorphism(M, M, std::move(phi), true);
}

ModuleHomomorphism rho_embed(const TraceData& td, const Fraction& q) {
  const FPModule& H = td.dual_mod.module();
  const AmbientRingPtr& ring = H.ring();
  const PolyRingPtr& poly = ring->poly_ring();
  const RMat& B = td.B();
  int g = B.rows(), h = B.cols();

  std::vector<FreeVec> den_col = {FreeVec::from_poly(q.den.poly())};
  RMat rho(ring, h, h);
  for (int j = 0; j < h; ++j) {
    // (a/d) * functional j: divide each value a*B[i][j] exactly by d.
    RMat scaled(ring, 1, g);
    for (int i = 0; i < g; ++i) {
      RingElement val = q.num * B.at(i, j);
      auto coeff = lift_over_ring(
          ring, FreeVec::from_poly(val.poly()), den_col, 1);
      if (!coeff)
        throw std::logic_error(
            "exact division failed while scaling a dual generator");
      scaled.at(0, i) = (*coeff)[0];
    }
    auto enc = td.dual_mod.hom.encode(scaled);
    if (!enc)
      throw std::logic_error("scaled functional failed to encode in the dual");
    for (int r = 0; r < h; ++r) rho.at(r, j) = (*enc)[r];
  }
  return ModuleHomomorphism(H, H, std::move(rho), true);
}

Fraction center_descend(const TraceData& td, const ModuleHomomorphism& f,
                        const NzdWitness& x,
                        const std::vector<ModuleHomomorphism>& end_gens) {
  for (const ModuleHomomorphism& g : end_gens) {
    if (!f.commutes_with(g))
      throw std::runtime_error("not a central endomorphism");
  }
  // qbar(x) = sum_k c_k * (functional j_k)(f(generator i_k)).
  RMat bt_phi = td.B().transpose().mul(f.matrix());
  RingElement qbar = RingElement::zero(td.module.ring());
  const std::vector<RingElement>& gens = td.tau.gens();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto [i, j] = td.certificates[k];
    qbar = qbar + x.combo[k] * bt_phi.at(j, i);
  }
  return {qbar, x.element};
}

}  // namespace tracekit
