#include "tracekit/fpmod.hpp"

#include <mutex>
#include <stdexcept>

namespace tracekit {

struct FPModule::Impl {
  AmbientRingPtr ring;
  RMat pres;
  mutable std::once_flag once;
  mutable std::vector<FreeVec> gb;
  mutable RMat reduced;
};

FPModule FPModule::from_presentation(AmbientRingPtr ring, RMat pres) {
  FPModule m;
  auto impl = std::make_shared<Impl>();
  impl->ring = std::move(ring);
  impl->pres = std::move(pres);
  m.impl_ = std::move(impl);
  return m;
}

FPModule FPModule::free_module(const AmbientRingPtr& ring, int rank) {
  return from_presentation(ring, RMat(ring, rank, 0));
}

FPModule FPModule::from_ideal(const Ideal& I) {
  const AmbientRingPtr& ring = I.ring();
  std::vector<RingElement> gens;
  for (const RingElement& g : I.gens())
    if (!g.is_zero()) gens.push_back(g);
  RMat row(ring, 1, int(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c) row.at(0, int(c)) = gens[c];
  RMat rels = kernel_over_quotient(row);
  return from_presentation(ring, std::move(rels));
}

FPModule FPModule::quotient_by_ideal(const Ideal& I) {
  const AmbientRingPtr& ring = I.ring();
  RMat pres(ring, 1, int(I.gens().size()));
  for (std::size_t c = 0; c < I.gens().size(); ++c)
    pres.at(0, int(c)) = I.gens()[c];
  return from_presentation(ring, std::move(pres));
}

const AmbientRingPtr& FPModule::ring() const { return impl_->ring; }
const RMat& FPModule::presentation() const { return impl_->pres; }
int FPModule::gen_count() const { return impl_->pres.rows(); }
int FPModule::rel_count() const { return impl_->pres.cols(); }

const std::vector<FreeVec>& FPModule::relation_gb() const {
  std::call_once(impl_->once, [this] {
    impl_->gb = submodule_gb(impl_->ring, matrix_columns(impl_->pres),
                             impl_->pres.rows());
    std::vector<FreeVec> canon =
        canonical_submodule_gens(impl_->ring, impl_->gb);
    RMat red(impl_->ring, impl_->pres.rows(), int(canon.size()));
    for (std::size_t c = 0; c < canon.size(); ++c)
      for (int r = 0; r < impl_->pres.rows(); ++r)
        red.at(r, int(c)) = RingElement(impl_->ring, canon[c][r]);
    impl_->reduced = std::move(red);
  });
  return impl_->gb;
}

const RMat& FPModule::reduced_relations() const {
  relation_gb();
  return impl_->reduced;
}

bool FPModule::element_is_zero(const std::vector<RingElement>& v) const {
  FreeVec w(ring()->poly_ring(), gen_count());
  for (int i = 0; i < gen_count(); ++i) w[i] = v[i].poly();
  return submodule_member(ring(), w, relation_gb());
}

bool FPModule::elements_equal(const std::vector<RingElement>& u,
                              const std::vector<RingElement>& v) const {
  std::vector<RingElement> d;
  for (int i = 0; i < gen_count(); ++i) d.push_back(u[i] - v[i]);
  return element_is_zero(d);
}

bool FPModule::is_zero_module() const {
  for (int i = 0; i < gen_count(); ++i) {
    std::vector<RingElement> e(gen_count(), RingElement::zero(ring()));
    e[i] = RingElement::one(ring());
    if (!element_is_zero(e)) return false;
  }
  return true;
}

int FPModule::minimal_generators() const {
  // dim_k M/mM = g - rank of the constant part of the presentation.
  const PrimeField& F = ring()->poly_ring()->field();
  int g = gen_count(), s = rel_count();
  std::vector<std::vector<std::uint32_t>> m(g, std::vector<std::uint32_t>(s, 0));
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < s; ++c)
      m[r][c] = presentation().at(r, c).poly().constant_coeff();
  int rank = 0;
  for (int c = 0; c < s && rank < g; ++c) {
    int pivot = -1;
    for (int r = rank; r < g; ++r)
      if (m[r][c]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    std::uint32_t inv = F.inv(m[rank][c]);
    for (int cc = c; cc < s; ++cc) m[rank][cc] = F.mul(m[rank][cc], inv);
    for (int r = 0; r < g; ++r) {
      if (r == rank || !m[r][c]) continue;
      std::uint32_t f = m[r][c];
      for (int cc = c; cc < s; ++cc)
        m[r][cc] = F.sub(m[r][cc], F.mul(f, m[rank][cc]));
    }
    ++rank;
  }
  return g - rank;
}

ModuleHomomorphism::ModuleHomomorphism(FPModule source, FPModule target,
                                       RMat mat, bool check)
    : source_(std::move(source)), target_(std::move(target)),
      mat_(std::move(mat)) {
  if (mat_.rows() != target_.gen_count() || mat_.cols() != source_.gen_count())
    throw std::runtime_error("homomorphism matrix has wrong shape");
  if (check) {
    RMat img = mat_.mul(source_.reduced_relations());
    for (int c = 0; c < img.cols(); ++c) {
      FreeVec v(target_.ring()->poly_ring(), target_.gen_count());
      for (int r = 0; r < img.rows(); ++r) v[r] = img.at(r, c).poly();
      if (!submodule_member(target_.ring(), v, target_.relation_gb()))
        throw std::runtime_error(
            "matrix does not define a homomorphism: the lifting condition "
            "fails on relation column " + std::to_string(c));
    }
  }
}

ModuleHomomorphism ModuleHomomorphism::identity(const FPModule& M) {
  return ModuleHomomorphism(M, M, RMat::identity(M.ring(), M.gen_count()),
                            false);
}

ModuleHomomorphism ModuleHomomorphism::multiplication(const FPModule& M,
                                                      const RingElement& r) {
  RMat m(M.ring(), M.gen_count(), M.gen_count());
  for (int i = 0; i < M.gen_count(); ++i) m.at(i, i) = r;
  return ModuleHomomorphism(M, M, std::move(m), false);
}

std::vector<RingElement> ModuleHomomorphism::apply(
    const std::vector<RingElement>& v) const {
  std::vector<RingElement> out(target_.gen_count(),
                               RingElement::zero(target_.ring()));
  for (int r = 0; r < mat_.rows(); ++r)
    for (int c = 0; c < mat_.cols(); ++c)
      out[r] = out[r] + mat_.at(r, c) * v[c];
  return out;
}

bool ModuleHomomorphism::equals(const ModuleHomomorphism& o) const {
  RMat d = mat_ - o.mat_;
  for (int c = 0; c < d.cols(); ++c) {
    FreeVec v(target_.ring()->poly_ring(), target_.gen_count());
    for (int r = 0; r < d.rows(); ++r) v[r] = d.at(r, c).poly();
    if (!submodule_member(target_.ring(), v, target_.relation_gb()))
      return false;
  }
  return true;
}

bool ModuleHomomorphism::is_zero() const {
  for (int c = 0; c < mat_.cols(); ++c) {
    FreeVec v(target_.ring()->poly_ring(), target_.gen_count());
    for (int r = 0; r < mat_.rows(); ++r) v[r] = mat_.at(r, c).poly();
    if (!submodule_member(target_.ring(), v, target_.relation_gb()))
      return false;
  }
  return true;
}

ModuleHomomorphism ModuleHomomorphism::compose(
    const ModuleHomomorphism& inner) const {
  return ModuleHomomorphism(inner.source_, target_, mat_.mul(inner.mat_),
                            false);
}

ModuleHomomorphism ModuleHomomorphism::operator+(
    const ModuleHomomorphism& o) const {
  RMat neg = o.mat_;
  for (int r = 0; r < neg.rows(); ++r)
    for (int c = 0; c < neg.cols(); ++c) neg.at(r, c) = neg.at(r, c).negated();
  return ModuleHomomorphism(source_, target_, mat_ - neg, false);
}

ModuleHomomorphism ModuleHomomorphism::operator-(
    const ModuleHomomorphism& o) const {
  return ModuleHomomorphism(source_, target_, mat_ - o.mat_, false);
}

bool ModuleHomomorphism::commutes_with(const ModuleHomomorphism& o) const {
  return compose(o).equals(o.compose(*this));
}

ModuleHomomorphism::KernelData ModuleHomomorphism::kernel() const {
  RMat incl = preimage_gens(mat_, target_.reduced_relations());
  RMat rels = preimage_gens(incl, source_.reduced_relations());
  return {FPModule::from_presentation(source_.ring(), rels), incl};
}

bool ModuleHomomorphism::kernel_is_zero() const {
  RMat incl = preimage_gens(mat_, target_.reduced_relations());
  for (int c = 0; c < incl.cols(); ++c) {
    FreeVec v(source_.ring()->poly_ring(), source_.gen_count());
    for (int r = 0; r < incl.rows(); ++r) v[r] = incl.at(r, c).poly();
    if (!submodule_member(source_.ring(), v, source_.relation_gb()))
      return false;
  }
  return true;
}

FPModule ModuleHomomorphism::cokernel() const {
  const AmbientRingPtr& ring = target_.ring();
  const RMat& rel = target_.reduced_relations();
  RMat pres(ring, target_.gen_count(), mat_.cols() + rel.cols());
  for (int r = 0; r < target_.gen_count(); ++r) {
    for (int c = 0; c < mat_.cols(); ++c) pres.at(r, c) = mat_.at(r, c);
    for (int c = 0; c < rel.cols(); ++c)
      pres.at(r, mat_.cols() + c) = rel.at(r, c);
  }
  return FPModule::from_presentation(ring, std::move(pres));
}

bool ModuleHomomorphism::is_isomorphism() const {
  return kernel_is_zero() && cokernel().is_zero_module();
}

Ideal ModuleHomomorphism::entry_ideal() const {
  std::vector<RingElement> gens;
  for (int r = 0; r < mat_.rows(); ++r)
    for (int c = 0; c < mat_.cols(); ++c)
      if (!mat_.at(r, c).is_zero()) gens.push_back(mat_.at(r, c));
  return Ideal(source_.ring(), std::move(gens));
}

ModuleHomomorphism HomModule::decode(int i) const {
  return ModuleHomomorphism(source_, target_, decode_[i], false);
}

ModuleHomomorphism HomModule::decode_combination(
    const std::vector<RingElement>& c) const {
  RMat acc(target_.ring(), target_.gen_count(), source_.gen_count());
  for (std::size_t i = 0; i < decode_.size(); ++i)
    for (int r = 0; r < acc.rows(); ++r)
      for (int cc = 0; cc < acc.cols(); ++cc)
        acc.at(r, cc) = acc.at(r, cc) + c[i] * decode_[i].at(r, cc);
  return ModuleHomomorphism(source_, target_, std::move(acc), false);
}

std::optional<std::vector<RingElement>> HomModule::encode(
    const RMat& phi) const {
  const AmbientRingPtr& ring = source_.ring();
  int gN = target_.gen_count(), gM = source_.gen_count();
  FreeVec v(ring->poly_ring(), gN * gM);
  for (int c = 0; c < gM; ++c)
    for (int r = 0; r < gN; ++r) v[c * gN + r] = phi.at(r, c).poly();
  std::vector<FreeVec> cols = basis_cols_;
  cols.insert(cols.end(), zero_cols_.begin(), zero_cols_.end());
  auto coeffs = lift_over_ring(ring, v, cols, gN * gM);
  if (!coeffs) return std::nullopt;
  return std::vector<RingElement>(coeffs->begin(),
                                  coeffs->begin() + basis_cols_.size());
}

HomModule hom_module(const FPModule& M, const FPModule& N) {
  check_same_ring(M.ring(), N.ring());
  const AmbientRingPtr& ring = M.ring();
  const PolyRingPtr& poly = ring->poly_ring();
  const RMat& AM = M.reduced_relations();
  const RMat& AN = N.reduced_relations();
  int gM = M.gen_count(), sM = AM.cols();
  int gN = N.gen_count(), sN = AN.cols();

  // vec(Phi A_M) = (A_M^T (x) I_gN) vec(Phi), column-major vec.
  RMat C(ring, gN * sM, gN * gM);
  for (int c = 0; c < gM; ++c)
    for (int r = 0; r < gN; ++r)
      for (int c2 = 0; c2 < sM; ++c2)
        C.at(c2 * gN + r, c * gN + r) = AM.at(c, c2);
  RMat rel(ring, gN * sM, sN * sM);
  for (int b = 0; b < sM; ++b)
    for (int r = 0; r < gN; ++r)
      for (int c = 0; c < sN; ++c)
        rel.at(b * gN + r, b * sN + c) = AN.at(r, c);

  RMat K = preimage_gens(C, rel);

  // Matrices whose columns lie in the image of A_N induce the zero map.
  std::vector<FreeVec> zero_cols;
  for (int b = 0; b < gM; ++b) {
    for (int c = 0; c < sN; ++c) {
      FreeVec v(poly, gN * gM);
      for (int r = 0; r < gN; ++r) v[b * gN + r] = AN.at(r, c).poly();
      if (!v.is_zero()) zero_cols.push_back(std::move(v));
    }
  }
  std::vector<FreeVec> zero_gb = submodule_gb(ring, zero_cols, gN * gM);

  std::vector<FreeVec> basis_cols;
  std::vector<RMat> decode;
  for (int k = 0; k < K.cols(); ++k) {
    FreeVec v(poly, gN * gM);
    for (int r = 0; r < K.rows(); ++r) v[r] = K.at(r, k).poly();
    if (submodule_member(ring, v, zero_gb)) continue;  // zero homomorphism
    RMat phi(ring, gN, gM);
    for (int c = 0; c < gM; ++c)
      for (int r = 0; r < gN; ++r) phi.at(r, c) = K.at(c * gN + r, k);
    basis_cols.push_back(std::move(v));
    decode.push_back(std::move(phi));
  }

  int h = int(basis_cols.size());
  RMat Kmat(ring, gN * gM, h);
  for (int k = 0; k < h; ++k)
    for (int r = 0; r < gN * gM; ++r)
      Kmat.at(r, k) = RingElement(ring, basis_cols[k][r]);
  RMat Lmat(ring, gN * gM, int(zero_cols.size()));
  for (std::size_t c = 0; c < zero_cols.size(); ++c)
    for (int r = 0; r < gN * gM; ++r)
      Lmat.at(r, int(c)) = RingElement(ring, zero_cols[c][r]);
  RMat pres = preimage_gens(Kmat, Lmat);

  HomModule out;
  out.module_ = FPModule::from_presentation(ring, std::move(pres));
  out.source_ = M;
  out.target_ = N;
  out.decode_ = std::move(decode);
  out.basis_cols_ = std::move(basis_cols);
  out.zero_cols_ = std::move(zero_cols);
  return out;
}

bool EndAlgebra::is_commutative() const {
  for (int i = 0; i < hom.gen_count(); ++i)
    for (int j = i + 1; j < hom.gen_count(); ++j)
      if (!hom.decode(i).commutes_with(hom.decode(j))) return false;
  return true;
}

EndAlgebra end_algebra(const FPModule& M) {
  EndAlgebra out;
  out.hom = hom_module(M, M);
  int h = out.hom.gen_count();
  out.table.resize(h);
  for (int i = 0; i < h; ++i) {
    out.table[i].reserve(h);
    for (int j = 0; j < h; ++j) {
      RMat comp = out.hom.decode_matrix(i).mul(out.hom.decode_matrix(j));
      auto enc = out.hom.encode(comp);
      if (!enc)
        throw std::logic_error(
            "composition of endomorphisms failed to encode");
      out.table[i].push_back(std::move(*enc));
    }
  }
  return out;
}

DualModule dual(const FPModule& M) {
  HomModule hom = hom_module(M, FPModule::free_module(M.ring(), 1));
  RMat B(M.ring(), M.gen_count(), hom.gen_count());
  for (int j = 0; j < hom.gen_count(); ++j)
    for (int i = 0; i < M.gen_count(); ++i)
      B.at(i, j) = hom.decode_matrix(j).at(0, i);
  return {std::move(hom), std::move(B)};
}

FPModule tensor(const FPModule& M, const FPModule& N) {
  check_same_ring(M.ring(), N.ring());
  const AmbientRingPtr& ring = M.ring();
  const RMat& AM = M.reduced_relations();
  const RMat& AN = N.reduced_relations();
  int gM = M.gen_count(), sM = AM.cols();
  int gN = N.gen_count(), sN = AN.cols();
  RMat pres(ring, gM * gN, sM * gN + gM * sN);
  for (int c = 0; c < sM; ++c)
    for (int j = 0; j < gN; ++j)
      for (int i = 0; i < gM; ++i)
        pres.at(i * gN + j, c * gN + j) = AM.at(i, c);
  for (int i = 0; i < gM; ++i)
    for (int d = 0; d < sN; ++d)
      for (int j = 0; j < gN; ++j)
        pres.at(i * gN + j, sM * gN + i * sN + d) = AN.at(j, d);
  return FPModule::from_presentation(ring, std::move(pres));
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
  check_same_ring(M.ring(), N.ring());
  const AmbientRingPtr& ring = M.ring();
  int gM = M.gen_count(), sM = M.rel_count();
  int gN = N.gen_count(), sN = N.rel_count();
  RMat pres(ring, gM + gN, sM + sN);
  for (int r = 0; r < gM; ++r)
    for (int c = 0; c < sM; ++c) pres.at(r, c) = M.presentation().at(r, c);
  for (int r = 0; r < gN; ++r)
    for (int c = 0; c < sN; ++c)
      pres.at(gM + r, sM + c) = N.presentation().at(r, c);
  return FPModule::from_presentation(ring, std::move(pres));
}

ModuleHomomorphism evaluation_map(const FPModule& M) {
  const AmbientRingPtr& ring = M.ring();
  DualModule D = dual(M);
  DualModule DD = dual(D.module());
  int h = D.hom.gen_count();
  RMat eps(ring, DD.hom.gen_count(), M.gen_count());
  for (int i = 0; i < M.gen_count(); ++i) {
    // Evaluation at generator i has value row i of B on the dual generators.
    FreeVec row(ring->poly_ring(), h);
    for (int j = 0; j < h; ++j) row[j] = D.values.at(i, j).poly();
    auto coeffs =
        lift_over_ring(ring, row, matrix_columns(DD.values), h);
    if (!coeffs)
      throw std::logic_error("evaluation functional failed to encode");
    for (int r = 0; r < DD.hom.gen_count(); ++r) eps.at(r, i) = (*coeffs)[r];
  }
  return ModuleHomomorphism(M, DD.module(), std::move(eps), false);
}

bool is_torsionless(const FPModule& M) {
  return evaluation_map(M).kernel_is_zero();
}

bool is_reflexive(const FPModule& M) {
  ModuleHomomorphism eps = evaluation_map(M);
  return eps.kernel_is_zero() && eps.cokernel().is_zero_module();
}

Ideal annihilator(const FPModule& M) {
  const AmbientRingPtr& ring = M.ring();
  int g = M.gen_count();
  if (g == 0) return Ideal::unit(ring);
  const PolyRingPtr& poly = ring->poly_ring();
  std::optional<Ideal> acc;
  for (int i = 0; i < g; ++i) {
    // (relations : e_i), one coordinate at a time.
    std::vector<FreeVec> cols;
    cols.push_back(FreeVec::unit(poly, g, i));
    std::vector<FreeVec> rel = matrix_columns(M.reduced_relations());
    cols.insert(cols.end(), rel.begin(), rel.end());
    cols = lift_with_relations(ring, cols, g);
    std::vector<RingElement> gens;
    for (const FreeVec& s : syzygies(cols)) {
      RingElement c(ring, s[0]);
      if (!c.is_zero()) gens.push_back(c);
    }
    Ideal anni(ring, std::move(gens));
    acc = acc ? ideal_intersect(*acc, anni) : anni;
    if (acc->is_zero()) return *acc;
  }
  return *acc;
}

bool is_faithful(const FPModule& M) { return annihilator(M).is_zero(); }

FPModule torsion_submodule(const FPModule& M) {
  if (!M.ring()->is_domain())
    throw std::runtime_error("torsion submodule requires a domain");
  return evaluation_map(M).kernel().module;
}

}  // namespace tracekit
