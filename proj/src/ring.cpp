#include "tracekit/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tracekit {

namespace {

Polynomial map_vars(const Polynomial& f, const PolyRingPtr& to,
                    const std::vector<int>& var_map) {
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
      if (t.mono.e[i]) {
        if (var_map[i] < 0)
          throw std::logic_error("variable map drops a used variable");
        m.e[var_map[i]] = t.mono.e[i];
        m.deg += t.mono.e[i];
      }
    }
    ts.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(to, std::move(ts));
}

std::string fresh_name(const PolyRing& ring, const std::string& base) {
  std::string name = base;
  while (ring.find_var(name) >= 0) name += "_";
  return name;
}

}  // namespace

AmbientRing::AmbientRing(PolyRingPtr poly, std::vector<Polynomial> relations,
                         bool domain)
    : poly_(std::move(poly)), domain_(domain) {
  std::vector<FreeVec> gens;
  for (const Polynomial& f : relations)
    if (!f.is_zero()) gens.push_back(FreeVec::from_poly(f));
  GroebnerResult gb = buchberger(gens);
  for (const FreeVec& v : gb.basis) j_gb_.push_back(v[0]);
  for (const Polynomial& g : j_gb_) {
    if (g.is_constant())
      throw std::runtime_error("defining ideal is the unit ideal");
    if (g.constant_coeff() != 0)
      throw std::runtime_error(
          "defining ideal is not contained in the maximal ideal (x_1..x_n)");
  }
  // Dimension of the leading-term complex: the largest variable subset
  // supporting no leading monomial.
  int n = poly_->var_count();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Polynomial& g : j_gb_) {
      const Monomial& lm = g.leading().mono;
      bool supported = true;
      for (int i = 0; i < n; ++i) {
        if (lm.e[i] && !(mask & (1u << i))) {
          supported = false;
          break;
        }
      }
      if (supported) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  dim_ = best;
}

AmbientRingPtr AmbientRing::make(std::uint32_t p,
                                 std::vector<std::string> vars,
                                 const std::vector<std::string>& relations,
                                 bool domain) {
  PolyRingPtr poly = PolyRing::make(p, std::move(vars));
  std::vector<Polynomial> rels;
  for (const std::string& s : relations)
    rels.push_back(parse_polynomial(poly, s));
  return make(poly, std::move(rels), domain);
}

AmbientRingPtr AmbientRing::make(PolyRingPtr poly,
                                 std::vector<Polynomial> relations,
                                 bool domain) {
  return std::make_shared<const AmbientRing>(std::move(poly),
                                             std::move(relations), domain);
}

Polynomial AmbientRing::normal_form(const Polynomial& f) const {
  if (j_gb_.empty() || f.is_zero()) return f;
  return divide_with_remainder(f, j_gb_).remainder;
}

std::string AmbientRing::name() const {
  std::ostringstream os;
  os << "F" << poly_->field().modulus() << "[";
  for (int i = 0; i < poly_->var_count(); ++i) {
    if (i) os << ",";
    os << poly_->vars()[i];
  }
  os << "]";
  if (!j_gb_.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < j_gb_.size(); ++i) {
      if (i) os << ", ";
      os << j_gb_[i].str();
    }
    os << ")";
  }
  return os.str();
}

void check_same_ring(const AmbientRingPtr& a, const AmbientRingPtr& b) {
  if (a == b) return;
  throw std::runtime_error("operands live in different rings");
}

RingElement::RingElement(AmbientRingPtr ring, const Polynomial& f)
    : ring_(std::move(ring)), nf_(ring_->normal_form(f)) {}

RingElement RingElement::zero(const AmbientRingPtr& ring) {
  return RingElement(ring, Polynomial::zero(ring->poly_ring()));
}
RingElement RingElement::one(const AmbientRingPtr& ring) {
  return scalar(ring, 1);
}
RingElement RingElement::scalar(const AmbientRingPtr& ring, std::uint32_t c) {
  return RingElement(ring, Polynomial::constant(ring->poly_ring(), c));
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  RingElement r;
  r.ring_ = ring_;
  r.nf_ = nf_ + o.nf_;  // normal forms are closed under addition
  return r;
}
RingElement RingElement::operator-(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  RingElement r;
  r.ring_ = ring_;
  r.nf_ = nf_ - o.nf_;
  return r;
}
RingElement RingElement::operator*(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, nf_ * o.nf_);
}
RingElement RingElement::negated() const {
  RingElement r;
  r.ring_ = ring_;
  r.nf_ = nf_.negated();
  return r;
}

RingElement parse_element(const AmbientRingPtr& ring, const std::string& text) {
  return RingElement(ring, parse_polynomial(ring->poly_ring(), text));
}

RMat::RMat(AmbientRingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(std::size_t(rows) * cols, RingElement::zero(ring_));
}

RMat RMat::identity(const AmbientRingPtr& ring, int n) {
  RMat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingElement::one(ring);
  return m;
}

RMat RMat::transpose() const {
  RMat t(ring_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RMat RMat::mul(const RMat& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix dimension mismatch");
  RMat out(ring_, rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < o.cols_; ++c) {
      RingElement acc = RingElement::zero(ring_);
      for (int k = 0; k < cols_; ++k) acc = acc + at(r, k) * o.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

RMat RMat::operator-(const RMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::logic_error("matrix dimension mismatch");
  RMat out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

std::vector<RingElement> RMat::col(int c) const {
  std::vector<RingElement> v;
  v.reserve(rows_);
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

bool RMat::is_zero() const {
  for (const RingElement& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

std::string RMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

RMat block_diag(const RMat& A, int copies) {
  RMat out(A.ring(), A.rows() * copies, A.cols() * copies);
  for (int k = 0; k < copies; ++k)
    for (int r = 0; r < A.rows(); ++r)
      for (int c = 0; c < A.cols(); ++c)
        out.at(k * A.rows() + r, k * A.cols() + c) = A.at(r, c);
  return out;
}

RMat hcat(const RMat& A, const RMat& B) {
  if (A.rows() != B.rows()) throw std::logic_error("hcat row mismatch");
  RMat out(A.ring(), A.rows(), A.cols() + B.cols());
  for (int r = 0; r < A.rows(); ++r) {
    for (int c = 0; c < A.cols(); ++c) out.at(r, c) = A.at(r, c);
    for (int c = 0; c < B.cols(); ++c) out.at(r, A.cols() + c) = B.at(r, c);
  }
  return out;
}

std::vector<FreeVec> matrix_columns(const RMat& A) {
  std::vector<FreeVec> cols;
  const PolyRingPtr& poly = A.ring()->poly_ring();
  for (int c = 0; c < A.cols(); ++c) {
    FreeVec v(poly, A.rows());
    for (int r = 0; r < A.rows(); ++r) v[r] = A.at(r, c).poly();
    cols.push_back(std::move(v));
  }
  return cols;
}

std::vector<FreeVec> lift_with_relations(const AmbientRingPtr& ring,
                                         const std::vector<FreeVec>& cols,
                                         int rank) {
  std::vector<FreeVec> out = cols;
  const PolyRingPtr& poly = ring->poly_ring();
  for (const Polynomial& g : ring->defining_gb()) {
    for (int i = 0; i < rank; ++i) {
      FreeVec v(poly, rank);
      v[i] = g;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<FreeVec> submodule_gb(const AmbientRingPtr& ring,
                                  const std::vector<FreeVec>& cols, int rank) {
  return buchberger(lift_with_relations(ring, cols, rank)).basis;
}

bool submodule_member(const AmbientRingPtr& ring, const FreeVec& v,
                      const std::vector<FreeVec>& gb) {
  (void)ring;
  if (v.is_zero()) return true;
  return divide_vec(v, gb, false).remainder.is_zero();
}

std::vector<FreeVec> canonical_submodule_gens(const AmbientRingPtr& ring,
                                              const std::vector<FreeVec>& gb) {
  std::vector<FreeVec> out;
  for (const FreeVec& v : gb) {
    FreeVec nf(v.ring(), v.rank());
    bool nonzero = false;
    for (int i = 0; i < v.rank(); ++i) {
      nf[i] = ring->normal_form(v[i]);
      nonzero = nonzero || !nf[i].is_zero();
    }
    if (!nonzero) continue;
    nf = nf.monic();
    bool dup = false;
    for (const FreeVec& w : out)
      if (w == nf) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(nf));
  }
  return out;
}

namespace {

RMat vectors_to_matrix(const AmbientRingPtr& ring,
                       const std::vector<FreeVec>& cols, int rank) {
  RMat out(ring, rank, int(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rank; ++r)
      out.at(r, int(c)) = RingElement(ring, cols[c][r]);
  return out;
}

// Shared core of kernel/preimage: project the syzygies of [A | rel | J-cols]
// onto the A block. The syzygy basis is reduced and eliminates leading
// blocks, so the projections of the elements leading inside the A block are
// already a reduced basis of the projection.
RMat solve_preimage(const RMat& A, const RMat* rel) {
  const AmbientRingPtr& ring = A.ring();
  int s = A.cols();
  std::vector<FreeVec> cols = matrix_columns(A);
  if (rel) {
    std::vector<FreeVec> extra = matrix_columns(*rel);
    cols.insert(cols.end(), extra.begin(), extra.end());
  }
  cols = lift_with_relations(ring, cols, A.rows());
  std::vector<FreeVec> syz = syzygies(cols);
  const PolyRingPtr& poly = ring->poly_ring();
  std::vector<FreeVec> proj;
  for (const FreeVec& v : syz) {
    int lead = v.lead_comp();
    if (lead >= s) continue;  // supported outside the A block
    FreeVec p(poly, s);
    for (int i = 0; i < s; ++i) p[i] = v[i];
    proj.push_back(std::move(p));
  }
  return vectors_to_matrix(ring, canonical_submodule_gens(ring, proj), s);
}

}  // namespace

RMat kernel_over_quotient(const RMat& A) { return solve_preimage(A, nullptr); }

RMat preimage_gens(const RMat& A, const RMat& rel) {
  if (A.rows() != rel.rows()) throw std::logic_error("rank mismatch");
  return solve_preimage(A, &rel);
}

std::optional<std::vector<RingElement>> lift_over_ring(
    const AmbientRingPtr& ring, const FreeVec& target,
    const std::vector<FreeVec>& cols, int rank) {
  std::vector<FreeVec> all = lift_with_relations(ring, cols, rank);
  auto coeffs = lift_membership(target, all);
  if (!coeffs) return std::nullopt;
  std::vector<RingElement> out;
  for (std::size_t k = 0; k < cols.size(); ++k)
    out.push_back(RingElement(ring, (*coeffs)[k]));
  return out;
}

// --- ideals ---

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> gb;
  std::vector<RingElement> canon;
};

Ideal::Ideal(AmbientRingPtr ring, std::vector<RingElement> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const RingElement& g : gens_) check_same_ring(ring_, g.ring());
}

Ideal Ideal::zero(const AmbientRingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::unit(const AmbientRingPtr& ring) {
  return Ideal(ring, {RingElement::one(ring)});
}

Ideal Ideal::span(const AmbientRingPtr& ring,
                  const std::vector<std::string>& gens) {
  std::vector<RingElement> es;
  for (const std::string& s : gens) es.push_back(parse_element(ring, s));
  return Ideal(ring, std::move(es));
}

void Ideal::ensure_cache() const {
  std::call_once(cache_->once, [this] {
    std::vector<FreeVec> cols;
    for (const RingElement& g : gens_)
      if (!g.is_zero()) cols.push_back(FreeVec::from_poly(g.poly()));
    for (const Polynomial& g : ring_->defining_gb())
      cols.push_back(FreeVec::from_poly(g));
    GroebnerResult gb = buchberger(cols);
    for (const FreeVec& v : gb.basis) cache_->gb.push_back(v[0]);
    for (const Polynomial& g : cache_->gb) {
      Polynomial nf = ring_->normal_form(g);
      if (nf.is_zero()) continue;
      nf = nf.monic();
      bool dup = false;
      for (const RingElement& e : cache_->canon)
        if (e.poly() == nf) {
          dup = true;
          break;
        }
      if (!dup) cache_->canon.push_back(RingElement(ring_, nf));
    }
  });
}

const std::vector<Polynomial>& Ideal::poly_gb() const {
  ensure_cache();
  return cache_->gb;
}

const std::vector<RingElement>& Ideal::canonical_gens() const {
  ensure_cache();
  return cache_->canon;
}

bool Ideal::contains(const RingElement& r) const {
  if (r.is_zero()) return true;
  const std::vector<Polynomial>& gb = poly_gb();
  if (gb.empty()) return false;
  return divide_with_remainder(r.poly(), gb).remainder.is_zero();
}

RingElement Ideal::reduce(const RingElement& r) const {
  const std::vector<Polynomial>& gb = poly_gb();
  if (gb.empty() || r.is_zero()) return r;
  return RingElement(ring_, divide_with_remainder(r.poly(), gb).remainder);
}

bool Ideal::contains_one() const { return contains(RingElement::one(ring_)); }

bool Ideal::is_zero() const { return canonical_gens().empty(); }

bool Ideal::equals(const Ideal& o) const {
  check_same_ring(ring_, o.ring_);
  const auto& a = poly_gb();
  const auto& b = o.poly_gb();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool Ideal::contains_ideal(const Ideal& o) const {
  for (const RingElement& g : o.gens())
    if (!contains(g)) return false;
  return true;
}

std::string Ideal::str() const {
  const std::vector<RingElement>& canon = canonical_gens();
  if (canon.empty()) return "(0)";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < canon.size(); ++i) {
    if (i) os << ", ";
    os << canon[i].str();
  }
  os << ")";
  return os.str();
}

std::uint64_t Ideal::content_hash() const {
  std::string s = str();
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= std::uint8_t(c);
    h *= 1099511628211ull;
  }
  return h;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<RingElement> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<RingElement> gens;
  for (const RingElement& x : a.gens())
    for (const RingElement& y : b.gens()) gens.push_back(x * y);
  return Ideal(a.ring(), std::move(gens));
}

Ideal scale_ideal(const RingElement& c, const Ideal& a) {
  std::vector<RingElement> gens;
  for (const RingElement& x : a.gens()) gens.push_back(c * x);
  return Ideal(a.ring(), std::move(gens));
}

namespace {
// Rebuild an ideal on its canonical generators, for deterministic generator
// lists independent of syzygy internals.
Ideal canonicalized(const Ideal& I) {
  return Ideal(I.ring(), I.canonical_gens());
}
}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a.ring(), b.ring());
  const AmbientRingPtr& ring = a.ring();
  const PolyRingPtr& poly = ring->poly_ring();
  std::vector<FreeVec> cols;
  FreeVec v0(poly, 2);
  v0[0] = Polynomial::constant(poly, 1);
  v0[1] = Polynomial::constant(poly, 1);
  cols.push_back(std::move(v0));
  for (const Polynomial& g : a.poly_gb()) {
    FreeVec v(poly, 2);
    v[0] = g;
    cols.push_back(std::move(v));
  }
  for (const Polynomial& g : b.poly_gb()) {
    FreeVec v(poly, 2);
    v[1] = g;
    cols.push_back(std::move(v));
  }
  std::vector<RingElement> gens;
  for (const FreeVec& s : syzygies(cols)) {
    RingElement c(ring, s[0]);
    if (!c.is_zero()) gens.push_back(c);
  }
  return canonicalized(Ideal(ring, std::move(gens)));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J2) {
  check_same_ring(I.ring(), J2.ring());
  const AmbientRingPtr& ring = I.ring();
  const PolyRingPtr& poly = ring->poly_ring();
  std::vector<Polynomial> fs;
  for (const RingElement& f : J2.gens())
    if (!f.is_zero()) fs.push_back(f.poly());
  if (fs.empty()) return Ideal::unit(ring);
  int m = int(fs.size());
  std::vector<FreeVec> cols;
  FreeVec v0(poly, m);
  for (int j = 0; j < m; ++j) v0[j] = fs[j];
  cols.push_back(std::move(v0));
  for (const Polynomial& g : I.poly_gb()) {
    for (int j = 0; j < m; ++j) {
      FreeVec v(poly, m);
      v[j] = g;
      cols.push_back(std::move(v));
    }
  }
  std::vector<RingElement> gens;
  for (const FreeVec& s : syzygies(cols)) {
    RingElement c(ring, s[0]);
    if (!c.is_zero()) gens.push_back(c);
  }
  return canonicalized(Ideal(ring, std::move(gens)));
}

Ideal saturate(const Ideal& I, const RingElement& f) {
  if (f.is_zero()) throw std::runtime_error("saturation by zero");
  const AmbientRingPtr& ring = I.ring();
  const PolyRingPtr& poly = ring->poly_ring();
  int n = poly->var_count();
  std::vector<std::string> vars = poly->vars();
  vars.push_back(fresh_name(*poly, "t"));
  PolyRingPtr ext = PolyRing::make(poly->field().modulus(), vars);
  std::vector<int> up(Monomial::kMaxVars);
  for (int i = 0; i < Monomial::kMaxVars; ++i) up[i] = i;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.poly_gb()) gens.push_back(map_vars(g, ext, up));
  Polynomial t = Polynomial::variable(ext, n);
  gens.push_back(Polynomial::constant(ext, 1) - map_vars(f.poly(), ext, up) * t);
  std::vector<Polynomial> kept = eliminate_variables(gens, {n}, poly);
  std::vector<RingElement> out;
  for (const Polynomial& g : kept) {
    RingElement e(ring, g);
    if (!e.is_zero()) out.push_back(e);
  }
  return canonicalized(Ideal(ring, std::move(out)));
}

Ideal maximal_ideal(const AmbientRingPtr& ring) {
  std::vector<RingElement> gens;
  for (int i = 0; i < ring->var_count(); ++i)
    gens.push_back(
        RingElement(ring, Polynomial::variable(ring->poly_ring(), i)));
  return Ideal(ring, std::move(gens));
}

bool is_nonzerodivisor(const RingElement& g) {
  if (g.is_zero()) return false;
  Ideal ann = ideal_quotient(Ideal::zero(g.ring()), Ideal(g.ring(), {g}));
  return ann.is_zero();
}

NzdWitness find_nonzerodivisor(const Ideal& I, std::uint64_t seed,
                               int random_tries) {
  const AmbientRingPtr& ring = I.ring();
  // Grade-zero pre-check: (0 : I) != 0 exactly when every member of I is a
  // zerodivisor, so failure below is a provable condition.
  Ideal ann = ideal_quotient(Ideal::zero(ring), I);
  if (!ann.is_zero())
    throw std::runtime_error("ideal consists of zerodivisors");

  const std::vector<RingElement>& gens = I.gens();
  int k = int(gens.size());
  auto combo_of = [&](const std::vector<std::uint32_t>& cs) {
    RingElement g = RingElement::zero(ring);
    std::vector<RingElement> combo;
    for (int i = 0; i < k; ++i) {
      RingElement c = RingElement::scalar(ring, cs[i]);
      combo.push_back(c);
      g = g + c * gens[i];
    }
    return NzdWitness{g, std::move(combo)};
  };

  for (int i = 0; i < k; ++i) {
    if (is_nonzerodivisor(gens[i])) {
      std::vector<std::uint32_t> cs(k, 0);
      cs[i] = 1;
      return combo_of(cs);
    }
  }

  std::uint32_t p = ring->poly_ring()->field().modulus();
  std::mt19937_64 rng(seed ^ I.content_hash() ^ 0x74726163656b6974ull);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (int t = 0; t < random_tries; ++t) {
    std::vector<std::uint32_t> cs(k);
    for (int i = 0; i < k; ++i) cs[i] = dist(rng);
    NzdWitness w = combo_of(cs);
    if (is_nonzerodivisor(w.element)) return w;
  }

  // Deterministic fallback: small-coefficient tuples in graded order.
  long long tries = 0;
  for (std::uint32_t bound = 2; bound <= 8 && tries < 4096; ++bound) {
    std::vector<std::uint32_t> cs(k, 0);
    while (true) {
      ++tries;
      NzdWitness w = combo_of(cs);
      if (!w.element.is_zero() && is_nonzerodivisor(w.element)) return w;
      int pos = 0;
      while (pos < k) {
        if (++cs[pos] < bound) break;
        cs[pos] = 0;
        ++pos;
      }
      if (pos == k || tries >= 4096) break;
    }
  }
  throw std::runtime_error(
      "nonzerodivisor search exhausted its coefficient budget");
}

AmbientRingPtr adjoin_variable(const AmbientRingPtr& ring,
                               const std::string& name) {
  const PolyRingPtr& poly = ring->poly_ring();
  std::vector<std::string> vars = poly->vars();
  vars.push_back(fresh_name(*poly, name));
  PolyRingPtr ext = PolyRing::make(poly->field().modulus(), vars);
  std::vector<int> up(Monomial::kMaxVars);
  for (int i = 0; i < Monomial::kMaxVars; ++i) up[i] = i;
  std::vector<Polynomial> rels;
  for (const Polynomial& g : ring->defining_gb())
    rels.push_back(map_vars(g, ext, up));
  return AmbientRing::make(ext, std::move(rels), ring->is_domain());
}

RingElement extend_element(const RingElement& r,
                           const AmbientRingPtr& bigger) {
  std::vector<int> up(Monomial::kMaxVars);
  for (int i = 0; i < Monomial::kMaxVars; ++i) up[i] = i;
  return RingElement(bigger, map_vars(r.poly(), bigger->poly_ring(), up));
}

Ideal extend_ideal(const Ideal& I, const AmbientRingPtr& bigger) {
  std::vector<RingElement> gens;
  for (const RingElement& g : I.gens())
    gens.push_back(extend_element(g, bigger));
  return Ideal(bigger, std::move(gens));
}

RMat extend_matrix(const RMat& A, const AmbientRingPtr& bigger) {
  RMat out(bigger, A.rows(), A.cols());
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      out.at(r, c) = extend_element(A.at(r, c), bigger);
  return out;
}

}  // namespace tracekit
