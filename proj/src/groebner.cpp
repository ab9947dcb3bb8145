#include "tracekit/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tracekit {

FreeVec::FreeVec(PolyRingPtr ring, int rank) : ring_(std::move(ring)) {
  comps_.assign(rank, Polynomial(ring_));
}

FreeVec::FreeVec(PolyRingPtr ring, std::vector<Polynomial> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {}

FreeVec FreeVec::unit(PolyRingPtr ring, int rank, int comp) {
  FreeVec v(ring, rank);
  v.comps_[comp] = Polynomial::constant(ring, 1);
  return v;
}

FreeVec FreeVec::from_poly(const Polynomial& p) {
  return FreeVec(p.ring(), std::vector<Polynomial>{p});
}

bool FreeVec::is_zero() const {
  for (const Polynomial& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

int FreeVec::lead_comp() const {
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return int(i);
  return -1;
}

const Term& FreeVec::lead_term() const { return comps_[lead_comp()].leading(); }

FreeVec FreeVec::operator+(const FreeVec& o) const {
  FreeVec r(ring_, rank());
  for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
  return r;
}

FreeVec FreeVec::operator-(const FreeVec& o) const {
  FreeVec r(ring_, rank());
  for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
  return r;
}

FreeVec FreeVec::scaled(std::uint32_t c) const {
  FreeVec r(ring_, rank());
  for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].scaled(c);
  return r;
}

FreeVec FreeVec::mul_poly(const Polynomial& f) const {
  FreeVec r(ring_, rank());
  for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] * f;
  return r;
}

FreeVec FreeVec::axpy_sub(std::uint32_t c, const Monomial& m,
                          const FreeVec& g) const {
  FreeVec r = *this;
  r.axpy_sub_inplace(c, m, g);
  return r;
}

void FreeVec::axpy_sub_inplace(std::uint32_t c, const Monomial& m,
                               const FreeVec& g) {
  for (int i = 0; i < rank(); ++i) {
    if (g.comps_[i].is_zero()) continue;
    comps_[i] = comps_[i].axpy_sub(c, m, g.comps_[i]);
  }
}

FreeVec FreeVec::monic() const {
  int lc = lead_comp();
  if (lc < 0) return *this;
  return scaled(ring_->field().inv(comps_[lc].leading().coeff));
}

bool FreeVec::operator==(const FreeVec& o) const {
  if (rank() != o.rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (!(comps_[i] == o.comps_[i])) return false;
  return true;
}

std::string FreeVec::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ", ";
    os << comps_[i].str();
  }
  os << ")";
  return os.str();
}

int compare_leads(const FreeVec& a, const FreeVec& b) {
  int ca = a.lead_comp(), cb = b.lead_comp();
  if (ca != cb) return ca < cb ? 1 : -1;  // lower component index is larger
  return a.ring()->compare(a.lead_term().mono, b.lead_term().mono);
}

namespace {

// Full normal form of h against the reducers selected by `use` (or all when
// `use` is null). Reducers only touch components at or after their lead, so
// the working component cursor never moves backwards.
void normal_form_inplace(FreeVec& h, const std::vector<FreeVec>& G,
                         const std::vector<int>* use,
                         std::vector<Polynomial>* quotients) {
  const PolyRingPtr& ring = h.ring();
  const PrimeField& F = ring->field();
  int rank = h.rank();
  std::vector<std::vector<int>> by_comp(rank);
  if (use) {
    for (int k : *use) {
      int c = G[k].lead_comp();
      if (c >= 0) by_comp[c].push_back(k);
    }
  } else {
    for (std::size_t k = 0; k < G.size(); ++k) {
      int c = G[k].lead_comp();
      if (c >= 0) by_comp[c].push_back(int(k));
    }
  }
  std::vector<std::vector<Term>> rem(rank);
  for (int hc = 0; hc < rank; ++hc) {
    while (!h[hc].is_zero()) {
      const Term lt = h[hc].leading();
      int found = -1;
      for (int k : by_comp[hc]) {
        if (mono_divides(G[k].lead_term().mono, lt.mono)) {
          found = k;
          break;
        }
      }
      if (found < 0) {
        rem[hc].push_back(lt);
        h[hc] = h[hc].without_leading();
        continue;
      }
      Monomial q = mono_div(lt.mono, G[found].lead_term().mono);
      std::uint32_t c = F.mul(lt.coeff, F.inv(G[found].lead_term().coeff));
      h.axpy_sub_inplace(c, q, G[found]);
      if (quotients)
        (*quotients)[found] =
            (*quotients)[found] + Polynomial::term(ring, q, c);
    }
    h[hc] = Polynomial::from_terms(ring, std::move(rem[hc]));
  }
  // h now holds the remainder.
}

}  // namespace

VecDivision divide_vec(const FreeVec& f, const std::vector<FreeVec>& G,
                       bool track_quotients) {
  VecDivision out;
  if (track_quotients)
    out.quotients.assign(G.size(), Polynomial::zero(f.ring()));
  FreeVec h = f;
  normal_form_inplace(h, G, nullptr,
                      track_quotients ? &out.quotients : nullptr);
  out.remainder = std::move(h);
  return out;
}

namespace {

struct Pair {
  std::uint32_t deg;  // total degree of the lcm of the leads
  int i, j;
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg > o.deg;  // min-heap by degree
    if (i != o.i) return i > o.i;
    return j > o.j;
  }
};

}  // namespace

GroebnerResult buchberger(const std::vector<FreeVec>& gens) {
  GroebnerResult out;
  if (gens.empty()) return out;
  const PolyRingPtr& ring = gens[0].ring();
  const PrimeField& F = ring->field();

  std::vector<FreeVec> basis;
  std::vector<int> alive;
  std::priority_queue<Pair> queue;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (basis[i].lead_comp() != basis[j].lead_comp()) continue;
      Monomial l =
          mono_lcm(basis[i].lead_term().mono, basis[j].lead_term().mono);
      queue.push({l.deg, i, j});
    }
  };
  auto append = [&](FreeVec v) {
    std::uint32_t lc = v.lead_term().coeff;
    if (lc != 1) v = v.scaled(F.inv(lc));
    basis.push_back(std::move(v));
    alive.push_back(int(basis.size()) - 1);
    push_pairs(int(basis.size()) - 1);
  };

  for (const FreeVec& g : gens) {
    FreeVec v = g;
    normal_form_inplace(v, basis, &alive, nullptr);
    if (!v.is_zero()) append(std::move(v));
  }

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    const FreeVec& u = basis[p.i];
    const FreeVec& w = basis[p.j];
    Monomial l = mono_lcm(u.lead_term().mono, w.lead_term().mono);
    Monomial mu = mono_div(l, u.lead_term().mono);
    Monomial mw = mono_div(l, w.lead_term().mono);
    // Leads are monic, so the S-vector is m_u*u - m_w*w.
    FreeVec sv = u.mul_poly(Polynomial::term(ring, mu, 1));
    sv.axpy_sub_inplace(1, mw, w);
    normal_form_inplace(sv, basis, &alive, nullptr);
    if (!sv.is_zero()) append(std::move(sv));
  }

  // Minimalize: drop entries whose lead is divisible by another kept lead.
  std::vector<int> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = int(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    return compare_leads(basis[a], basis[b]) < 0;
  });
  std::vector<int> kept;
  for (int idx : order_idx) {
    const FreeVec& v = basis[idx];
    bool redundant = false;
    for (int e : kept) {
      if (basis[e].lead_comp() == v.lead_comp() &&
          mono_divides(basis[e].lead_term().mono, v.lead_term().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(idx);
  }

  // Tail-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<int> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      FreeVec v = basis[kept[i]];
      normal_form_inplace(v, basis, &others, nullptr);
      if (!(v == basis[kept[i]])) {
        changed = true;
        std::uint32_t lc = v.lead_term().coeff;
        if (lc != 1) v = v.scaled(F.inv(lc));
        basis[kept[i]] = std::move(v);
      }
    }
  }

  std::sort(kept.begin(), kept.end(), [&](int a, int b) {
    return compare_leads(basis[a], basis[b]) > 0;
  });
  for (int idx : kept) out.basis.push_back(std::move(basis[idx]));
  return out;
}

bool is_groebner_basis(const std::vector<FreeVec>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const FreeVec& u = basis[i];
      const FreeVec& w = basis[j];
      if (u.lead_comp() != w.lead_comp()) continue;
      const PolyRingPtr& ring = u.ring();
      const PrimeField& F = ring->field();
      Monomial l = mono_lcm(u.lead_term().mono, w.lead_term().mono);
      Monomial mu = mono_div(l, u.lead_term().mono);
      Monomial mw = mono_div(l, w.lead_term().mono);
      FreeVec sv = u.mul_poly(Polynomial::term(ring, mu, F.inv(u.lead_term().coeff)))
                       .axpy_sub(F.inv(w.lead_term().coeff), mw, w);
      if (!divide_vec(sv, basis, false).remainder.is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Groebner basis of { (col_k, e_k) } in R^{rank+s}: position-over-term makes
// the column block dominate, so basis elements supported purely on the
// shadow block are exactly a reduced basis of the syzygy module.
GroebnerResult augmented_basis(const std::vector<FreeVec>& cols, int rank,
                               int s) {
  const PolyRingPtr& ring = cols[0].ring();
  std::vector<FreeVec> aug;
  aug.reserve(cols.size());
  for (int k = 0; k < s; ++k) {
    FreeVec v(ring, rank + s);
    for (int i = 0; i < rank; ++i) v[i] = cols[k][i];
    v[rank + k] = Polynomial::constant(ring, 1);
    aug.push_back(std::move(v));
  }
  return buchberger(aug);
}

}  // namespace

std::vector<FreeVec> syzygies(const std::vector<FreeVec>& cols) {
  std::vector<FreeVec> out;
  if (cols.empty()) return out;
  const PolyRingPtr& ring = cols[0].ring();
  int rank = cols[0].rank();
  int s = int(cols.size());
  GroebnerResult gb = augmented_basis(cols, rank, s);
  for (const FreeVec& v : gb.basis) {
    if (v.lead_comp() < rank) continue;  // non-trivial column part
    FreeVec syz(ring, s);
    for (int k = 0; k < s; ++k) syz[k] = v[rank + k];
    out.push_back(std::move(syz));
  }
  return out;
}

std::optional<std::vector<Polynomial>> lift_membership(
    const FreeVec& target, const std::vector<FreeVec>& cols) {
  const PolyRingPtr& ring = target.ring();
  int rank = target.rank();
  int s = int(cols.size());
  std::vector<Polynomial> coeffs(s, Polynomial::zero(ring));
  if (target.is_zero()) return coeffs;
  if (cols.empty()) return std::nullopt;
  GroebnerResult gb = augmented_basis(cols, rank, s);
  FreeVec t(ring, rank + s);
  for (int i = 0; i < rank; ++i) t[i] = target[i];
  FreeVec nf = divide_vec(t, gb.basis, false).remainder;
  for (int i = 0; i < rank; ++i)
    if (!nf[i].is_zero()) return std::nullopt;
  // (target, 0) reduced to (0, c) means target = sum (-c_k) cols[k].
  for (int k = 0; k < s; ++k) coeffs[k] = nf[rank + k].negated();
  return coeffs;
}

std::vector<Polynomial> eliminate_variables(const std::vector<Polynomial>& gens,
                                            const std::vector<int>& drop,
                                            const PolyRingPtr& target) {
  if (gens.empty()) return {};
  const PolyRingPtr& src = gens[0].ring();
  int n = src->var_count();
  std::vector<bool> dropped(n, false);
  for (int d : drop) dropped[d] = true;

  // Working ring: dropped variables first, then kept, under a block order.
  std::vector<std::string> work_vars;
  std::vector<int> src_to_work(n, -1);
  for (int i = 0; i < n; ++i)
    if (dropped[i]) {
      src_to_work[i] = int(work_vars.size());
      work_vars.push_back(src->vars()[i]);
    }
  int elim_count = int(work_vars.size());
  std::vector<int> keep_src;
  for (int i = 0; i < n; ++i)
    if (!dropped[i]) {
      src_to_work[i] = int(work_vars.size());
      work_vars.push_back(src->vars()[i]);
      keep_src.push_back(i);
    }
  PolyRingPtr work = PolyRing::make(src->field().modulus(), work_vars,
                                    {OrderKind::Elim, elim_count});

  auto remap = [](const Polynomial& f, const PolyRingPtr& to,
                  const std::vector<int>& var_map) {
    std::vector<Term> ts;
    for (const Term& t : f.terms()) {
      Monomial m;
      for (int i = 0; i < Monomial::kMaxVars; ++i) {
        if (t.mono.e[i]) {
          m.e[var_map[i]] = t.mono.e[i];
          m.deg += t.mono.e[i];
        }
      }
      ts.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(to, std::move(ts));
  };

  std::vector<FreeVec> work_gens;
  for (const Polynomial& g : gens)
    work_gens.push_back(FreeVec::from_poly(remap(g, work, src_to_work)));
  GroebnerResult gb = buchberger(work_gens);

  std::vector<int> work_to_target(work->var_count(), -1);
  for (std::size_t k = 0; k < keep_src.size(); ++k) {
    int idx = target->find_var(src->vars()[keep_src[k]]);
    if (idx < 0)
      throw std::runtime_error("target ring is missing a kept variable");
    work_to_target[elim_count + int(k)] = idx;
  }

  std::vector<Polynomial> out;
  for (const FreeVec& v : gb.basis) {
    const Polynomial& f = v[0];
    bool pure = true;
    for (const Term& t : f.terms()) {
      for (int i = 0; i < elim_count && pure; ++i)
        if (t.mono.e[i]) pure = false;
    }
    if (pure) out.push_back(remap(f, target, work_to_target));
  }
  return out;
}

}  // namespace tracekit
