#include "tracekit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tracekit {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    r.e[i] = std::uint16_t(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    r.e[i] = std::uint16_t(a.e[i] - b.e[i]);
  }
  r.deg = a.deg - b.deg;
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::uint32_t deg = 0;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    deg += r.e[i];
  }
  r.deg = deg;
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

namespace {

int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi,
                std::uint32_t dega, std::uint32_t degb) {
  if (dega != degb) return dega > degb ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

std::uint32_t block_degree(const Monomial& a, int lo, int hi) {
  std::uint32_t d = 0;
  for (int i = lo; i < hi; ++i) d += a.e[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b,
                           int nvars) const {
  switch (kind) {
    case OrderKind::Grevlex:
      return cmp_grevlex(a, b, 0, nvars, a.deg, b.deg);
    case OrderKind::Lex:
      for (int i = 0; i < nvars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Elim: {
      int c = cmp_grevlex(a, b, 0, elim, block_degree(a, 0, elim),
                          block_degree(b, 0, elim));
      if (c) return c;
      return cmp_grevlex(a, b, elim, nvars, block_degree(a, elim, nvars),
                         block_degree(b, elim, nvars));
    }
  }
  return 0;
}

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> vars,
                   MonomialOrder order)
    : field_(p), vars_(std::move(vars)), order_(order) {
  if (int(vars_.size()) > Monomial::kMaxVars) {
    throw std::runtime_error("too many variables (max " +
                             std::to_string(Monomial::kMaxVars) + ")");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j])
        throw std::runtime_error("duplicate variable name '" + vars_[i] + "'");
    }
  }
}

PolyRingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> vars,
                           MonomialOrder order) {
  return std::make_shared<const PolyRing>(p, std::move(vars), order);
}

int PolyRing::find_var(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return int(i);
  return -1;
}

bool PolyRing::compatible_with(const PolyRing& o) const {
  return field_ == o.field_ && vars_ == o.vars_ &&
         order_.kind == o.order_.kind && order_.elim == o.order_.elim;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ring() || !b.ring() || !a.ring()->compatible_with(*b.ring()))
    throw std::runtime_error("polynomial operands live in different rings");
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::uint32_t c) {
  Polynomial r(std::move(ring));
  c %= r.ring_->field().modulus();
  if (c) r.terms_.push_back({Monomial{}, c});
  return r;
}

Polynomial Polynomial::variable(PolyRingPtr ring, int index) {
  if (index < 0 || index >= ring->var_count())
    throw std::runtime_error("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  m.deg = 1;
  return term(std::move(ring), m, 1);
}

Polynomial Polynomial::term(PolyRingPtr ring, const Monomial& m,
                            std::uint32_t c) {
  Polynomial r(std::move(ring));
  c %= r.ring_->field().modulus();
  if (c) r.terms_.push_back({m, c});
  return r;
}

std::uint32_t Polynomial::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.deg);
  return d;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return R.compare(a.mono, b.mono) > 0;
  });
  Polynomial r(std::move(ring));
  for (const Term& t : terms) {
    std::uint32_t c = t.coeff % R.field().modulus();
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      std::uint32_t s = R.field().add(r.terms_.back().coeff, c);
      if (s)
        r.terms_.back().coeff = s;
      else
        r.terms_.pop_back();
    } else if (c) {
      r.terms_.push_back({t.mono, c});
    }
  }
  return r;
}

namespace {

// Merge two descending term lists with b scaled by (c, m); sign -1 subtracts.
std::vector<Term> merge_scaled(const PolyRing& R, const std::vector<Term>& a,
                               const std::vector<Term>& b, std::uint32_t c,
                               const Monomial* m, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const PrimeField& F = R.field();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Monomial bm;
    std::uint32_t bc = 0;
    if (j < b.size()) {
      bm = m ? mono_mul(b[j].mono, *m) : b[j].mono;
      bc = F.mul(b[j].coeff, c);
      if (subtract) bc = F.neg(bc);
    }
    if (i < a.size() && (j >= b.size() || R.compare(a[i].mono, bm) > 0)) {
      out.push_back(a[i++]);
    } else if (j < b.size() && (i >= a.size() || R.compare(a[i].mono, bm) < 0)) {
      if (bc) out.push_back({bm, bc});
      ++j;
    } else {
      std::uint32_t s = F.add(a[i].coeff, bc);
      if (s) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r(ring_ ? ring_ : o.ring_);
  r.terms_ = merge_scaled(*r.ring_, terms_, o.terms_, 1, nullptr, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r(ring_ ? ring_ : o.ring_);
  r.terms_ = merge_scaled(*r.ring_, terms_, o.terms_, 1, nullptr, true);
  return r;
}

Polynomial Polynomial::axpy_sub(std::uint32_t c, const Monomial& m,
                                const Polynomial& g) const {
  check_same_ring(*this, g);
  Polynomial r(ring_ ? ring_ : g.ring_);
  r.terms_ = merge_scaled(*r.ring_, terms_, g.terms_, c, &m, true);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  PolyRingPtr rg = ring_ ? ring_ : o.ring_;
  if (is_zero() || o.is_zero()) return Polynomial(rg);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  const PrimeField& F = rg->field();
  for (const Term& s : terms_) {
    for (const Term& t : o.terms_) {
      acc.push_back({mono_mul(s.mono, t.mono), F.mul(s.coeff, t.coeff)});
    }
  }
  return from_terms(rg, std::move(acc));
}

Polynomial Polynomial::negated() const {
  Polynomial r(*this);
  const PrimeField& F = ring_->field();
  for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.modulus();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::without_leading() const {
  Polynomial r(ring_);
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading().coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff ||
        terms_[i].mono != o.terms_[i].mono)
      return false;
  }
  return true;
}

PolyDivision divide_with_remainder(const Polynomial& f,
                                   const std::vector<Polynomial>& G) {
  if (G.empty()) throw std::runtime_error("division by an empty divisor list");
  for (const Polynomial& g : G) check_same_ring(f, g);
  const PolyRing& R = *f.ring();
  const PrimeField& F = R.field();

  PolyDivision out;
  out.quotients.assign(G.size(), Polynomial::zero(f.ring()));
  std::vector<Term> rem;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G[k].is_zero()) continue;
      const Term& gl = G[k].leading();
      if (mono_divides(gl.mono, lt.mono)) {
        Monomial q = mono_div(lt.mono, gl.mono);
        std::uint32_t c = F.mul(lt.coeff, F.inv(gl.coeff));
        out.quotients[k] =
            out.quotients[k] + Polynomial::term(f.ring(), q, c);
        h = h.axpy_sub(c, q, G[k]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      h = h - Polynomial::term(f.ring(), lt.mono, lt.coeff);
    }
  }
  out.remainder = Polynomial::from_terms(f.ring(), std::move(rem));
  return out;
}

std::string monomial_str(const PolyRing& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ring.var_count(); ++i) {
    if (!m.e[i]) continue;
    if (!first) os << "*";
    os << ring.vars()[i];
    if (m.e[i] > 1) os << "^" << m.e[i];
    first = false;
  }
  return os.str();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  const PolyRing& R = *ring_;
  std::uint32_t p = R.field().modulus();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    // Balanced representative: coefficients above p/2 print as negatives.
    bool neg = t.coeff > p / 2;
    std::uint32_t mag = neg ? p - t.coeff : t.coeff;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      if (!t.mono.is_one()) os << "*";
    }
    if (!t.mono.is_one()) os << monomial_str(R, t.mono);
    first = false;
  }
  return os.str();
}

namespace {

struct PolyParser {
  const PolyRingPtr& ring;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error(msg + " at offset " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = eat('-') ? term().negated() : term();
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      long long e = integer();
      if (e < 0) fail("negative exponent");
      Polynomial acc = Polynomial::constant(ring, 1);
      for (long long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring, ring->field().reduce(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      int idx = ring->find_var(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring, idx);
    }
    fail("unexpected character");
  }

  long long integer() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1LL << 60)) fail("integer literal too large");
      ++pos;
    }
    return v;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, const std::string& text) {
  PolyParser p{ring, text};
  Polynomial r = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace tracekit
