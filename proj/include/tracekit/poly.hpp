#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tracekit/field.hpp"

namespace tracekit {

// Exponent vector with cached total degree. The variable count lives in the
// ring; a monomial only carries exponents for the first `PolyRing::var_count`
// slots and zeros elsewhere.
struct Monomial {
  static constexpr int kMaxVars = 12;

  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind {
  Grevlex,  // degree, then reverse-lex tie break
  Lex,
  Elim,  // block order: grevlex on the first `elim` variables, then grevlex
};

struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int elim = 0;  // size of the leading block for OrderKind::Elim

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b, int nvars) const;
};

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// The free polynomial ring k[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> vars,
           MonomialOrder order = {});

  static PolyRingPtr make(std::uint32_t p, std::vector<std::string> vars,
                          MonomialOrder order = {});

  const PrimeField& field() const { return field_; }
  int var_count() const { return int(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  int find_var(const std::string& name) const;  // -1 if absent

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, var_count());
  }
  bool compatible_with(const PolyRing& o) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;  // in [1, p)
};

// Sparse multivariate polynomial; terms sorted descending under the ring
// order, no zero coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(PolyRingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(PolyRingPtr ring, std::uint32_t c);
  static Polynomial variable(PolyRingPtr ring, int index);
  static Polynomial term(PolyRingPtr ring, const Monomial& m, std::uint32_t c);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  std::uint32_t constant_coeff() const;  // coefficient of the monomial 1

  const Term& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const;  // 0 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial negated() const;
  Polynomial scaled(std::uint32_t c) const;
  // this - c * m * g, the division-step workhorse.
  Polynomial axpy_sub(std::uint32_t c, const Monomial& m,
                      const Polynomial& g) const;
  Polynomial without_leading() const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;

  // Direct construction from (possibly unsorted, repeated) terms.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
// any leading monomial of G. Deterministic in the ordering of G.
struct PolyDivision {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
PolyDivision divide_with_remainder(const Polynomial& f,
                                   const std::vector<Polynomial>& G);

std::string monomial_str(const PolyRing& ring, const Monomial& m);

// Parses `x^2*y + 3*z - 1` over the given ring. Throws std::runtime_error
// with a message carrying an offset on bad input.
Polynomial parse_polynomial(const PolyRingPtr& ring, const std::string& text);

}  // namespace tracekit
