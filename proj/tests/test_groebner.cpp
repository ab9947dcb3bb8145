#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "tracekit/catalog.hpp"
#include "tracekit/groebner.hpp"

using namespace tracekit;

namespace {

std::vector<FreeVec> polys_to_vecs(const PolyRingPtr& R,
                                   const std::vector<std::string>& ss) {
  std::vector<FreeVec> out;
  for (const std::string& s : ss)
    out.push_back(FreeVec::from_poly(parse_polynomial(R, s)));
  return out;
}

bool basis_equals(const std::vector<FreeVec>& basis,
                  const std::vector<Polynomial>& expect) {
  if (basis.size() != expect.size()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(basis[i][0] == expect[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("monomial ideal is its own basis") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y"});
  GroebnerResult g = buchberger(polys_to_vecs(R, {"x"}));
  CHECK(basis_equals(g.basis, {parse_polynomial(R, "x")}));
}

TEST_CASE("one S-pair run under grevlex") {
  // Hand run with x > y: lead(y^2 - x^3) = x^3, S(x^3 - y^2, x*y) gives y^3,
  // and every further S-vector reduces to zero. Sorted descending by lead.
  PolyRingPtr R = PolyRing::make(32003, {"x", "y"});
  GroebnerResult g = buchberger(polys_to_vecs(R, {"y^2 - x^3", "x*y"}));
  CHECK(basis_equals(g.basis,
                     {parse_polynomial(R, "x^3 - y^2"),
                      parse_polynomial(R, "y^3"), parse_polynomial(R, "x*y")}));
}

TEST_CASE("one S-pair run when y is ranked above x") {
  // Same input, variables declared (y, x): lead(y^2 - x^3) is now y^2 and
  // the S-pair against x*y produces x^4 = x*(x^3 - y^2) + y*(x*y).
  PolyRingPtr R = PolyRing::make(32003, {"y", "x"}, {OrderKind::Lex});
  GroebnerResult g = buchberger(polys_to_vecs(R, {"y^2 - x^3", "x*y"}));
  CHECK(basis_equals(g.basis,
                     {parse_polynomial(R, "y^2 - x^3"),
                      parse_polynomial(R, "y*x"), parse_polynomial(R, "x^4")}));
}

TEST_CASE("the monomial curve relations are already a basis") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y", "z"});
  std::vector<FreeVec> gens =
      polys_to_vecs(R, {"y^2 - x*z", "x^2*y - z^2", "x^3 - y*z"});
  CHECK(is_groebner_basis(gens));
  GroebnerResult g = buchberger(gens);
  CHECK(g.basis.size() == 3);
}

TEST_CASE("canonicality under generator shuffles") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y", "z"});
  std::vector<FreeVec> gens = polys_to_vecs(
      R, {"x^2 - y*z", "x*y - z^2", "y^3 - x", "z^3 - y^2", "x*z"});
  std::vector<FreeVec> ref = buchberger(gens).basis;
  CHECK(is_groebner_basis(ref));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<FreeVec> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<FreeVec> out = buchberger(shuffled).basis;
    REQUIRE(out.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(out[i] == ref[i]);
  }
}

TEST_CASE("basis membership lifts to exact coefficients over the inputs") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y"});
  std::vector<FreeVec> gens = polys_to_vecs(R, {"x^2 + y", "x*y - 1", "y^3"});
  GroebnerResult g = buchberger(gens);
  for (const FreeVec& b : g.basis) {
    auto lift = lift_membership(b, gens);
    REQUIRE(lift.has_value());
    Polynomial acc = Polynomial::zero(R);
    for (std::size_t k = 0; k < gens.size(); ++k)
      acc = acc + (*lift)[k] * gens[k][0];
    CHECK(acc == b[0]);
  }
}

TEST_CASE("syzygies: free columns have none") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y"});
  std::vector<FreeVec> cols = {FreeVec::unit(R, 2, 0), FreeVec::unit(R, 2, 1)};
  CHECK(syzygies(cols).empty());
}

TEST_CASE("syzygies: the Koszul relation of a regular sequence") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y"});
  std::vector<FreeVec> cols = polys_to_vecs(R, {"x", "y"});
  std::vector<FreeVec> syz = syzygies(cols);
  REQUIRE(syz.size() == 1);
  CHECK(syz[0][0] == parse_polynomial(R, "y"));
  CHECK(syz[0][1] == parse_polynomial(R, "-x"));
}

TEST_CASE("syzygy soundness on random columns") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y", "z"});
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> vdist(0, 2), ddist(0, 2), tdist(0, 2);
  std::uniform_int_distribution<std::uint32_t> cdist(1, 32002);
  for (int round = 0; round < 25; ++round) {
    int rank = 1 + int(rng() % 3);
    int ncols = 2 + int(rng() % 4);
    std::vector<FreeVec> cols;
    for (int c = 0; c < ncols; ++c) {
      FreeVec v(R, rank);
      for (int r = 0; r < rank; ++r) {
        Polynomial f = Polynomial::zero(R);
        int terms = tdist(rng);
        for (int t = 0; t < terms; ++t) {
          Monomial m;
          int d = ddist(rng);
          for (int k = 0; k < d; ++k) {
            int var = vdist(rng);
            m.e[var] = std::uint16_t(m.e[var] + 1);
            ++m.deg;
          }
          f = f + Polynomial::term(R, m, cdist(rng));
        }
        v[r] = f;
      }
      cols.push_back(std::move(v));
    }
    for (const FreeVec& s : syzygies(cols)) {
      FreeVec acc(R, cols[0].rank());
      for (std::size_t k = 0; k < cols.size(); ++k)
        acc = acc + cols[k].mul_poly(s[int(k)]);
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("kernel over a quotient: unit entry, zerodivisor, curve module") {
  Catalog cat = make_catalog();

  RMat unit(cat.node, 1, 1);
  unit.at(0, 0) = RingElement::one(cat.node);
  CHECK(kernel_over_quotient(unit).cols() == 0);

  RMat xmat(cat.node, 1, 1);
  xmat.at(0, 0) = parse_element(cat.node, "x");
  RMat k = kernel_over_quotient(xmat);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == parse_element(cat.node, "y"));

  // A * K vanishes over the quotient for every kernel output.
  FPModule M = monomial_curve_module(cat.t345);
  RMat At = M.presentation().transpose();
  RMat K = kernel_over_quotient(At);
  CHECK(At.mul(K).is_zero());
  CHECK(K.cols() == 3);
}

TEST_CASE("elimination: graphs, the cuspidal cubic, saturation by hand") {
  PolyRingPtr R2 = PolyRing::make(32003, {"x", "u"});
  PolyRingPtr Rx = PolyRing::make(32003, {"x"});
  std::vector<Polynomial> g1 = {parse_polynomial(R2, "u - x^2")};
  CHECK(eliminate_variables(g1, {1}, Rx).empty());

  PolyRingPtr R3 = PolyRing::make(32003, {"x", "u", "v"});
  PolyRingPtr Ruv = PolyRing::make(32003, {"u", "v"});
  std::vector<Polynomial> g2 = {parse_polynomial(R3, "u - x^2"),
                                parse_polynomial(R3, "v - x^3")};
  std::vector<Polynomial> cubic = eliminate_variables(g2, {0}, Ruv);
  REQUIRE(cubic.size() == 1);
  // The cuspidal cubic relation, in its monic grevlex normal form.
  CHECK(cubic[0] == parse_polynomial(Ruv, "u^3 - v^2"));

  PolyRingPtr R4 = PolyRing::make(32003, {"x", "y", "u", "t"});
  PolyRingPtr Rk = PolyRing::make(32003, {"x", "y", "u"});
  std::vector<Polynomial> g3 = {parse_polynomial(R4, "x*u - y"),
                                parse_polynomial(R4, "1 - x*t")};
  std::vector<Polynomial> sat = eliminate_variables(g3, {3}, Rk);
  REQUIRE(sat.size() == 1);
  CHECK(sat[0] == parse_polynomial(Rk, "x*u - y"));
}

TEST_CASE("membership lifting returns exact coefficients") {
  PolyRingPtr R = PolyRing::make(32003, {"x", "y"});
  std::vector<FreeVec> cols = polys_to_vecs(R, {"x^2 + y", "x*y - 1"});
  Polynomial target = parse_polynomial(R, "x^3 + x*y + x - y");
  // x*(x^2 + y) + 1*(x*y - 1) = x^3 + xy + xy - 1 ... build a true member.
  target = parse_polynomial(R, "x") * cols[0][0] +
           parse_polynomial(R, "y - 2") * cols[1][0];
  auto lift = lift_membership(FreeVec::from_poly(target), cols);
  REQUIRE(lift.has_value());
  Polynomial acc = Polynomial::zero(R);
  for (std::size_t k = 0; k < cols.size(); ++k)
    acc = acc + (*lift)[k] * cols[k][0];
  CHECK(acc == target);
  CHECK_FALSE(
      lift_membership(FreeVec::from_poly(parse_polynomial(R, "1")), cols)
          .has_value());
}
