#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tracekit/catalog.hpp"
#include "tracekit/fpmod.hpp"

using namespace tracekit;

namespace {
Catalog cat = make_catalog();

FPModule ideal_module(const AmbientRingPtr& R,
                      const std::vector<std::string>& gens) {
  return FPModule::from_ideal(Ideal::span(R, gens));
}
}  // namespace

TEST_CASE("hom out of the free module keeps generators and annihilator") {
  FPModule R1 = FPModule::free_module(cat.node, 1);
  FPModule N = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  HomModule H = hom_module(R1, N);
  CHECK(H.gen_count() == 1);
  CHECK(annihilator(H.module()).equals(annihilator(N)));
}

TEST_CASE("End of the cyclic module on one branch") {
  FPModule M = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  HomModule E = hom_module(M, M);
  CHECK(E.gen_count() == 1);
  CHECK(E.module().minimal_generators() == 1);
  CHECK(annihilator(E.module()).equals(Ideal::span(cat.node, {"x"})));
}

TEST_CASE("Hom from one branch into the ring lands on the other branch") {
  FPModule M = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  HomModule H = hom_module(M, FPModule::free_module(cat.node, 1));
  CHECK(H.gen_count() == 1);
  CHECK(annihilator(H.module()).equals(Ideal::span(cat.node, {"x"})));
}

TEST_CASE("duals: free modules, the curve module, a grade-two ideal") {
  DualModule Dfree = dual(FPModule::free_module(cat.cusp, 3));
  CHECK(Dfree.hom.gen_count() == 3);
  CHECK(Dfree.module().rel_count() == 0);

  FPModule M = monomial_curve_module(cat.t345);
  DualModule D = dual(M);
  CHECK(D.hom.gen_count() == 3);

  DualModule Dp = dual(ideal_module(cat.plane, {"x", "y"}));
  CHECK(Dp.hom.gen_count() == 1);
  CHECK(annihilator(Dp.module()).is_zero());
}

TEST_CASE("hom decoding round-trips through encode") {
  FPModule M = ideal_module(cat.cusp, {"x", "y"});
  HomModule E = hom_module(M, M);
  for (int i = 0; i < E.gen_count(); ++i) {
    auto coords = E.encode(E.decode_matrix(i));
    REQUIRE(coords.has_value());
    CHECK(E.decode_combination(*coords).equals(E.decode(i)));
  }
}

TEST_CASE("tensor: unit, residue field, torsion in the self-tensor") {
  FPModule R1 = FPModule::free_module(cat.plane, 1);
  FPModule N = FPModule::quotient_by_ideal(Ideal::span(cat.plane, {"x"}));
  FPModule T = tensor(R1, N);
  CHECK(T.minimal_generators() == N.minimal_generators());
  CHECK(annihilator(T).equals(annihilator(N)));

  FPModule k = tensor(FPModule::quotient_by_ideal(Ideal::span(cat.plane, {"x"})),
                      FPModule::quotient_by_ideal(Ideal::span(cat.plane, {"y"})));
  CHECK(k.minimal_generators() == 1);
  CHECK(annihilator(k).equals(Ideal::span(cat.plane, {"x", "y"})));

  FPModule m = ideal_module(cat.cusp, {"x", "y"});
  FPModule mm = tensor(m, dual(m).module());
  CHECK_FALSE(torsion_submodule(mm).is_zero_module());
}

TEST_CASE("the hand torsion witness in m (x) m* over the cusp") {
  FPModule m = ideal_module(cat.cusp, {"x", "y"});
  DualModule D = dual(m);
  // The dual generators are the inclusion and one more functional; pin the
  // value matrix before indexing into the tensor coordinates.
  REQUIRE(D.hom.gen_count() == 2);
  REQUIRE(D.values.at(0, 0) == parse_element(cat.cusp, "x"));
  REQUIRE(D.values.at(1, 0) == parse_element(cat.cusp, "y"));
  REQUIRE(D.values.at(0, 1) == parse_element(cat.cusp, "y"));
  REQUIRE(D.values.at(1, 1) == parse_element(cat.cusp, "x^2"));
  FPModule T = tensor(m, D.module());
  // w = m_1 (x) alpha_2 - m_2 (x) alpha_1, flat index i*2 + j.
  std::vector<RingElement> w(4, RingElement::zero(cat.cusp));
  w[1] = RingElement::one(cat.cusp);
  w[2] = RingElement::one(cat.cusp).negated();
  CHECK_FALSE(T.element_is_zero(w));
  std::vector<RingElement> xw;
  for (const RingElement& e : w) xw.push_back(parse_element(cat.cusp, "x") * e);
  CHECK(T.element_is_zero(xw));
}

TEST_CASE("direct sum with the zero module changes nothing essential") {
  FPModule m = ideal_module(cat.cusp, {"x", "y"});
  FPModule zero = FPModule::free_module(cat.cusp, 0);
  FPModule s = direct_sum(m, zero);
  CHECK(s.gen_count() == m.gen_count());
  CHECK(s.minimal_generators() == m.minimal_generators());
  CHECK(annihilator(s).equals(annihilator(m)));
}

TEST_CASE("dual of a direct sum splits blockwise") {
  FPModule A = ideal_module(cat.node, {"x"});
  FPModule B = ideal_module(cat.node, {"y"});
  DualModule DA = dual(A), DB = dual(B), DS = dual(direct_sum(A, B));
  CHECK(DS.hom.gen_count() == DA.hom.gen_count() + DB.hom.gen_count());
}

TEST_CASE("evaluation maps: free iso, strict torsionless, branch iso") {
  CHECK(evaluation_map(FPModule::free_module(cat.plane, 2)).is_isomorphism());

  FPModule I = ideal_module(cat.plane, {"x", "y"});
  ModuleHomomorphism eps = evaluation_map(I);
  CHECK(eps.kernel_is_zero());
  FPModule coker = eps.cokernel();
  CHECK_FALSE(coker.is_zero_module());
  CHECK(coker.minimal_generators() == 1);
  CHECK(annihilator(coker).equals(Ideal::span(cat.plane, {"x", "y"})));

  CHECK(evaluation_map(ideal_module(cat.node, {"x"})).is_isomorphism());
}

TEST_CASE("reflexivity and torsionless tests on the catalog") {
  CHECK(is_reflexive(FPModule::free_module(cat.plane, 2)));
  FPModule I = ideal_module(cat.plane, {"x", "y"});
  CHECK(is_torsionless(I));
  CHECK_FALSE(is_reflexive(I));
  CHECK(is_reflexive(ideal_module(cat.cusp, {"x", "y"})));

  std::vector<FPModule> mods = {
      FPModule::free_module(cat.node, 1), ideal_module(cat.node, {"x"}),
      ideal_module(cat.cusp, {"x", "y"}), ideal_module(cat.plane, {"x", "y"}),
      FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}))};
  for (const FPModule& M : mods) {
    if (is_reflexive(M)) CHECK(is_torsionless(M));
  }
}

TEST_CASE("kernels and cokernels") {
  FPModule R1 = FPModule::free_module(cat.node, 1);
  ModuleHomomorphism id = ModuleHomomorphism::identity(R1);
  CHECK(id.kernel_is_zero());
  CHECK(id.cokernel().is_zero_module());

  ModuleHomomorphism mulx =
      ModuleHomomorphism::multiplication(R1, parse_element(cat.node, "x"));
  auto ker = mulx.kernel();
  CHECK_FALSE(ker.module.is_zero_module());
  REQUIRE(ker.inclusion.cols() == 1);
  CHECK(ker.inclusion.at(0, 0) == parse_element(cat.node, "y"));
}

TEST_CASE("annihilators and faithfulness") {
  CHECK(annihilator(FPModule::free_module(cat.plane, 1)).is_zero());
  CHECK(annihilator(FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"})))
            .equals(Ideal::span(cat.node, {"x"})));
  CHECK(is_faithful(ideal_module(cat.cusp, {"x", "y"})));
  CHECK_FALSE(is_faithful(ideal_module(cat.node, {"x"})));
}

TEST_CASE("minimal generator counts") {
  CHECK(FPModule::free_module(cat.plane, 3).minimal_generators() == 3);
  CHECK(ideal_module(cat.t345, {"x", "y", "z"}).minimal_generators() == 3);
  CHECK(FPModule::quotient_by_ideal(maximal_ideal(cat.plane))
            .minimal_generators() == 1);
}

TEST_CASE("torsion submodules: free, everything, and the domain guard") {
  AmbientRingPtr line = AmbientRing::make(32003, {"x"}, {}, true);
  CHECK(torsion_submodule(FPModule::free_module(line, 2)).is_zero_module());
  FPModule M = FPModule::quotient_by_ideal(Ideal::span(line, {"x"}));
  FPModule tors = torsion_submodule(M);
  CHECK_FALSE(tors.is_zero_module());
  CHECK_THROWS_WITH(
      torsion_submodule(FPModule::free_module(cat.node, 1)),
      doctest::Contains("torsion submodule requires a domain"));
}

TEST_CASE("homomorphism validity: the lifting condition is enforced") {
  FPModule M = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  FPModule R1 = FPModule::free_module(cat.node, 1);
  RMat bad(cat.node, 1, 1);
  bad.at(0, 0) = RingElement::one(cat.node);
  // R/(x) -> R by 1 is not a homomorphism: x*1 is not zero in R.
  CHECK_THROWS(ModuleHomomorphism(M, R1, bad, true));
  RMat good(cat.node, 1, 1);
  good.at(0, 0) = parse_element(cat.node, "y");
  CHECK_NOTHROW(ModuleHomomorphism(M, R1, good, true));
}

TEST_CASE("the End algebra table matches actual composition") {
  FPModule m = ideal_module(cat.cusp, {"x", "y"});
  EndAlgebra E = end_algebra(m);
  CHECK(E.is_commutative());
  for (int i = 0; i < E.hom.gen_count(); ++i)
    for (int j = 0; j < E.hom.gen_count(); ++j) {
      ModuleHomomorphism direct = E.hom.decode(i).compose(E.hom.decode(j));
      CHECK(E.hom.decode_combination(E.table[i][j]).equals(direct));
    }
}
