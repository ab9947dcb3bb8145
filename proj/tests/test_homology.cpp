#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tracekit/catalog.hpp"
#include "tracekit/homology.hpp"

using namespace tracekit;

namespace {
Catalog cat = make_catalog();

bool rmat_equal(const RMat& a, const RMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!(a.at(r, c) == b.at(r, c))) return false;
  return true;
}
}  // namespace

TEST_CASE("free modules resolve to zero immediately") {
  FreeResolution F = free_resolution(FPModule::free_module(cat.cusp, 2), 3);
  CHECK(F.ranks[0] == 2);
  for (int k = 1; k <= 3; ++k) CHECK(F.ranks[k] == 0);
}

TEST_CASE("the periodic resolution over the two-lines ring") {
  FPModule M = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  FreeResolution F = free_resolution(M, 4);
  const char* expect[] = {"x", "y", "x", "y"};
  for (int k = 0; k < 4; ++k) {
    REQUIRE(F.ranks[k + 1] == 1);
    CHECK(F.diffs[k].at(0, 0) == parse_element(cat.node, expect[k]));
  }
  // Period two: matching differentials repeat.
  CHECK(rmat_equal(F.diffs[1], F.diffs[3]));
  CHECK(rmat_equal(F.diffs[0], F.diffs[2]));
}

TEST_CASE("the Koszul resolution of the plane residue field") {
  FPModule k = FPModule::quotient_by_ideal(maximal_ideal(cat.plane));
  FreeResolution F = free_resolution(k, 3);
  CHECK(F.ranks[0] == 1);
  CHECK(F.ranks[1] == 2);
  CHECK(F.ranks[2] == 1);
  CHECK(F.ranks[3] == 0);
}

TEST_CASE("matrix-factorization periodicity over the cusp") {
  FPModule m = FPModule::from_ideal(maximal_ideal(cat.cusp));
  FreeResolution F = free_resolution(m, 4);
  CHECK(rmat_equal(F.diffs[1], F.diffs[3]));
}

TEST_CASE("differentials compose to zero and match kernels exactly") {
  std::vector<FPModule> mods = {
      FPModule::from_ideal(maximal_ideal(cat.cusp)),
      monomial_curve_module(cat.t345),
      FPModule::quotient_by_ideal(maximal_ideal(cat.fat)),
  };
  for (const FPModule& M : mods) {
    FreeResolution F = free_resolution(M, 3);
    for (int k = 0; k + 1 < F.length(); ++k) {
      CHECK(F.diffs[k].mul(F.diffs[k + 1]).is_zero());
      // kernel(d_k) is contained in image(d_{k+1}).
      RMat K = kernel_over_quotient(F.diffs[k]);
      std::vector<FreeVec> im = matrix_columns(F.diffs[k + 1]);
      std::vector<FreeVec> gb = submodule_gb(M.ring(), im, F.diffs[k].cols());
      for (const FreeVec& v : matrix_columns(K))
        CHECK(submodule_member(M.ring(), v, gb));
    }
  }
}

TEST_CASE("Ext vanishing: free source, the rigid branch module") {
  FPModule R1 = FPModule::free_module(cat.node, 1);
  FPModule N = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"y"}));
  CHECK(ext(1, R1, N).is_zero());

  FPModule M = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  CHECK(ext(1, M, M).is_zero());
}

TEST_CASE("Ext^2 of the plane residue field against the ring is the field") {
  // Koszul self-duality pins this to one generator killed exactly by m.
  FPModule k = FPModule::quotient_by_ideal(maximal_ideal(cat.plane));
  ExtGroup e = ext(2, k, FPModule::free_module(cat.plane, 1));
  CHECK_FALSE(e.is_zero());
  CHECK(e.module.minimal_generators() == 1);
  CHECK(annihilator(e.module).equals(maximal_ideal(cat.plane)));
}

TEST_CASE("Ext^0 agrees with the Hom module through the comparison map") {
  std::vector<std::pair<FPModule, FPModule>> pairs = {
      {FPModule::from_ideal(maximal_ideal(cat.cusp)),
       FPModule::free_module(cat.cusp, 1)},
      {FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"})),
       FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}))},
  };
  for (auto& [M, N] : pairs) {
    FreeResolution F = free_resolution(M, 1);
    ExtGroup e0 = ext_group(F, 0, N);
    HomModule H = hom_module(M, N);
    CHECK(e0.module.minimal_generators() == H.module().minimal_generators());
    CHECK(annihilator(e0.module).equals(annihilator(H.module())));

    // Explicit comparison map: rebuild the cocycle generators (the engine is
    // deterministic, so this reproduces the generators of e0), reshape each
    // into a homomorphism matrix, and encode it in Hom coordinates. The
    // resulting map Ext^0 -> Hom must be an isomorphism.
    const RMat& d1 = F.diffs[0];
    int gM = M.gen_count(), gN = N.gen_count();
    RMat delta0(M.ring(), d1.cols() * gN, gM * gN);
    for (int q = 0; q < gM; ++q)
      for (int j = 0; j < d1.cols(); ++j)
        for (int r = 0; r < gN; ++r)
          delta0.at(j * gN + r, q * gN + r) = d1.at(q, j);
    RMat U = preimage_gens(delta0, block_diag(N.presentation(), d1.cols()));
    REQUIRE(U.cols() == e0.module.gen_count());
    RMat cmp(M.ring(), H.gen_count(), U.cols());
    for (int c = 0; c < U.cols(); ++c) {
      RMat phi(M.ring(), gN, gM);
      for (int q = 0; q < gM; ++q)
        for (int r = 0; r < gN; ++r) phi.at(r, q) = U.at(q * gN + r, c);
      auto coords = H.encode(phi);
      REQUIRE(coords.has_value());
      for (int r = 0; r < H.gen_count(); ++r) cmp.at(r, c) = (*coords)[r];
    }
    ModuleHomomorphism compare(e0.module, H.module(), cmp, true);
    CHECK(compare.is_isomorphism());
  }
}

TEST_CASE("module depth: socle, branch, self-tensor of the rigid module") {
  FPModule k = FPModule::quotient_by_ideal(maximal_ideal(cat.node));
  CHECK(depth_module(k) == 0);

  FPModule M = FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}));
  CHECK(depth_module(M) == 1);
  // Oracle: multiplication by y is injective on R/(x).
  CHECK(ModuleHomomorphism::multiplication(M, parse_element(cat.node, "y"))
            .kernel_is_zero());

  FPModule T = tensor(M, dual(M).module());
  CHECK(depth_module(T) == 1);

  CHECK_THROWS(depth_module(FPModule::free_module(cat.node, 0)));
}

TEST_CASE("rigidity: free modules, the branch module, the cusp ideal") {
  CHECK(is_rigid(FPModule::free_module(cat.cusp, 2)));
  CHECK(is_rigid(FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"}))));
  CHECK_FALSE(is_rigid(FPModule::from_ideal(maximal_ideal(cat.cusp))));
}

TEST_CASE("grade through Ext agrees with the ring-level entry point") {
  std::vector<Ideal> ideals = {
      Ideal::span(cat.plane, {"x", "y"}),
      Ideal::span(cat.plane, {"x"}),
      maximal_ideal(cat.node),
      maximal_ideal(cat.cusp),
  };
  for (const Ideal& I : ideals) {
    ExtendedGrade g = grade(I);
    REQUIRE_FALSE(g.infinite);
    FPModule q = FPModule::quotient_by_ideal(I);
    FPModule free = FPModule::free_module(I.ring(), 1);
    for (int i = 0; i < g.value; ++i) CHECK(ext(i, q, free).is_zero());
    CHECK_FALSE(ext(g.value, q, free).is_zero());
  }
}
