#include "tracekit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "tracekit/analysis.hpp"
#include "tracekit/catalog.hpp"

namespace tracekit {

namespace {

FPModule random_module(const AmbientRingPtr& R, std::mt19937_64& rng) {
  std::uint32_t p = R->poly_ring()->field().modulus();
  std::uniform_int_distribution<int> gdist(1, 3), sdist(1, 4), tdist(0, 3),
      ddist(0, 2), vdist(0, R->var_count() - 1);
  std::uniform_int_distribution<std::uint32_t> cdist(1, p - 1);
  int g = gdist(rng), s = sdist(rng);
  RMat pres(R, g, s);
  for (int r = 0; r < g; ++r) {
    for (int c = 0; c < s; ++c) {
      Polynomial f = Polynomial::zero(R->poly_ring());
      int terms = tdist(rng);
      for (int t = 0; t < terms; ++t) {
        Monomial m;
        int d = ddist(rng);
        for (int k = 0; k < d; ++k) {
          int v = vdist(rng);
          m.e[v] = std::uint16_t(m.e[v] + 1);
          ++m.deg;
        }
        f = f + Polynomial::term(R->poly_ring(), m, cdist(rng));
      }
      pres.at(r, c) = RingElement(R, f);
    }
  }
  return FPModule::from_presentation(R, std::move(pres));
}

bool same_submodule(const AmbientRingPtr& R, const std::vector<FreeVec>& a,
                    const std::vector<FreeVec>& b, int rank) {
  std::vector<FreeVec> gb_a = submodule_gb(R, a, rank);
  std::vector<FreeVec> gb_b = submodule_gb(R, b, rank);
  for (const FreeVec& v : a)
    if (!submodule_member(R, v, gb_b)) return false;
  for (const FreeVec& v : b)
    if (!submodule_member(R, v, gb_a)) return false;
  return true;
}

FreeVec vec2(const AmbientRingPtr& R, const char* a, const char* b) {
  FreeVec v(R->poly_ring(), 2);
  v[0] = parse_element(R, a).poly();
  v[1] = parse_element(R, b).poly();
  return v;
}

}  // namespace

bool run_acceptance(std::ostream& os) {
  Catalog cat = make_catalog();
  bool all = true;
  auto report = [&](int id, const std::string& name,
                    const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    os << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << name;
    if (!ok && !detail.empty()) os << " -- " << detail;
    if (std::getenv("TRACEKIT_TIME")) os << " (" << elapsed.count() << "ms)";
    os << "\n";
    all = all && ok;
  };

  report(1, "monomial curve: trace of the explicit presentation",
         [&](std::string& detail) {
           FPModule M = monomial_curve_module(cat.t345);
           Ideal tau = trace_ideal(M);
           Ideal expect = Ideal::span(cat.t345, {"x", "y", "z"});
           if (!tau.equals(expect)) {
             detail = "trace " + tau.str();
             return false;
           }
           RMat K = kernel_over_quotient(M.presentation().transpose());
           std::vector<FreeVec> kcols = matrix_columns(K);
           std::vector<FreeVec> expected = {vec2(cat.t345, "y", "z"),
                                            vec2(cat.t345, "x", "y"),
                                            vec2(cat.t345, "z", "x^2")};
           if (!same_submodule(cat.t345, kcols, expected, 2)) {
             detail = "kernel " + K.str();
             return false;
           }
           return true;
         });

  report(2, "two-lines ring: rigid but not balanced cyclic module",
         [&](std::string& detail) {
           Ideal ix = Ideal::span(cat.node, {"x"});
           FPModule M = FPModule::quotient_by_ideal(ix);
           if (!ext(1, M, M).is_zero()) {
             detail = "Ext^1 nonzero";
             return false;
           }
           HomModule E = hom_module(M, M);
           if (E.gen_count() != 1) {
             detail = "End generators: " + std::to_string(E.gen_count());
             return false;
           }
           if (!annihilator(E.module()).equals(ix)) {
             detail = "End annihilator " + annihilator(E.module()).str();
             return false;
           }
           if (is_balanced(M)) {
             detail = "module reported balanced";
             return false;
           }
           FreeResolution F = free_resolution(M, 4);
           const char* expect[] = {"x", "y", "x", "y"};
           for (int k = 0; k < 4; ++k) {
             if (F.diffs[k].rows() != 1 || F.diffs[k].cols() != 1 ||
                 !(F.diffs[k].at(0, 0) == parse_element(cat.node, expect[k]))) {
               detail = "differential " + std::to_string(k + 1) + " = " +
                        F.diffs[k].str();
               return false;
             }
           }
           return true;
         });

  report(3, "non-reduced line: noncommutative endomorphisms of (x,y)",
         [&](std::string& detail) {
           Ideal I = Ideal::span(cat.fat, {"x", "y"});
           FPModule M = FPModule::from_ideal(I);
           RMat fm(cat.fat, 2, 2), gm(cat.fat, 2, 2);
           fm.at(0, 0) = RingElement::one(cat.fat);
           gm.at(1, 0) = RingElement::one(cat.fat);
           ModuleHomomorphism f(M, M, fm, true);  // x -> x, y -> 0
           ModuleHomomorphism g(M, M, gm, true);  // x -> y, y -> 0
           if (f.compose(g).equals(g.compose(f))) {
             detail = "fg = gf";
             return false;
           }
           EndAlgebra E = end_algebra(M);
           if (!E.hom.encode(fm) || !E.hom.encode(gm)) {
             detail = "f or g missing from End";
             return false;
           }
           try {
             fractional_end(I);
             detail = "fractional End unexpectedly succeeded";
             return false;
           } catch (const std::exception& e) {
             if (std::string(e.what()).find(
                     "ideal consists of zerodivisors") == std::string::npos) {
               detail = e.what();
               return false;
             }
           }
           return true;
         });

  report(4, "plane: grade-two ideal is its own trace", [&](std::string& detail) {
    Ideal I = Ideal::span(cat.plane, {"x", "y"});
    if (!(grade(I) == ExtendedGrade::of(2))) {
      detail = "grade " + grade(I).str();
      return false;
    }
    FPModule M = FPModule::from_ideal(I);
    if (!trace_ideal(M).equals(I)) {
      detail = "trace " + trace_ideal(M).str();
      return false;
    }
    if (!fractional_equal(fractional_dual(I),
                          FractionalIdeal::whole_ring(cat.plane))) {
      detail = "dual " + fractional_dual(I).str();
      return false;
    }
    if (is_reflexive(M)) {
      detail = "reported reflexive";
      return false;
    }
    return true;
  });

  report(5, "center equals End of the trace ideal (reflexive faithful suite)",
         [&](std::string& detail) {
           std::vector<std::pair<std::string, FPModule>> suite;
           suite.push_back(
               {"maximal ideal over the cusp",
                FPModule::from_ideal(maximal_ideal(cat.cusp))});
           suite.push_back(
               {"(x) + (y) over the two-lines ring",
                direct_sum(
                    FPModule::from_ideal(Ideal::span(cat.node, {"x"})),
                    FPModule::from_ideal(Ideal::span(cat.node, {"y"})))});
           suite.push_back(
               {"free + maximal ideal over the cusp",
                direct_sum(FPModule::free_module(cat.cusp, 1),
                           FPModule::from_ideal(maximal_ideal(cat.cusp)))});
           for (auto& [name, M] : suite) {
             VerificationReport rep = verify_theorem_main(M);
             if (rep.status != ReportStatus::Pass) {
               detail = name + ": " + to_string(rep.status);
               for (const std::string& w : rep.witnesses)
                 detail += "; " + w;
               return false;
             }
           }
           return true;
         });

  report(6, "dual-side center identification and End agreement",
         [&](std::string& detail) {
           std::vector<std::pair<std::string, FPModule>> suite;
           suite.push_back({"(x,y) over the monomial curve",
                            FPModule::from_ideal(
                                Ideal::span(cat.t345, {"x", "y"}))});
           suite.push_back({"maximal ideal over the cusp",
                            FPModule::from_ideal(maximal_ideal(cat.cusp))});
           for (auto& [name, M] : suite) {
             VerificationReport rep = verify_theorem_main2(M);
             if (rep.status != ReportStatus::Pass) {
               detail = name + ": " + to_string(rep.status);
               for (const std::string& w : rep.witnesses) detail += "; " + w;
               return false;
             }
             TraceData td = trace_data(M);
             TraceData tdH = trace_data(td.dual_mod.module());
             if (!fractional_equal(fractional_end(td.tau),
                                   fractional_end(tdH.tau))) {
               detail = name + ": End of the two trace ideals differ";
               return false;
             }
           }
           return true;
         });

  report(7, "randomized trace-calculus suite (25 pairs per ring)",
         [&](std::string& detail) {
           int ring_index = 0;
           for (auto& [rname, R] : cat.all()) {
             std::mt19937_64 rng(0x5eedu + ring_index++);
             std::vector<FPModule> mods;
             for (int k = 0; k < 50; ++k) mods.push_back(random_module(R, rng));
             for (int k = 0; k + 1 < 50; k += 2) {
               VerificationReport rep =
                   verify_trace_properties(mods[k], mods[k + 1]);
               if (rep.status != ReportStatus::Pass) {
                 std::ostringstream d;
                 d << rname << " pair " << k / 2 << ": "
                   << to_string(rep.status);
                 for (const CheckItem& c : rep.conclusions)
                   if (c.state == CheckState::NotSatisfied)
                     d << "; " << c.name << " (" << c.detail << ")";
                 detail = d.str();
                 return false;
               }
             }
           }
           return true;
         });

  report(8, "balanced iff free summand on reflexive depth-one catalog modules",
         [&](std::string& detail) {
           std::vector<std::pair<std::string, FPModule>> mods;
           auto add = [&](const std::string& n, FPModule m) {
             mods.push_back({n, std::move(m)});
           };
           add("node R", FPModule::free_module(cat.node, 1));
           add("node (x)", FPModule::from_ideal(Ideal::span(cat.node, {"x"})));
           add("node (y)", FPModule::from_ideal(Ideal::span(cat.node, {"y"})));
           add("node (x)+(y)",
               direct_sum(FPModule::from_ideal(Ideal::span(cat.node, {"x"})),
                          FPModule::from_ideal(Ideal::span(cat.node, {"y"}))));
           add("node m", FPModule::from_ideal(maximal_ideal(cat.node)));
           add("node R/(x)",
               FPModule::quotient_by_ideal(Ideal::span(cat.node, {"x"})));
           add("cusp R", FPModule::free_module(cat.cusp, 1));
           add("cusp m", FPModule::from_ideal(maximal_ideal(cat.cusp)));
           add("cusp R+m",
               direct_sum(FPModule::free_module(cat.cusp, 1),
                          FPModule::from_ideal(maximal_ideal(cat.cusp))));
           add("t345 R", FPModule::free_module(cat.t345, 1));
           add("t345 m", FPModule::from_ideal(maximal_ideal(cat.t345)));
           add("t345 (x,y)",
               FPModule::from_ideal(Ideal::span(cat.t345, {"x", "y"})));
           add("t345 curve module", monomial_curve_module(cat.t345));
           add("fat R", FPModule::free_module(cat.fat, 1));
           add("fat (x,y)",
               FPModule::from_ideal(Ideal::span(cat.fat, {"x", "y"})));
           for (auto& [name, M] : mods) {
             if (!is_reflexive(M)) continue;
             bool bal = is_balanced(M);
             bool fs = has_free_summand(M);
             if (bal != fs) {
               detail = name + ": balanced=" + (bal ? "true" : "false") +
                        " free-summand=" + (fs ? "true" : "false");
               return false;
             }
             if (trace_ideal(M).contains_one() && !bal) {
               detail = name + ": unit trace but not balanced";
               return false;
             }
           }
           return true;
         });

  report(9, "torsion in the self-tensor of trace ideals over the cusp",
         [&](std::string& detail) {
           VerificationReport r1 = hw_trace_check(maximal_ideal(cat.cusp));
           if (r1.status != ReportStatus::Pass) {
             detail = "maximal ideal: " + to_string(r1.status);
             return false;
           }
           Ideal tau = trace_ideal(
               FPModule::from_ideal(maximal_ideal(cat.cusp)));
           FPModule T = FPModule::from_ideal(tau);
           if (torsion_submodule(tensor(T, dual(T).module())).is_zero_module()) {
             detail = "no torsion witness";
             return false;
           }
           VerificationReport r2 = hw_trace_check(Ideal::span(cat.cusp, {"x"}));
           if (r2.status != ReportStatus::Pass) {
             detail = "(x): " + to_string(r2.status);
             return false;
           }
           return true;
         });

  report(10, "Gorenstein classification and fractional End presentations",
         [&](std::string& detail) {
           if (!is_gorenstein(cat.plane) || !is_gorenstein(cat.cusp) ||
               is_gorenstein(cat.t345)) {
             detail = "ring classification wrong";
             return false;
           }
           for (auto& R : {cat.cusp, cat.t345}) {
             Ideal m = maximal_ideal(R);
             FractionalIdeal C = fractional_end(m);
             AmbientRingPtr Z = ring_presentation_of_fractional(C);
             if (!is_gorenstein(Z)) {
               detail = "End(m) over " + R->name() + " presented as " +
                        Z->name() + " not Gorenstein";
               return false;
             }
           }
           return true;
         });

  report(11, "engine soundness: canonicality, syzygies, exactness",
         [&](std::string& detail) {
           // Canonicality under generator shuffles.
           std::vector<std::pair<AmbientRingPtr, std::vector<std::string>>>
               sets = {
                   {cat.plane, {"x^2", "x*y", "y^2", "x^3-y"}},
                   {cat.node, {"x+y", "x^2", "y^3-x"}},
                   {cat.cusp, {"x^2", "x*y", "y^2"}},
                   {cat.t345, {"y^2-x*z", "x^2*y-z^2", "x^3-y*z"}},
               };
           std::mt19937_64 rng(99);
           for (auto& [R, gens] : sets) {
             std::vector<FreeVec> base;
             for (const std::string& s : gens)
               base.push_back(
                   FreeVec::from_poly(parse_polynomial(R->poly_ring(), s)));
             std::vector<FreeVec> ref = buchberger(base).basis;
             for (int t = 0; t < 20; ++t) {
               std::vector<FreeVec> shuffled = base;
               std::shuffle(shuffled.begin(), shuffled.end(), rng);
               std::vector<FreeVec> out = buchberger(shuffled).basis;
               if (out.size() != ref.size()) {
                 detail = "basis size changed under shuffle";
                 return false;
               }
               for (std::size_t i = 0; i < ref.size(); ++i)
                 if (!(out[i] == ref[i])) {
                   detail = "basis changed under shuffle";
                   return false;
                 }
             }
           }
           // Syzygy soundness on catalog presentations.
           std::vector<FPModule> mods = {
               monomial_curve_module(cat.t345),
               FPModule::from_ideal(maximal_ideal(cat.cusp)),
               FPModule::from_ideal(Ideal::span(cat.node, {"x", "y"}))};
           for (const FPModule& M : mods) {
             std::vector<FreeVec> cols = matrix_columns(M.presentation());
             if (cols.empty()) continue;
             for (const FreeVec& s : syzygies(cols)) {
               FreeVec acc(M.ring()->poly_ring(), M.gen_count());
               for (std::size_t k = 0; k < cols.size(); ++k)
                 acc = acc + cols[k].mul_poly(s[int(k)]);
               if (!acc.is_zero()) {
                 detail = "syzygy violation";
                 return false;
               }
             }
           }
           // Resolution exactness: d d = 0 and kernel = image, both ways.
           for (const FPModule& M : mods) {
             FreeResolution F = free_resolution(M, 3);
             for (int k = 0; k + 1 < F.length(); ++k) {
               if (!F.diffs[k].mul(F.diffs[k + 1]).is_zero()) {
                 detail = "d*d nonzero";
                 return false;
               }
               RMat K = kernel_over_quotient(F.diffs[k]);
               std::vector<FreeVec> kc = matrix_columns(K);
               std::vector<FreeVec> im = matrix_columns(F.diffs[k + 1]);
               if (!same_submodule(M.ring(), kc, im, F.diffs[k].cols())) {
                 detail = "kernel and image differ at step " +
                          std::to_string(k + 1);
                 return false;
               }
             }
           }
           return true;
         });

  os << (all ? "acceptance: all criteria passed"
             : "acceptance: FAILURES present")
     << "\n";
  return all;
}

}  // namespace tracekit
