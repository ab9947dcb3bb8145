#include "tracekit/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tracekit {

namespace {

constexpr const char* kScopeNote =
    "graded-local convention: local hypotheses are read at the maximal ideal "
    "(x_1..x_n); completion arguments are not executed";

CheckItem item(std::string name, bool ok, std::string detail = "") {
  return {std::move(name),
          ok ? CheckState::Satisfied : CheckState::NotSatisfied,
          std::move(detail)};
}

CheckItem na(std::string name, std::string detail) {
  return {std::move(name), CheckState::NotApplicable, std::move(detail)};
}

void skip_conclusions(VerificationReport& rep,
                      std::initializer_list<const char*> names) {
  for (const char* n : names)
    rep.conclusions.push_back(na(n, "skipped: hypotheses not met"));
}

std::string fresh_var(const std::vector<std::string>& taken,
                      const std::string& base) {
  std::string name = base;
  auto used = [&](const std::string& s) {
    for (const std::string& t : taken)
      if (t == s) return true;
    return false;
  };
  int k = 1;
  while (used(name)) name = base + std::to_string(++k);
  return name;
}

bool positive_grade(const Ideal& I) {
  return ideal_quotient(Ideal::zero(I.ring()), I).is_zero();
}

std::vector<ModuleHomomorphism> decode_all(const HomModule& H) {
  std::vector<ModuleHomomorphism> out;
  for (int i = 0; i < H.gen_count(); ++i) out.push_back(H.decode(i));
  return out;
}

// Every generator of N is hit by some Hom(M,N) value on a generator of M.
bool generates(const FPModule& M, const FPModule& N) {
  if (N.is_zero_module()) return true;
  HomModule H = hom_module(M, N);
  std::vector<FreeVec> cols;
  const PolyRingPtr& poly = N.ring()->poly_ring();
  for (int k = 0; k < H.gen_count(); ++k) {
    const RMat& phi = H.decode_matrix(k);
    for (int c = 0; c < phi.cols(); ++c) {
      FreeVec v(poly, N.gen_count());
      for (int r = 0; r < phi.rows(); ++r) v[r] = phi.at(r, c).poly();
      if (!v.is_zero()) cols.push_back(std::move(v));
    }
  }
  std::vector<FreeVec> rel = matrix_columns(N.reduced_relations());
  cols.insert(cols.end(), rel.begin(), rel.end());
  std::vector<FreeVec> gb = submodule_gb(N.ring(), cols, N.gen_count());
  for (int j = 0; j < N.gen_count(); ++j) {
    if (!submodule_member(N.ring(), FreeVec::unit(poly, N.gen_count(), j), gb))
      return false;
  }
  return true;
}

}  // namespace

CenterData center_of_end(const FPModule& M) {
  CenterData out;
  out.algebra = end_algebra(M);
  const HomModule& E = out.algebra.hom;
  const AmbientRingPtr& ring = M.ring();
  int h = E.gen_count();
  if (h == 0) return out;

  // f is central iff every commutator [f, E_j] vanishes: the center is the
  // kernel of the stacked commutator map End -> End^h.
  RMat stacked(ring, h * h, h);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < h; ++i) {
      RMat comm = E.decode_matrix(i).mul(E.decode_matrix(j)) -
                  E.decode_matrix(j).mul(E.decode_matrix(i));
      auto enc = E.encode(comm);
      if (!enc) throw std::logic_error("commutator failed to encode");
      for (int r = 0; r < h; ++r) stacked.at(j * h + r, i) = (*enc)[r];
    }
  }
  RMat rel = block_diag(E.module().presentation(), h);
  RMat U = preimage_gens(stacked, rel);

  auto id_coords = E.encode(RMat::identity(ring, M.gen_count()));
  if (!id_coords) throw std::logic_error("identity failed to encode in End");
  FreeVec id_vec(ring->poly_ring(), h);
  for (int r = 0; r < h; ++r) id_vec[r] = (*id_coords)[r].poly();
  std::vector<FreeVec> scalar_cols = {id_vec};
  std::vector<FreeVec> pres_cols = matrix_columns(E.module().presentation());
  scalar_cols.insert(scalar_cols.end(), pres_cols.begin(), pres_cols.end());

  for (int c = 0; c < U.cols(); ++c) {
    std::vector<RingElement> coeffs = U.col(c);
    out.generators.push_back(E.decode_combination(coeffs));
    FreeVec v(ring->poly_ring(), h);
    for (int r = 0; r < h; ++r) v[r] = coeffs[r].poly();
    if (!lift_over_ring(ring, v, scalar_cols, h))
      out.scalar = false;
  }
  return out;
}

bool is_balanced(const FPModule& M) {
  if (!is_faithful(M)) return false;
  return center_of_end(M).scalar;
}

bool has_free_summand(const FPModule& M) {
  return trace_ideal(M).contains_one();
}

AmbientRingPtr ring_presentation_of_fractional(const FractionalIdeal& C) {
  const AmbientRingPtr& R = C.ring();
  if (!C.contains_one())
    throw std::runtime_error("fractional ideal does not contain 1");
  if (!fractional_mult_closed(C))
    throw std::runtime_error("fractional ideal is not multiplicatively closed");
  const RingElement& d = C.denominator;
  Ideal dR(R, {d});
  std::vector<RingElement> frac_gens;
  for (const RingElement& a : C.numerator.gens()) {
    if (a.is_zero() || dR.contains(a)) continue;  // a/d already lies in R
    frac_gens.push_back(a);
  }

  const PolyRingPtr& poly = R->poly_ring();
  std::uint32_t p = poly->field().modulus();
  int n = poly->var_count();
  int m = int(frac_gens.size());
  std::vector<std::string> vars = poly->vars();
  for (int i = 0; i < m; ++i) vars.push_back(fresh_var(vars, "u"));
  std::vector<std::string> kept_vars = vars;
  vars.push_back(fresh_var(vars, "t"));
  PolyRingPtr big = PolyRing::make(p, vars);
  PolyRingPtr target = PolyRing::make(p, kept_vars);

  auto lift_poly = [&](const Polynomial& f) {
    std::vector<Term> ts(f.terms().begin(), f.terms().end());
    return Polynomial::from_terms(big, std::move(ts));
  };
  std::vector<Polynomial> gens;
  for (const Polynomial& g : R->defining_gb()) gens.push_back(lift_poly(g));
  for (int i = 0; i < m; ++i) {
    gens.push_back(lift_poly(d.poly()) * Polynomial::variable(big, n + i) -
                   lift_poly(frac_gens[i].poly()));
  }
  gens.push_back(Polynomial::constant(big, 1) -
                 lift_poly(d.poly()) * Polynomial::variable(big, n + m));

  std::vector<Polynomial> relations = eliminate_variables(gens, {n + m}, target);
  try {
    return AmbientRing::make(target, std::move(relations), R->is_domain());
  } catch (const std::exception& e) {
    throw std::runtime_error(
        std::string("fractional algebra cannot be presented at the origin: ") +
        e.what());
  }
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass:
      return "PASS";
    case ReportStatus::HypothesesNotMet:
      return "HYPOTHESES_NOT_MET";
    case ReportStatus::Fail:
      return "FAIL";
  }
  return "";
}

void VerificationReport::finalize() {
  for (const CheckItem& h : hypotheses) {
    if (!h.ok()) {
      status = ReportStatus::HypothesesNotMet;
      return;
    }
  }
  for (const CheckItem& c : conclusions) {
    if (c.state == CheckState::NotSatisfied) {
      status = ReportStatus::Fail;
      return;
    }
  }
  status = ReportStatus::Pass;
}

namespace {
const char* state_mark(CheckState s) {
  switch (s) {
    case CheckState::Satisfied:
      return "ok";
    case CheckState::NotSatisfied:
      return "FAILED";
    case CheckState::Unverifiable:
      return "unverifiable";
    case CheckState::NotApplicable:
      return "n/a";
  }
  return "";
}
}  // namespace

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "verify " << theorem << ": " << to_string(status) << "\n";
  os << "  hypotheses:\n";
  for (const CheckItem& h : hypotheses) {
    os << "    [" << state_mark(h.state) << "] " << h.name;
    if (!h.detail.empty()) os << " — " << h.detail;
    os << "\n";
  }
  os << "  conclusions:\n";
  for (const CheckItem& c : conclusions) {
    os << "    [" << state_mark(c.state) << "] " << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  if (!witnesses.empty()) {
    os << "  witnesses:\n";
    for (const std::string& w : witnesses) os << "    " << w << "\n";
  }
  for (const std::string& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string VerificationReport::json() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["status"] = to_string(status);
  auto items = [](const std::vector<CheckItem>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckItem& c : v) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["satisfied"] = c.ok();
      std::string detail = c.detail;
      if (c.state == CheckState::Unverifiable)
        detail = detail.empty() ? "unverifiable" : "unverifiable: " + detail;
      if (c.state == CheckState::NotApplicable)
        detail = detail.empty() ? "not applicable" : detail;
      e["detail"] = detail;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["hypotheses"] = items(hypotheses);
  j["conclusions"] = items(conclusions);
  j["witnesses"] = witnesses;
  j["notes"] = notes;
  return j.dump(2);
}

VerificationReport verify_theorem_main(const FPModule& M, std::uint64_t seed) {
  VerificationReport rep;
  rep.theorem = "main";
  rep.notes.push_back(kScopeNote);
  bool refl = is_reflexive(M);
  bool faith = is_faithful(M);
  rep.hypotheses.push_back(item("module is reflexive", refl));
  rep.hypotheses.push_back(
      item("module is faithful", faith,
           faith ? "" : "annihilator " + annihilator(M).str()));
  if (!refl || !faith) {
    skip_conclusions(rep, {"sigma lands in the center",
                           "descent lands in End of the trace ideal",
                           "sigma then descent fixes fractions",
                           "descent then sigma fixes central endomorphisms"});
    rep.finalize();
    return rep;
  }

  try {
    TraceData td = trace_data(M);
    FractionalIdeal C = fractional_end(td.tau, seed);
    NzdWitness x = find_nonzerodivisor(td.tau, seed);
    CenterData cd = center_of_end(M);
    std::vector<ModuleHomomorphism> gens = decode_all(cd.algebra.hom);

    bool central_ok = true, roundtrip_frac_ok = true;
    for (const RingElement& a : C.numerator.gens()) {
      if (a.is_zero()) continue;
      Fraction q{a, C.denominator};
      ModuleHomomorphism sigma = sigma_embed(M, q);
      for (const ModuleHomomorphism& g : gens) {
        if (!sigma.commutes_with(g)) {
          central_ok = false;
          rep.witnesses.push_back("fraction " + q.str() +
                                  " embeds to a non-central endomorphism " +
                                  sigma.matrix().str());
        }
      }
      Fraction back = center_descend(td, sigma, x, gens);
      if (!fraction_equal(back, q)) {
        roundtrip_frac_ok = false;
        rep.witnesses.push_back("fraction " + q.str() + " descends to " +
                                back.str());
      }
    }
    rep.conclusions.push_back(item("sigma lands in the center", central_ok));
    rep.conclusions.push_back(
        item("sigma then descent fixes fractions", roundtrip_frac_ok));

    bool descend_ok = true, roundtrip_hom_ok = true;
    for (const ModuleHomomorphism& f : cd.generators) {
      Fraction qf = center_descend(td, f, x, gens);
      if (!C.contains_fraction(qf.num, qf.den)) {
        descend_ok = false;
        rep.witnesses.push_back("central endomorphism " + f.matrix().str() +
                                " descends outside End of the trace ideal: " +
                                qf.str());
      }
      if (!sigma_embed(M, qf).equals(f)) {
        roundtrip_hom_ok = false;
        rep.witnesses.push_back("descent then sigma moved " +
                                f.matrix().str());
      }
    }
    rep.conclusions.push_back(
        item("descent lands in End of the trace ideal", descend_ok));
    rep.conclusions.push_back(
        item("descent then sigma fixes central endomorphisms",
             roundtrip_hom_ok));
  } catch (const std::exception& e) {
    rep.conclusions.push_back(item("engine consistency", false, e.what()));
    rep.witnesses.push_back(e.what());
  }
  rep.finalize();
  return rep;
}

VerificationReport verify_theorem_main2(const FPModule& M, std::uint64_t seed) {
  VerificationReport rep;
  rep.theorem = "main2";
  rep.notes.push_back(kScopeNote);
  TraceData td = trace_data(M);
  bool pos = positive_grade(td.tau);
  rep.hypotheses.push_back(
      item("trace ideal has positive grade", pos,
           "trace ideal " + td.tau.str()));
  if (!pos) {
    skip_conclusions(rep, {"rho lands in the center of End of the dual",
                           "rho round-trips with the descent",
                           "End of the trace ideals of M and its dual agree"});
    rep.finalize();
    return rep;
  }

  try {
    FractionalIdeal CE = fractional_end(td.tau, seed);
    const FPModule& H = td.dual_mod.module();
    TraceData tdH = trace_data(H);
    CenterData cdH = center_of_end(H);
    std::vector<ModuleHomomorphism> gensH = decode_all(cdH.algebra.hom);
    NzdWitness xH = find_nonzerodivisor(tdH.tau, seed);

    bool central_ok = true, round_ok = true;
    for (const RingElement& a : CE.numerator.gens()) {
      if (a.is_zero()) continue;
      Fraction q{a, CE.denominator};
      ModuleHomomorphism rho = rho_embed(td, q);
      for (const ModuleHomomorphism& g : gensH) {
        if (!rho.commutes_with(g)) {
          central_ok = false;
          rep.witnesses.push_back("fraction " + q.str() +
                                  " acts non-centrally on the dual");
        }
      }
      Fraction back = center_descend(tdH, rho, xH, gensH);
      if (!fraction_equal(back, q)) {
        round_ok = false;
        rep.witnesses.push_back("fraction " + q.str() + " descends to " +
                                back.str());
      }
    }
    for (const ModuleHomomorphism& f : cdH.generators) {
      Fraction qf = center_descend(tdH, f, xH, gensH);
      if (!CE.contains_fraction(qf.num, qf.den)) {
        round_ok = false;
        rep.witnesses.push_back(
            "central endomorphism of the dual descends outside End of the "
            "trace ideal: " + qf.str());
      } else if (!rho_embed(td, qf).equals(f)) {
        round_ok = false;
        rep.witnesses.push_back("descent then rho moved " + f.matrix().str());
      }
    }
    rep.conclusions.push_back(
        item("rho lands in the center of End of the dual", central_ok));
    rep.conclusions.push_back(
        item("rho round-trips with the descent", round_ok));

    FractionalIdeal CEdual = fractional_end(tdH.tau, seed);
    rep.conclusions.push_back(
        item("End of the trace ideals of M and its dual agree",
             fractional_equal(CE, CEdual),
             CE.str() + " vs " + CEdual.str()));
  } catch (const std::exception& e) {
    rep.conclusions.push_back(item("engine consistency", false, e.what()));
    rep.witnesses.push_back(e.what());
  }
  rep.finalize();
  return rep;
}

VerificationReport verify_trace_properties(const FPModule& M,
                                           const FPModule& N,
                                           std::uint64_t seed) {
  VerificationReport rep;
  rep.theorem = "trace-props";
  rep.notes.push_back(kScopeNote);
  const AmbientRingPtr& R = M.ring();

  try {
    TraceData td = trace_data(M);
    const Ideal& tauM = td.tau;
    bool refl = is_reflexive(M);

    // (i) generation reverses trace inclusion.
    if (generates(M, N)) {
      Ideal tauN = trace_ideal(N);
      rep.conclusions.push_back(item("generation reverses trace inclusion",
                                     tauM.contains_ideal(tauN),
                                     "trace of generated module " + tauN.str() +
                                         " inside " + tauM.str()));
    } else {
      rep.conclusions.push_back(na("generation reverses trace inclusion",
                                   "second module is not generated by the first"));
    }

    // (ii) additivity over direct sums.
    Ideal tauN = trace_ideal(N);
    Ideal tauSum = trace_ideal(direct_sum(M, N));
    rep.conclusions.push_back(item("trace is additive over direct sums",
                                   tauSum.equals(ideal_sum(tauM, tauN)),
                                   tauSum.str()));

    // (iv) idempotence on trace ideals.
    Ideal tauTau = trace_ideal(FPModule::from_ideal(tauM));
    rep.conclusions.push_back(item("trace ideals are trace-idempotent",
                                   tauTau.equals(tauM), tauTau.str()));

    // (v) tensor with the dual, and the dual inclusion.
    Ideal tauTensor = trace_ideal(tensor(M, td.dual_mod.module()));
    Ideal tauDual = trace_ideal(td.dual_mod.module());
    bool v_ok = tauTensor.equals(tauM) && tauDual.contains_ideal(tauM);
    if (refl) v_ok = v_ok && tauDual.equals(tauM);
    rep.conclusions.push_back(
        item("trace of the self-tensor and of the dual", v_ok,
             "tensor " + tauTensor.str() + ", dual " + tauDual.str()));

    // (vi) the dual and End of a trace ideal agree.
    if (positive_grade(tauM)) {
      FractionalIdeal fd = fractional_dual(tauM, seed);
      FractionalIdeal fe = fractional_end(tauM, seed);
      rep.conclusions.push_back(item("dual of the trace ideal equals its End",
                                     fractional_equal(fd, fe),
                                     fd.str() + " vs " + fe.str()));
    } else {
      rep.conclusions.push_back(na("dual of the trace ideal equals its End",
                                   "trace ideal has grade zero"));
    }

    // (vii) annihilators agree for reflexive modules.
    if (refl) {
      Ideal annT = annihilator(FPModule::from_ideal(tauM));
      Ideal annM = annihilator(M);
      bool ok = annT.equals(annM);
      if (annM.is_zero()) ok = ok && positive_grade(tauM);
      rep.conclusions.push_back(
          item("annihilator of the trace ideal matches", ok,
               annT.str() + " vs " + annM.str()));
    } else {
      rep.conclusions.push_back(na("annihilator of the trace ideal matches",
                                   "module is not reflexive"));
    }

    // (viii) flat extension by a fresh variable.
    AmbientRingPtr Rt = adjoin_variable(R, "t");
    FPModule Mt =
        FPModule::from_presentation(Rt, extend_matrix(M.presentation(), Rt));
    Ideal tauExt = trace_ideal(Mt);
    rep.conclusions.push_back(item("trace commutes with the flat extension",
                                   tauExt.equals(extend_ideal(tauM, Rt)),
                                   tauExt.str()));
  } catch (const std::exception& e) {
    rep.conclusions.push_back(item("engine consistency", false, e.what()));
    rep.witnesses.push_back(e.what());
  }
  for (const CheckItem& c : rep.conclusions)
    if (c.state == CheckState::NotSatisfied) rep.witnesses.push_back(c.detail);
  rep.finalize();
  return rep;
}

VerificationReport verify_free_summand_theorems(const FPModule& M,
                                                std::uint64_t seed) {
  VerificationReport rep;
  rep.theorem = "free-summand";
  rep.notes.push_back(kScopeNote);
  int d = depth(M.ring());
  bool refl = is_reflexive(M);
  rep.hypotheses.push_back(item("ring has depth at most one", d <= 1,
                                "depth " + std::to_string(d)));
  rep.hypotheses.push_back(item("module is reflexive", refl));
  if (d > 1 || !refl) {
    skip_conclusions(rep, {"free summand of End descends to the module",
                           "balanced iff free summand",
                           "trivial dual of the trace ideal forces the unit",
                           "unit trace forces balanced"});
    rep.finalize();
    return rep;
  }

  try {
    bool fsM = has_free_summand(M);
    FPModule E = hom_module(M, M).module();
    bool fsE = has_free_summand(E);
    rep.conclusions.push_back(
        fsE ? item("free summand of End descends to the module", fsM,
                   "End has a free summand")
            : item("free summand of End descends to the module", true,
                   "End has no free summand; implication is vacuous"));

    bool bal = is_balanced(M);
    rep.conclusions.push_back(item(
        "balanced iff free summand", bal == fsM,
        std::string("balanced=") + (bal ? "true" : "false") +
            ", free summand=" + (fsM ? "true" : "false")));

    Ideal tau = trace_ideal(M);
    if (positive_grade(tau)) {
      FractionalIdeal fd = fractional_dual(tau, seed);
      bool dual_trivial =
          fractional_equal(fd, FractionalIdeal::whole_ring(M.ring()));
      rep.conclusions.push_back(
          dual_trivial
              ? item("trivial dual of the trace ideal forces the unit",
                     tau.contains_one(), "dual is the whole ring")
              : item("trivial dual of the trace ideal forces the unit", true,
                     "dual " + fd.str() + " is not the whole ring; vacuous"));
    } else {
      rep.conclusions.push_back(
          na("trivial dual of the trace ideal forces the unit",
             "trace ideal has grade zero"));
    }

    rep.conclusions.push_back(
        tau.contains_one()
            ? item("unit trace forces balanced", bal, "trace ideal is the unit")
            : item("unit trace forces balanced", true,
                   "trace ideal " + tau.str() + " is proper; vacuous"));
  } catch (const std::exception& e) {
    rep.conclusions.push_back(item("engine consistency", false, e.what()));
    rep.witnesses.push_back(e.what());
  }
  for (const CheckItem& c : rep.conclusions)
    if (c.state == CheckState::NotSatisfied) rep.witnesses.push_back(c.detail);
  rep.finalize();
  return rep;
}

VerificationReport verify_rigidity_theorem(const FPModule& M,
                                           std::uint64_t seed) {
  VerificationReport rep;
  rep.theorem = "rigidity";
  rep.notes.push_back(kScopeNote);
  const AmbientRingPtr& R = M.ring();

  rep.hypotheses.push_back(item("ring is one-dimensional",
                                R->krull_dimension() == 1,
                                "dim " + std::to_string(R->krull_dimension())));
  rep.hypotheses.push_back(item("ring is Gorenstein", is_gorenstein(R)));

  bool zero = M.is_zero_module();
  if (R->is_domain()) {
    bool tf = !zero && evaluation_map(M).kernel_is_zero();
    rep.hypotheses.push_back(item("module is nonzero and torsionfree", tf));
  } else {
    rep.hypotheses.push_back({"module is nonzero and torsionfree",
                              CheckState::Unverifiable,
                              "torsion requires a catalog domain"});
  }
  bool faith = !zero && is_faithful(M);
  rep.hypotheses.push_back(item("module is faithful", faith));
  bool rigid = is_rigid(M);
  rep.hypotheses.push_back(item("module is rigid", rigid));

  bool center_gor = false;
  std::string center_detail;
  try {
    Ideal tau = trace_ideal(M);
    FractionalIdeal C = fractional_end(tau, seed);
    AmbientRingPtr Z = ring_presentation_of_fractional(C);
    center_gor = is_gorenstein(Z);
    center_detail = "center presented as " + Z->name();
  } catch (const std::exception& e) {
    center_detail = e.what();
  }
  rep.hypotheses.push_back(
      item("center of End is Gorenstein", center_gor, center_detail));

  bool hyps = true;
  for (const CheckItem& h : rep.hypotheses) hyps = hyps && h.ok();
  if (!hyps) {
    skip_conclusions(rep, {"module has a free summand",
                           "rigidity forces a maximal Cohen-Macaulay "
                           "self-tensor"});
    rep.finalize();
    return rep;
  }

  try {
    bool fs = has_free_summand(M);
    rep.conclusions.push_back(item("module has a free summand", fs,
                                   "trace ideal " + trace_ideal(M).str()));
    if (!fs) rep.witnesses.push_back("trace ideal " + trace_ideal(M).str());

    if (rigid && depth_module(M) == 1) {
      FPModule T = tensor(M, dual(M).module());
      if (T.is_zero_module()) {
        rep.conclusions.push_back(
            na("rigidity forces a maximal Cohen-Macaulay self-tensor",
               "self-tensor is zero"));
      } else {
        rep.conclusions.push_back(
            item("rigidity forces a maximal Cohen-Macaulay self-tensor",
                 depth_module(T) == 1));
      }
    } else {
      rep.conclusions.push_back(
          na("rigidity forces a maximal Cohen-Macaulay self-tensor",
             "module is not a depth-one rigid module"));
    }
  } catch (const std::exception& e) {
    rep.conclusions.push_back(item("engine consistency", false, e.what()));
    rep.witnesses.push_back(e.what());
  }
  rep.finalize();
  return rep;
}

VerificationReport hw_trace_check(const Ideal& I, std::uint64_t seed) {
  (void)seed;
  VerificationReport rep;
  rep.theorem = "hw";
  rep.notes.push_back(kScopeNote);
  const AmbientRingPtr& R = I.ring();
  rep.hypotheses.push_back(item("ring is a catalog domain", R->is_domain()));
  rep.hypotheses.push_back(item("ring is one-dimensional",
                                R->krull_dimension() == 1));
  rep.hypotheses.push_back(item("ring is Gorenstein", is_gorenstein(R)));
  bool hyps = true;
  for (const CheckItem& h : rep.hypotheses) hyps = hyps && h.ok();
  if (!hyps) {
    skip_conclusions(rep, {"self-tensor of the trace ideal has torsion"});
    rep.finalize();
    return rep;
  }

  try {
    Ideal tau = trace_ideal(FPModule::from_ideal(I));
    if (tau.contains_one()) {
      rep.conclusions.push_back(
          item("self-tensor of the trace ideal has torsion", true,
               "vacuous: trace ideal is the unit ideal, the module has a "
               "free summand"));
    } else {
      FPModule T = FPModule::from_ideal(tau);
      FPModule tens = tensor(T, dual(T).module());
      FPModule tors = torsion_submodule(tens);
      bool nonzero = !tors.is_zero_module();
      rep.conclusions.push_back(
          item("self-tensor of the trace ideal has torsion", nonzero,
               "trace ideal " + tau.str()));
      if (nonzero) {
        rep.witnesses.push_back(
            "torsion submodule with " +
            std::to_string(tors.gen_count()) + " generators inside the "
            "self-tensor of " + tau.str());
      } else {
        rep.witnesses.push_back("torsion-free self-tensor of " + tau.str());
      }
    }
  } catch (const std::exception& e) {
    rep.conclusions.push_back(item("engine consistency", false, e.what()));
    rep.witnesses.push_back(e.what());
  }
  rep.finalize();
  return rep;
}

}  // namespace tracekit
