#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tracekit/catalog.hpp"
#include "tracekit/session.hpp"

using namespace tracekit;

namespace {
SessionOptions opts_default;
}

TEST_CASE("the monomial curve script reproduces the trace ideal") {
  std::string script = R"(
# the monomial curve ring and the explicit presentation
ring S = F32003[x,y,z] / (y^2-x*z, x^2*y-z^2, x^3-y*z) domain;
module M = coker [[-z,-y,x^2],[y,x,-z]] over S;
trace M;
)";
  SessionResult r = run_session(script, opts_default);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(x, y, z)\n");
}

TEST_CASE("ext and resolution commands over the two-lines ring") {
  std::string script = R"(
ring R = F32003[x,y] / (x*y);
ideal I = (x) over R;
module M = coker [[x]] over R;
ext 1 M M;
resolve M 4;
grade I;
depth R;
dim R;
gorenstein R;
is-rigid M;
is-balanced M;
)";
  SessionResult r = run_session(script, opts_default);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0\n") == 0);
  CHECK(r.output.find("ranks: 1 1 1 1 1") != std::string::npos);
  CHECK(r.output.find("d2 = [[y]]") != std::string::npos);
  CHECK(r.output.find("d4 = [[y]]") != std::string::npos);
  CHECK(r.output.find("\ntrue\nfalse\n") != std::string::npos);
}

TEST_CASE("ideal-as-module and derived module forms") {
  std::string script = R"(
ring R = F32003[x,y] / (y^2-x^3) domain;
ideal m = (x, y) over R;
module M = ideal m;
module D = dual M;
module T = tensor M D;
module S = sum M D;
module F = free 2 over R;
dual M;
trace T;
has-free-summand F;
verify main M;
)";
  SessionResult r = run_session(script, opts_default);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dual: 2 generator(s)") != std::string::npos);
  CHECK(r.output.find("verify main: PASS") != std::string::npos);
}

TEST_CASE("exit code 2 on hypotheses-not-met") {
  std::string script = R"(
ring R = F32003[x,y] / (y^2-x^3) domain;
ideal m = (x, y) over R;
module M = ideal m;
verify rigidity M;
report;
)";
  SessionResult r = run_session(script, opts_default);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("HYPOTHESES_NOT_MET") != std::string::npos);
  CHECK(r.output.find("reports: 0 pass, 1 hypotheses-not-met, 0 fail") !=
        std::string::npos);
}

TEST_CASE("structured parse errors carry positions") {
  SessionResult bad1 = run_session("ring R = F32003[x,y];\ntrace M;\n",
                                   opts_default);
  CHECK(bad1.exit_code == 1);
  CHECK(bad1.output.find("unknown module 'M'") != std::string::npos);
  CHECK(bad1.output.find("line 2") != std::string::npos);

  SessionResult bad2 = run_session(
      "ring R = F32003[x,y];\nideal I = (x + w) over R;\n", opts_default);
  CHECK(bad2.exit_code == 1);
  CHECK(bad2.output.find("unknown variable 'w'") != std::string::npos);

  SessionResult bad3 = run_session(
      "ring R = F32003[x,y];\nideal R = (x) over R;\n", opts_default);
  CHECK(bad3.exit_code == 1);
  CHECK(bad3.output.find("duplicate name 'R'") != std::string::npos);
}

TEST_CASE("homomorphisms by matrix respect the lifting condition") {
  std::string good = R"(
ring R = F32003[x,y] / (y^2-x^3) domain;
ideal m = (x, y) over R;
module M = ideal m;
let f = hom M M [[0,x],[1,0]];
)";
  CHECK(run_session(good, opts_default).exit_code == 0);
  std::string bad = R"(
ring R = F32003[x,y] / (y^2-x^3) domain;
ideal m = (x, y) over R;
module M = ideal m;
let f = hom M M [[0,1],[1,0]];
)";
  SessionResult r = run_session(bad, opts_default);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("lifting condition") != std::string::npos);
}

TEST_CASE("JSON report mode emits the stable shape") {
  std::string script = R"(
ring R = F32003[x,y] / (y^2-x^3) domain;
ideal m = (x, y) over R;
module M = ideal m;
verify main M;
)";
  SessionOptions json_opts;
  json_opts.json = true;
  SessionResult r = run_session(script, json_opts);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"theorem\": \"main\"") != std::string::npos);
  CHECK(r.output.find("\"status\": \"PASS\"") != std::string::npos);
}

TEST_CASE("byte-identical output across runs and thread counts") {
  std::string script = R"(
ring R = F32003[x,y] / (x*y);
ideal I = (x, y) over R;
module A = ideal I;
module B = coker [[x]] over R;
trace A;
trace B;
verify trace-props A B;
verify free-summand A;
center A;
end B;
report;
)";
  SessionResult a = run_session(script, opts_default);
  SessionResult b = run_session(script, opts_default);
  CHECK(a.output == b.output);
  CHECK(a.exit_code == b.exit_code);
  SessionOptions threaded;
  threaded.threads = 4;
  SessionResult c = run_session(script, threaded);
  CHECK(c.output == a.output);
  CHECK(c.exit_code == a.exit_code);
}

TEST_CASE("printed ideals re-parse to equal ideals") {
  Catalog cat = make_catalog();
  Ideal m = maximal_ideal(cat.t345);
  std::string printed = m.str();  // "(x, y, z)"
  std::string script = "ring S = F32003[x,y,z] / (y^2-x*z, x^2*y-z^2, "
                       "x^3-y*z) domain;\nideal J = " +
                       printed + " over S;\nmodule M = ideal J;\ntrace M;\n";
  SessionResult r = run_session(script, opts_default);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(x, y, z)\n");
}

TEST_CASE("prime override rewires every ring in the session") {
  SessionOptions o;
  o.prime_override = 101;
  std::string script = R"(
ring S = F32003[x,y,z] / (y^2-x*z, x^2*y-z^2, x^3-y*z) domain;
module M = coker [[-z,-y,x^2],[y,x,-z]] over S;
trace M;
)";
  SessionResult r = run_session(script, o);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(x, y, z)\n");
}
