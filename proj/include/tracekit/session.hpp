#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tracekit {

struct SessionError : std::runtime_error {
  int line, col;
  SessionError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
};

struct SessionOptions {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  // Set from TRACEKIT_PRIME; wins over the modulus named in ring statements.
  std::optional<std::uint32_t> prime_override;
};

struct SessionResult {
  std::string output;
  // 0 = all answers produced / PASS; 2 = hypotheses-not-met present;
  // 3 = FAIL present; 1 = error.
  int exit_code = 0;
};

// Parses and runs a batch script. Statements are ;-terminated, one per line,
// with # comments:
//
//   ring R = F32003[x,y] / (x*y);            (optional trailing `domain`)
//   ideal I = (x, y) over R;
//   module M = coker [[-z,-y,x^2],[y,x,-z]] over R;
//   module MI = ideal I;   module F = free 2 over R;
//   module D = dual M;     module T = tensor M D;   module S = sum M D;
//   let f = hom M M [[0,x],[1,0]];
//   trace M;  dual M;  hom M N;  end M;  center M;
//   grade I;  depth R;  dim R;  ext 1 M M;  resolve M 4;
//   is-reflexive M;  is-rigid M;  is-balanced M;  has-free-summand M;
//   gorenstein R;
//   verify main M;  verify main2 M;  verify trace-props M N;
//   verify free-summand M;  verify rigidity M;  verify hw I;
//   report;
SessionResult run_session(const std::string& text, const SessionOptions& opts);

}  // namespace tracekit
