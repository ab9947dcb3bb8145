#pragma once

#include <ostream>

namespace tracekit {

// Runs the built-in catalog checks, printing one PASS/FAIL line per
// criterion. Returns true when every criterion passes.
bool run_acceptance(std::ostream& os);

}  // namespace tracekit
