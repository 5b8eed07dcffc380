#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sftcross {

// Dispatches one invocation: analyze, measure, verify, eval, quotient,
// grandeh. Reports go to `out`, diagnostics to `err`. Returns 0 on success,
// 1 when a verification fails, an equality is refuted, or a search comes up
// empty, and 2 on input errors. Output is byte-identical for fixed inputs
// and seed.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace sftcross
