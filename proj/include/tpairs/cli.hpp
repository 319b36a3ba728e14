#pragma once

// Command-line front end. Reports go to `out` as JSON with sorted keys; a
// one-line summary and the timing go to `err`.
//
// Exit codes: 0 computed or holds, 1 fails or not found, 2 input error,
// 3 bound exhausted (unknown).

#include <ostream>
#include <string>
#include <vector>

namespace tpairs {

enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitInput = 2, kExitUnknown = 3 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpairs
