#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motivic {

/// Runs the command-line interface on already-split arguments (without the
/// program name). Deterministic: identical arguments produce byte-identical
/// output. Returns the process exit status: 0 success, 1 domain error
/// (a single `ERROR <CODE>: message` line on err), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic
