#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropvis {

// Runs one subcommand. The JSON report goes to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 usage or parse error, 2 domain error.
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::string& stdin_text = {});

}  // namespace tropvis
