#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clumpstat {

// Command dispatch behind the clumpstat binary. Returns the process exit
// code: 0 success, 1 verify mismatch, 2 parse error (with line/column on
// stderr), 3 validation or budget error, 4 internal arithmetic error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace clumpstat
