#pragma once

// The bbq command-line front end, callable in-process for testing.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 carrier capacity exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace bbq {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bbq
