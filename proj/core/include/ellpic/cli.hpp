#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellpic {

/// Entry point behind the `ellpic` binary. Exit codes: 0 verified success,
/// 1 mathematical check failure, 2 usage error, 3 budget exhaustion.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellpic
