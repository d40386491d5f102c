#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvv {

// Runs the mvvol command line. Returns the process exit code:
//   0 success, 2 usage error, 3 domain error, 4 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mvv
