#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphsig::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 on usage or input errors and 2 on computation errors; messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace graphsig::cli
