#pragma once

#include <string>
#include <vector>

namespace arxdw::cli {

// Entry point behind the arxdw binary. Returns 0 on success, 2 on argument
// errors, 1 on runtime failures.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace arxdw::cli
