// SPDX-License-Identifier: Apache-2.0

#ifndef BDMA_TOOLS_CLI_HPP
#define BDMA_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bdma::cli
{
    // Runs the simulator with command-line arguments (without the program name).
    // Returns 0 on success, 1 on runtime or I/O failure, 2 on usage or configuration errors.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
