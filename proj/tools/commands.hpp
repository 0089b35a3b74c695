#pragma once

#include <memory>
#include <vector>

#include "cli_support.hpp"

namespace ppsim::cli {

std::vector<std::unique_ptr<Command>> make_commands(CLI::App& app);

}  // namespace ppsim::cli
