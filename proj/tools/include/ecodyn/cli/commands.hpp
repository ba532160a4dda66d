#pragma once

#include <cstddef>
#include <vector>

#include "ecodyn/cli/params.hpp"

namespace ecodyn::cli {

/// All commands, in help order. `default_steps` seeds every `steps` key.
std::vector<CommandSpec> command_table(std::size_t default_steps);

}  // namespace ecodyn::cli
