#pragma once

#include <filesystem>
#include <string>

namespace chowpow {

// Resolves the bundled data directory: the PLETH_DATA_DIR environment
// variable wins, otherwise the compiled-in default (the source tree's data/
// directory, or the installed share/ directory).
std::filesystem::path data_dir();

std::filesystem::path data_file(const std::string& name);

}  // namespace chowpow
