#include "chowpow/data_path.hpp"

#include <cstdlib>
#include <stdexcept>

#ifndef CHOWPOW_DATA_DIR
#define CHOWPOW_DATA_DIR ""
#endif
#ifndef CHOWPOW_INSTALL_DATA_DIR
#define CHOWPOW_INSTALL_DATA_DIR ""
#endif

namespace chowpow {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("PLETH_DATA_DIR")) {
    return std::filesystem::path(env);
  }
  for (const char* candidate : {CHOWPOW_DATA_DIR, CHOWPOW_INSTALL_DATA_DIR}) {
    std::filesystem::path p(candidate);
    if (!p.empty() && std::filesystem::exists(p)) return p;
  }
  return std::filesystem::path("data");
}

std::filesystem::path data_file(const std::string& name) {
  std::filesystem::path p = data_dir() / name;
  if (!std::filesystem::exists(p)) {
    throw std::runtime_error("data file not found: " + p.string() +
                             " (set PLETH_DATA_DIR to the data directory)");
  }
  return p;
}

}  // namespace chowpow
