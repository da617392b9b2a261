#pragma once

#include <filesystem>
#include <string>

#include "fincat/io.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return FINCAT_FIXTURE_DIR; }
inline std::filesystem::path path(const std::string& name) { return dir() / name; }
inline fincat::io::LoadedCategory category(const std::string& name) {
  return fincat::io::load_category(path(name));
}

}  // namespace fixtures
