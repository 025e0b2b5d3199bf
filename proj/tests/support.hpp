#pragma once

#include <filesystem>
#include <string>

#include "twopro/workspace.hpp"

namespace twopro::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(TWOPRO_FIXTURES) / name;
}

// One workspace per test binary so that hosts are shared between files.
inline Workspace& ws() {
  static Workspace w;
  return w;
}

inline Fin2CatPtr cat2(const std::string& name) { return ws().two_category(fixture(name)); }
inline ProObjectPtr pro(const std::string& name) { return ws().pro_object(fixture(name)); }

}  // namespace twopro::test
