#pragma once

#include <cstdlib>
#include <filesystem>

#include "zc/zero_finder.hpp"

namespace testsupport {

// Zero table reaching `height`: the file named by ZC_TEST_TABLE when it is
// tall enough, otherwise computed once per process.
inline const zc::ZeroTable& table(double height) {
  static zc::ZeroTable cached;
  if (cached.max_height >= height) return cached;
  if (const char* p = std::getenv("ZC_TEST_TABLE"); p && std::filesystem::exists(p)) {
    zc::ZeroTable t = zc::load_table(p);
    if (t.max_height >= height) {
      cached = std::move(t);
      return cached;
    }
  }
  cached = zc::find_zeros_up_to(height);
  return cached;
}

}  // namespace testsupport
