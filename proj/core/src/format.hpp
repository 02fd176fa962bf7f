#pragma once

#include <cstdio>
#include <string>

namespace kantichain::detail {

inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace kantichain::detail
