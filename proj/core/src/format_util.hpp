#pragma once

#include <cstdio>
#include <string>

namespace orthent::detail {

/// %.17g — enough digits that parsing the text recovers the exact double.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace orthent::detail
