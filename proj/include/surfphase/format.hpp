#pragma once

#include <cstdio>
#include <string>

namespace surfphase {

// Fixed numeric formatting for every file the tool writes: 12 significant
// digits, shortest form. Reports and CSVs must be byte-stable across runs,
// so all emitters funnel through this one function.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace surfphase
