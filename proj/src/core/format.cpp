#include "core/format.hpp"

#include <cmath>
#include <cstdio>

namespace vaidman {

std::string g12(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace vaidman
