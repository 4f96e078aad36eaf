#pragma once

#include <string>

namespace vaidman {

// Fixed 12-significant-digit decimal rendering used by every CSV and report
// writer, so outputs are byte-stable across runs and platforms.
std::string g12(double v);

}  // namespace vaidman
