#pragma once

namespace curvekit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace curvekit
