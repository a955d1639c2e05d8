#pragma once

namespace sqlab {
inline constexpr const char* kToolName = "squeeze-lab";
inline constexpr const char* kVersion = "0.1.0";
}  // namespace sqlab
