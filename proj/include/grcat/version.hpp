#pragma once

namespace grcat {

inline constexpr const char* kToolName = "grcat";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace grcat
