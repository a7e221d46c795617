#pragma once

namespace taxalign {

inline constexpr const char* kToolName = "taxalign";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace taxalign
