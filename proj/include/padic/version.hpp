#pragma once

namespace padic {

inline constexpr const char* kToolName = "padic-welch";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace padic
