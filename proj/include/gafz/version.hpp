#pragma once

namespace gafz {

inline constexpr const char* kToolName = "gafzeros";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gafz
