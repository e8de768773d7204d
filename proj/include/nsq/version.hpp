#pragma once

namespace nsq {

inline constexpr const char* kToolName = "nsqueeze";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace nsq
