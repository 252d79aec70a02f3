#pragma once

namespace finlog {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace finlog
