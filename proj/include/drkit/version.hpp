#pragma once

namespace drkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace drkit
