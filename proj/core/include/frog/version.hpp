#pragma once

namespace frog {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace frog
