#pragma once

namespace censtail {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace censtail
