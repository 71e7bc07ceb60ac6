#pragma once

namespace unispecht {

inline constexpr const char* kEngineVersion = "unispecht 1.0.0";
inline constexpr const char* kFormatVersion = "1";

} // namespace unispecht
