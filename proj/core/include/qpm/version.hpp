#pragma once

namespace qpm {

inline constexpr const char* kVersion = "1.0.0";

} // namespace qpm
