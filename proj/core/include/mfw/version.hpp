#pragma once

namespace mfw {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mfw
