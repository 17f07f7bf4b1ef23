#pragma once

namespace spdc {

inline constexpr const char* kVersion = "spdc-sim 0.1.0";

}  // namespace spdc
