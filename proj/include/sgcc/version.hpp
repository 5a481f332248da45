#pragma once

namespace sgcc {
inline constexpr const char* kVersion = "0.1.0";
}
