#pragma once

namespace mfring {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mfring
