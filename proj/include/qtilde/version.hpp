#pragma once

namespace qtilde {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qtilde
