#pragma once

namespace qpr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qpr
