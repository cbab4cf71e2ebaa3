#pragma once

#include <string_view>

namespace cyclophi {

inline constexpr std::string_view kVersion = "0.1.0";

// Recorded in census manifests; bump when a change could alter scan output.
inline constexpr std::string_view kEngineVersion = "cyclophi-series/0.1.0";

}  // namespace cyclophi
