#pragma once

namespace helixforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace helixforge
