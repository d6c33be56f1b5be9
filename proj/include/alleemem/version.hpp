#pragma once

namespace alleemem {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace alleemem
