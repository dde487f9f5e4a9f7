#pragma once

namespace gispec {
inline constexpr const char* kVersion = "0.1.0";
}
