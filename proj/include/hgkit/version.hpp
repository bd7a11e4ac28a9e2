#pragma once

namespace hgkit {
inline constexpr const char* kVersion = "0.1.0";
}
