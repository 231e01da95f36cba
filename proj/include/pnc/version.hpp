#pragma once

namespace pnc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pnc
