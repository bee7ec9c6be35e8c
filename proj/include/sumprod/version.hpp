#pragma once

namespace sumprod {

inline constexpr const char* kVersion = "0.1.0";

}
