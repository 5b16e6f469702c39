#pragma once

namespace qca {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qca
