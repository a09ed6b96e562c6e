// version.hpp

#pragma once

namespace qme {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qme
