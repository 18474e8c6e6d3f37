#pragma once

namespace bsieve {

inline constexpr const char* version_string = "1.0.0";

}  // namespace bsieve
