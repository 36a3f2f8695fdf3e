#pragma once

namespace turanlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace turanlab
