#pragma once

namespace circflow {

inline constexpr const char* kToolVersion = "circflow 0.1.0";

}  // namespace circflow
