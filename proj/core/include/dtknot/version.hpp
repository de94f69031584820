#pragma once

namespace dtknot {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dtknot
