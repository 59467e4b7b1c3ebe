#pragma once

#include <cstdint>

namespace belyi {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

}  // namespace belyi
