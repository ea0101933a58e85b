#pragma once

namespace gwql {

// Bumping this invalidates every on-disk cache entry.
inline constexpr const char* kEngineVersion = "gwql-0.1.0";

}  // namespace gwql
