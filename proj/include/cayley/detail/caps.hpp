#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace cayley::detail {

// CAYLEY_GREEDY_CAP, when set to a positive integer, replaces every size cap.
inline std::size_t cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("CAYLEY_GREEDY_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used == std::string(raw).size() && value > 0) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  return fallback;
}

}  // namespace cayley::detail
