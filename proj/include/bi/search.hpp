#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace bi {

struct SearchLimits {
  int depth = 12;
  int contractions = 2;
};

struct SearchStats {
  std::uint64_t nodes = 0;       // sequents expanded
  std::uint64_t decisions = 0;   // committed choice-point alternatives
  std::uint64_t backtracks = 0;  // alternatives abandoned after failure
  std::size_t maxDepth = 0;
  double wallMs = 0.0;
};

enum class SearchStatus { Proved, Refuted, Exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Proved: return "proved";
    case SearchStatus::Refuted: return "refuted";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "?";
}

}  // namespace bi
