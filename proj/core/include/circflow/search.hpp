#pragma once

#include <cstdint>
#include <optional>

namespace circflow {

/// Three-valued search outcome. Budget exhaustion is reported as unknown and
/// is never folded into no.
enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

/// Node-count limit plus optional wall-clock limit for backtracking searches.
struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  std::optional<double> max_seconds;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;  // informational; excluded from deterministic output
};

}  // namespace circflow
