#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

// Floor of an enclosure is not determined at the current precision.
// Callers escalate bits and retry; certified_floor() does this automatically.
struct NeedsMorePrecision : std::runtime_error {
  explicit NeedsMorePrecision(const std::string& what) : std::runtime_error(what) {}
};

// Escalation passed the configured hard cap. All floored quantities here are
// irrational multiples, so hitting the cap indicates a bug, not bad luck.
struct PrecisionCapExceeded : std::runtime_error {
  explicit PrecisionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A finite construction was asked for an n whose prime range is empty.
struct RangeEmpty : std::runtime_error {
  explicit RangeEmpty(const std::string& what) : std::runtime_error(what) {}
};

// An alpha grid too coarse to resolve the congruence event it is measuring.
struct ResolutionTooCoarse : std::runtime_error {
  explicit ResolutionTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sidon
