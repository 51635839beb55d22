#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cosetfs {

/// Thrown when an instance exceeds a configured enumeration budget.
/// Callers that want a bigger budget pass an explicit cap; the defaults
/// guard against accidentally feeding in instances that are too large
/// for exhaustive methods.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::size_t group_cap = 50000;            // max enumerated group order
  std::size_t ambient_cap = 1000000;        // max |X|^2 * |G| symbol universe
  std::size_t action_table_cap = 10000000;  // dense action table threshold |G|*|X|
  long long nu_budget = 20736;              // max dim(M)^r for tensor-power traces

  static Config& global() {
    static Config c;
    return c;
  }
};

/// COSET_INDICATOR_CAP overrides the ambient cap (symbol universe size).
inline void apply_env_caps(Config& c) {
  if (const char* s = std::getenv("COSET_INDICATOR_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) c.ambient_cap = static_cast<std::size_t>(v);
  }
}

}  // namespace cosetfs
