#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "sandpoly/combinatorics.hpp"
#include "sandpoly/error.hpp"

namespace sandpoly {

/// Caps on exhaustive work. Enumerations refuse to start when the number of
/// objects they would produce exceeds max_objects.
struct Limits {
  std::uint64_t max_objects = 100'000'000;
  int max_transfer_width = 12;

  /// Defaults, with SANDPILE_MAX_OBJECTS overriding the object cap.
  static Limits from_env() {
    Limits l;
    if (const char* v = std::getenv("SANDPILE_MAX_OBJECTS")) {
      char* end = nullptr;
      unsigned long long cap = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && cap >= 1) l.max_objects = cap;
    }
    return l;
  }

  void require(const BigInt& count, const std::string& what) const {
    if (count > max_objects) {
      throw Error(Errc::resource_limit,
                  what + " would produce " + count.str() + " objects (cap " +
                      std::to_string(max_objects) + ")");
    }
  }
};

}  // namespace sandpoly
