#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sandpoly {

enum class Errc {
  invalid_argument,
  not_monotone,
  paths_cross,
  not_recurrent,
  not_minanz,
  invalid_matrix,
  not_upper_triangular,
  not_interval_order,
  vertex_not_toppled,
  not_in_domain,
  not_sorted,
  resource_limit,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::paths_cross: return "PathsCross";
    case Errc::not_recurrent: return "NotRecurrent";
    case Errc::not_minanz: return "NotMinanz";
    case Errc::invalid_matrix: return "InvalidMatrix";
    case Errc::not_upper_triangular: return "NotUpperTriangular";
    case Errc::not_interval_order: return "NotIntervalOrder";
    case Errc::vertex_not_toppled: return "VertexNotToppled";
    case Errc::not_in_domain: return "NotInDomain";
    case Errc::not_sorted: return "NotSorted";
    case Errc::resource_limit: return "ResourceLimit";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sandpoly
