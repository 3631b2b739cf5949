#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbinterp {

enum class ErrorCode {
  index_out_of_range,
  singular_nodes,      // duplicate interpolation nodes
  node_out_of_range,   // node outside [0,1]
  singular_formula,    // closed form evaluated at a boundary node
  geometry,            // degenerate triangle, line misses or grazes the triangle
  partition,           // node groups violate the collinear-group layout
  condition_s,         // node lies on an earlier line during the 2D solve
  singular_matrix,
  numerical,           // iteration failed to converge
  undefined_metric,
  resource,
  parse,
  validation,
};

/// Stable machine-readable name, used in CLI error objects.
std::string_view error_code_name(ErrorCode code) noexcept;

/// Process exit code associated with an error category (2, 3 or 4).
int exit_code_for(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bbinterp
