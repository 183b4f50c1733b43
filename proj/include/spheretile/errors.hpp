#pragma once

#include <stdexcept>
#include <string>

namespace spheretile {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct degenerate_arc_error : error {
  using error::error;
};
struct infeasible_triangle_error : error {
  using error::error;
};
struct point_at_infinity_error : error {
  using error::error;
};
struct invalid_parameter_error : error {
  using error::error;
};
struct out_of_moduli_error : error {
  using error::error;
};
struct reduction_error : error {
  using error::error;
};
struct degenerate_quadrilateral_error : error {
  using error::error;
};
struct malformed_tiling_error : error {
  using error::error;
};
struct internal_inconsistency_error : error {
  using error::error;
};
struct bound_exceeded_error : error {
  using error::error;
};
struct embedding_failure_error : error {
  using error::error;
};
struct serialization_error : error {
  using error::error;
};
struct render_error : error {
  using error::error;
};

}  // namespace spheretile
