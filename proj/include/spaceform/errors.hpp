#ifndef SPACEFORM_ERRORS_HPP
#define SPACEFORM_ERRORS_HPP

#include <stdexcept>

namespace spaceform {

// Base of all geometric and numeric failures raised by the library.
// The CLI maps subclasses of `error` to exit code 3.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument left the natural domain of a branch function or inverse by
// more than the allowed slack.
class domain_error : public error {
 public:
  using error::error;
};

// Data that no figure realizes: triangle-inequality violations, chains that
// cannot close, correspondences with mismatched distances, areas outside the
// admissible range of a family.
class infeasible_error : public error {
 public:
  using error::error;
};

// Inputs that collapse a figure: coincident or antipodal points, directions
// with vanishing tangent norm.
class degenerate_error : public error {
 public:
  using error::error;
};

// An iteration failed to converge or left an unusably large residual.
class numeric_error : public error {
 public:
  using error::error;
};

// A call shape that is never meaningful: unsupported curvature for an
// operation, malformed argument combinations. The CLI maps this to exit 2.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spaceform

#endif  // SPACEFORM_ERRORS_HPP
