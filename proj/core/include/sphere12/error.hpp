#pragma once

#include <stdexcept>
#include <string>

namespace sphere12 {

/// Base class for library errors that are not plain argument-domain errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A construction hit a geometric degeneracy (zero-norm normalization,
/// tangent at an antipodal pair, ...).
struct degenerate_error : error {
  using error::error;
};

/// Configuration violates the Conf(N) admission invariants (coincident points).
struct invalid_configuration : error {
  using error::error;
};

/// A pair of points is closer than the contact angle minus tolerance.
struct overlap_error : error {
  using error::error;
};

/// A deformation move was requested at a radius where it does not exist.
struct infeasible_move_error : error {
  using error::error;
};

/// Endpoint-to-reference point matching was ambiguous or failed.
struct matching_error : error {
  using error::error;
};

/// A numeric solver failed to converge.
struct numeric_error : error {
  using error::error;
};

/// Malformed or rejected input file.
struct io_error : error {
  using error::error;
};

}  // namespace sphere12
