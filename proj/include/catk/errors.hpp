#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catk {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A point does not belong to the space/operation it was handed to,
/// or an operation was called on degenerate input (coincident vertices, ...).
class domain_error : public error {
  public:
    using error::error;
};

/// Geodesic between the given endpoints is not unique (antipodal points).
class nonunique_geodesic_error : public error {
  public:
    using error::error;
};

/// Requested comparison object does not exist (triangle inequality or
/// perimeter bound violated).
class infeasible_error : public error {
  public:
    using error::error;
};

/// Input leaves the distance regime an inequality is stated for.
class out_of_regime_error : public error {
  public:
    using error::error;
};

/// Operation precondition on ranges/distances violated.
class out_of_range_error : public error {
  public:
    using error::error;
};

/// Fixed-point search failed to contract.
class divergence_error : public error {
  public:
    using error::error;
};

/// Experiment configuration failed validation; the message names the
/// violated hypothesis or the failing JSON pointer.
class config_error : public error {
  public:
    using error::error;
};

/// A runtime invariant broke mid-run; carries the offending step.
class invariant_error : public error {
  public:
    invariant_error(const std::string& what, std::int64_t step_index)
        : error(what), step(step_index) {}

    std::int64_t step;
};

} // namespace catk
