#pragma once

#include <stdexcept>
#include <string>

namespace trajoracle {

/// Machine-readable codes for domain precondition violations.
enum class errc {
  coincident_circles,
  coincident_points,
  coincident_centers,
  degenerate_point,
  degenerate_waypoint,
  zero_ratio,
  zero_duration,
  out_of_range,
  invalid_times,
  chord_too_long,
  invalid_argument,
};

const char* errc_name(errc code) noexcept;

/// Thrown when an operation's preconditions are violated. Geometric
/// infeasibility of a reconstruction is not an error; solvers report it
/// through CandidateSet::reason instead.
class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw domain_error(code, what);
}

}  // namespace trajoracle
