#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trajoracle/geom.hpp"
#include "trajoracle/kinematics.hpp"

namespace trajoracle::rec {

enum class CaseTag { case1, case2, case3, case4, bonus };

/// Why a solver returned no candidates. Geometric infeasibility is reported
/// this way rather than thrown, so batch runs keep going.
enum class FailureReason {
  none,                  // candidates present, or genuinely zero-tangent configs
  no_solution,           // construction circles fail to intersect
  inconsistent_input,    // observations contradict each other outright
  continuum_degenerate,  // infinitely many routes fit; no finite set exists
};

const char* case_tag_name(CaseTag tag) noexcept;
const char* failure_reason_name(FailureReason reason) noexcept;

/// Two straight legs at one shared speed: start -> turn_point along
/// leg1_direction, then onward along leg2_direction. turn_point lies on the
/// ray from start along leg1_direction.
struct TurnTrajectory {
  geom::Point2 start;
  geom::UnitVec2 leg1_direction = geom::UnitVec2::from_angle(0.0);
  geom::Point2 turn_point;
  geom::UnitVec2 leg2_direction = geom::UnitVec2::from_angle(0.0);
  double speed = 1.0;
  double start_time = 0.0;

  double turn_time() const {
    return start_time + geom::distance(start, turn_point) / speed;
  }
  geom::Point2 position_at(double t) const;
};

using Route = std::variant<geom::DirectedLine, kin::LinearTrajectory, TurnTrajectory>;

struct Candidate {
  Route route;
  double residual = 0.0;
};

/// Deduplicated reconstruction results. Every candidate has been verified by
/// forward simulation against the observations it was built from; residual is
/// the worst reproduction mismatch and stays below the acceptance threshold.
struct CandidateSet {
  CaseTag case_tag = CaseTag::case1;
  std::vector<Candidate> candidates;
  FailureReason reason = FailureReason::none;
  std::string detail;

  bool empty() const { return candidates.empty(); }
  std::size_t size() const { return candidates.size(); }
};

/// Candidates failing verification worse than this are discarded.
inline constexpr double kResidualThreshold = 1e-6;

/// Signed times from the waypoint to the circle crossings: x to entry, y to
/// exit. The homothety ratio y/x is negative exactly when the waypoint time
/// falls between them.
struct WaypointTiming {
  double x = 0.0;
  double y = 0.0;
  double ratio() const { return y / x; }
};

/// Segment ratios derived from four crossing times: x = BC/AB, y = CD/AB for
/// crossing order A, B (first circle) then C, D (second circle).
struct Case4Ratios {
  double x = 0.0;
  double y = 0.0;

  static Case4Ratios from_times(double t_a, double t_b, double t_c, double t_d);
};

/// One root of the two-chord placement equation together with the placement
/// flags: same_side tells whether both centers lie on the same side of the
/// line, direction_flip mirrors the placement across the center line.
struct Case4Branch {
  double p = 0.0;  // center-1 offset to chord AB
  double q = 0.0;  // center-2 offset to chord CD
  double s = 0.0;  // distance between chord midpoints
  bool same_side = true;
  bool direction_flip = false;
};

/// Known data for the one-turn reconstruction: departure point and heading,
/// total path distance d to the threat-circle entrance, and the chord CD cut
/// inside the circle.
struct BonusInput {
  geom::Point2 start;
  geom::UnitVec2 leg1_direction = geom::UnitVec2::from_angle(0.0);
  double distance_to_entry = 0.0;  // d > 0
  double inner_chord = 0.0;        // 0 <= CD <= 2 * threat.radius
  geom::Circle threat;
};

/// Routes tangent to the two closest-distance circles: up to four common
/// tangent lines, closed under reflection across the center line. Throws
/// coincident_centers.
CandidateSet solve_case1(geom::Point2 c1_center, double d1, geom::Point2 c2_center, double d2,
                         geom::Tolerance tol = {});

/// Timed routes from one radar's closest distance + entry/exit times plus the
/// entry time into a second threat circle. Up to four candidates: the
/// second-entry point lies on a circle around the first center whose radius
/// comes from the canonical chord-plus-extension placement.
CandidateSet solve_case2(const kin::Radar& r1, double d1, double t_in1, double t_out1,
                         const kin::Radar& r2, double t_in2, geom::Tolerance tol = {});

/// Complete route from one circle's entry/exit times plus a timed waypoint.
/// Exit candidates are the intersections of the threat circle with its
/// homothety about the waypoint (ratio y/x, negative when the waypoint time
/// lies inside the crossing interval). Throws degenerate_waypoint when the
/// waypoint time equals a crossing time.
CandidateSet solve_case3(const kin::Radar& radar, double t_in, double t_out,
                         const kin::TimedWaypoint& waypoint, geom::Tolerance tol = {});

/// Timed routes from entry/exit times of two circles. Solves the placement
/// equation f(p) = s(p)^2 + (p -+ q(p))^2 - D^2 per branch by dense sampling
/// plus bisection; every root is re-anchored against the actual center pair
/// and verified by forward simulation. (A homothetic-expansion construction
/// solves the same problem by mapping first-circle points onto the second
/// circle; this solver uses the chord-placement form instead.)
/// Throws invalid_times unless t_a < t_b <= t_c < t_d.
CandidateSet solve_case4(const kin::Radar& r1, double t_a, double t_b, const kin::Radar& r2,
                         double t_c, double t_d, geom::Tolerance tol = {});

/// Brute-force reference for solve_case4: scans (angle, offset) line space on
/// a grid of at least `grid` cells per parameter, locally refines promising
/// cells, and keeps lines whose crossing ratios match within 1e-4. Testing
/// oracle only; deterministic.
std::vector<geom::DirectedLine> case4_oracle(const kin::Radar& r1, const kin::Radar& r2,
                                             const Case4Ratios& ratios, int grid = 256);

/// Same-radius circles placed along the unturned ray so the entrance sits at
/// path distance d and the inside chord equals CD. One circle when the chord
/// is a diameter, two otherwise. Throws chord_too_long when CD > 2R.
std::vector<geom::Circle> construct_reference_circle(const BonusInput& input,
                                                     geom::Tolerance tol = {});

/// One-turn routes consistent with a BonusInput: for each reference circle,
/// the turn point is the ray's intersection with the perpendicular bisector
/// of (threat center, reference center), and the second leg is the rotation
/// about it that carries the reference circle onto the threat circle.
CandidateSet solve_bonus(const BonusInput& input, double speed, double start_time,
                         geom::Tolerance tol = {});

/// First entry/exit times of a two-leg route through a circle, or nothing if
/// it never enters. Spans across the turn are handled.
std::optional<std::pair<double, double>> turn_entry_exit(const TurnTrajectory& traj,
                                                         const geom::Circle& c,
                                                         geom::Tolerance tol = {});

/// Smallest distance from the two-leg path (leg 1 segment, leg 2 ray) to p.
double turn_closest_distance(const TurnTrajectory& traj, geom::Point2 p);

/// True when `candidate` reproduces `truth` within tol: undirected line match
/// for lines, plus speed and position-at-common-time for timed routes, plus
/// turn point and both headings for two-leg routes.
bool matches_ground_truth(const Route& candidate, const Route& truth, double tol);

bool lines_match(const geom::DirectedLine& a, const geom::DirectedLine& b, double tol);

}  // namespace trajoracle::rec
