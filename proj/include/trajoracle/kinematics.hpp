#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trajoracle/geom.hpp"

namespace trajoracle::kin {

// Pure functions over immutable values throughout; thread-safe without
// qualification.

/// Straight route at constant speed. Unbounded in time: position is affine
/// in t, position_at(t) = anchor + speed * (t - anchor_time) * direction.
struct LinearTrajectory {
  geom::Point2 anchor;
  geom::UnitVec2 direction;
  double speed = 1.0;  // length units per time unit, > 0
  double anchor_time = 0.0;

  geom::Point2 position_at(double t) const {
    return anchor + speed * (t - anchor_time) * direction.vec();
  }
  geom::DirectedLine line() const { return geom::DirectedLine{anchor, direction}; }
};

/// An identified sensor with its threat circle.
struct Radar {
  std::string id;
  geom::Circle threat;  // threat.radius > 0
};

/// What one radar's jamming window leaks. Absent fields were withheld or the
/// route never crossed the threat circle.
struct RadarObservation {
  std::string radar_id;
  std::optional<double> entry_time;
  std::optional<double> exit_time;
  std::optional<double> closest_distance;
};

struct TimedWaypoint {
  geom::Point2 position;
  double time = 0.0;
};

/// Known departure data: starting point, start time, and initial heading.
/// Feeds the one-turn reconstruction.
struct LaunchObservation {
  geom::Point2 position;
  double time = 0.0;
  geom::UnitVec2 direction = geom::UnitVec2::from_angle(0.0);
};

struct ObservationSet {
  std::vector<RadarObservation> radars;
  std::optional<double> speed;
  std::optional<TimedWaypoint> waypoint;
  std::optional<LaunchObservation> launch;

  const RadarObservation* find(std::string_view radar_id) const {
    for (const auto& obs : radars) {
      if (obs.radar_id == radar_id) return &obs;
    }
    return nullptr;
  }
  bool has_any_field() const;
};

/// Circle radius R, perpendicular distance d from the center to a chord, and
/// the chord length L = 2*sqrt(R^2 - d^2).
struct ChordGeometry {
  double radius = 0.0;
  double center_distance = 0.0;
  double chord_length = 0.0;

  static ChordGeometry from_distance(double radius, double closest);
};

struct JammingInterval {
  double start = 0.0;
  double end = 0.0;  // start <= end
};

/// Which information classes the adversary receives for one radar.
struct RadarPolicy {
  bool entry = false;
  bool exit = false;
  bool closest = false;
};

struct InformationPolicy {
  std::map<std::string, RadarPolicy> per_radar;
  bool speed = false;
  std::optional<double> waypoint_time;
  bool launch = false;

  bool grants_anything() const;
};

struct ClosestApproach {
  double distance = 0.0;
  double time = 0.0;  // when the perpendicular foot is passed
};

ClosestApproach closest_approach(const LinearTrajectory& traj, geom::Point2 p);

/// Entry and exit times for a threat circle, or nothing when the route
/// misses it. A tangent graze yields (t, t).
std::optional<std::pair<double, double>> entry_exit_times(const LinearTrajectory& traj,
                                                          const geom::Circle& c,
                                                          geom::Tolerance tol = {});

/// L = 2*sqrt(radius^2 - closest^2). Throws out_of_range unless
/// 0 <= closest <= radius.
double chord_length_from_distance(double radius, double closest);

/// Speed from the chord the route cuts and the time spent inside:
/// chord / (t_out - t_in). Throws zero_duration on a tangent pass and
/// out_of_range on bad chord inputs.
double speed_from_times(double radius, double closest, double t_in, double t_out);

/// t_in + chord / speed.
double exit_time_from_entry(double t_in, double radius, double closest, double speed);

/// Forward-simulates the observations the policy grants. Radars the route
/// never crosses produce an observation with every field absent; a tangent
/// graze counts as a crossing.
ObservationSet simulate_observations(const LinearTrajectory& traj,
                                     const std::vector<Radar>& radars,
                                     const InformationPolicy& policy,
                                     geom::Tolerance tol = {});

/// Minimal sorted list of disjoint intervals with the same union as the
/// input (touching intervals merge).
std::vector<JammingInterval> merge_jamming_intervals(std::vector<JammingInterval> intervals);

}  // namespace trajoracle::kin
