#include "trajoracle/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace trajoracle::kin {

bool ObservationSet::has_any_field() const {
  for (const auto& obs : radars) {
    if (obs.entry_time || obs.exit_time || obs.closest_distance) return true;
  }
  return speed.has_value() || waypoint.has_value() || launch.has_value();
}

bool InformationPolicy::grants_anything() const {
  for (const auto& [id, p] : per_radar) {
    if (p.entry || p.exit || p.closest) return true;
  }
  return speed || waypoint_time.has_value() || launch;
}

ChordGeometry ChordGeometry::from_distance(double radius, double closest) {
  return ChordGeometry{radius, closest, chord_length_from_distance(radius, closest)};
}

ClosestApproach closest_approach(const LinearTrajectory& traj, geom::Point2 p) {
  const geom::DirectedLine line = traj.line();
  const double along = line.param_of(p);
  return ClosestApproach{geom::point_line_distance(p, line),
                         traj.anchor_time + along / traj.speed};
}

std::optional<std::pair<double, double>> entry_exit_times(const LinearTrajectory& traj,
                                                          const geom::Circle& c,
                                                          geom::Tolerance tol) {
  const auto points = geom::circle_line_intersections(c, traj.line(), tol);
  if (points.empty()) return std::nullopt;
  const geom::DirectedLine line = traj.line();
  double s_in = line.param_of(points.front());
  double s_out = line.param_of(points.back());
  if (s_out < s_in) std::swap(s_in, s_out);
  return std::make_pair(traj.anchor_time + s_in / traj.speed,
                        traj.anchor_time + s_out / traj.speed);
}

double chord_length_from_distance(double radius, double closest) {
  if (!(radius >= 0.0) || !(closest >= 0.0)) {
    raise(errc::out_of_range, "chord geometry needs nonnegative radius and distance");
  }
  if (closest > radius * (1.0 + 1e-12)) {
    raise(errc::out_of_range, "closest distance exceeds the radius");
  }
  return 2.0 * std::sqrt(std::max(0.0, radius * radius - closest * closest));
}

double speed_from_times(double radius, double closest, double t_in, double t_out) {
  if (t_out == t_in) {
    raise(errc::zero_duration, "a tangent pass carries no speed information");
  }
  if (t_out < t_in) {
    raise(errc::invalid_times, "exit before entry");
  }
  return chord_length_from_distance(radius, closest) / (t_out - t_in);
}

double exit_time_from_entry(double t_in, double radius, double closest, double speed) {
  if (!(speed > 0.0)) {
    raise(errc::out_of_range, "speed must be positive");
  }
  return t_in + chord_length_from_distance(radius, closest) / speed;
}

ObservationSet simulate_observations(const LinearTrajectory& traj,
                                     const std::vector<Radar>& radars,
                                     const InformationPolicy& policy, geom::Tolerance tol) {
  ObservationSet out;
  for (const Radar& radar : radars) {
    RadarObservation obs;
    obs.radar_id = radar.id;
    const auto it = policy.per_radar.find(radar.id);
    if (it != policy.per_radar.end()) {
      const RadarPolicy& grant = it->second;
      // Information leaks only while the route actually jams this radar.
      if (const auto times = entry_exit_times(traj, radar.threat, tol)) {
        if (grant.entry) obs.entry_time = times->first;
        if (grant.exit) obs.exit_time = times->second;
        if (grant.closest) {
          obs.closest_distance = closest_approach(traj, radar.threat.center).distance;
        }
      }
    }
    out.radars.push_back(std::move(obs));
  }
  if (policy.speed) out.speed = traj.speed;
  if (policy.waypoint_time) {
    out.waypoint = TimedWaypoint{traj.position_at(*policy.waypoint_time), *policy.waypoint_time};
  }
  if (policy.launch) {
    out.launch = LaunchObservation{traj.anchor, traj.anchor_time, traj.direction};
  }
  return out;
}

std::vector<JammingInterval> merge_jamming_intervals(std::vector<JammingInterval> intervals) {
  for (const JammingInterval& iv : intervals) {
    if (!(iv.start <= iv.end)) {
      raise(errc::invalid_times, "jamming interval runs backwards");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const JammingInterval& a, const JammingInterval& b) {
              if (a.start != b.start) return a.start < b.start;
              return a.end < b.end;
            });
  std::vector<JammingInterval> merged;
  for (const JammingInterval& iv : intervals) {
    if (!merged.empty() && iv.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, iv.end);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

}  // namespace trajoracle::kin
