#pragma once

#include <algorithm>
#include <array>

#include "trajoracle/reconstruct.hpp"

namespace trajoracle::rec::detail {

inline std::array<double, 4> sort_key(const Route& route) {
  if (const auto* line = std::get_if<geom::DirectedLine>(&route)) {
    const geom::LineKey k = geom::undirected_key(*line);
    return {k.angle, k.offset, 0.0, 0.0};
  }
  if (const auto* traj = std::get_if<kin::LinearTrajectory>(&route)) {
    const geom::LineKey k = geom::undirected_key(traj->line());
    return {k.angle, k.offset, traj->speed, traj->anchor_time};
  }
  const auto& turn = std::get<TurnTrajectory>(route);
  return {geom::distance(turn.start, turn.turn_point), turn.leg2_direction.angle(),
          turn.speed, turn.start_time};
}

inline bool same_route(const Route& a, const Route& b, geom::Tolerance tol) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<geom::DirectedLine>(&a)) {
    return geom::same_undirected_line(*la, std::get<geom::DirectedLine>(b), tol);
  }
  if (const auto* ta = std::get_if<kin::LinearTrajectory>(&a)) {
    const auto& tb = std::get<kin::LinearTrajectory>(b);
    if (!geom::same_undirected_line(ta->line(), tb.line(), tol)) return false;
    if (std::abs(ta->speed - tb.speed) > 1e-9 * (1.0 + ta->speed)) return false;
    const geom::Point2 pa = ta->position_at(ta->anchor_time);
    const geom::Point2 pb = tb.position_at(ta->anchor_time);
    return geom::distance(pa, pb) <= tol.at(geom::scene_scale_of(pa));
  }
  const auto& ua = std::get<TurnTrajectory>(a);
  const auto& ub = std::get<TurnTrajectory>(b);
  const double eps = tol.at(geom::scene_scale_of(ua.start, ua.turn_point));
  return geom::distance(ua.start, ub.start) <= eps &&
         geom::distance(ua.turn_point, ub.turn_point) <= eps &&
         geom::norm(ua.leg1_direction.vec() - ub.leg1_direction.vec()) <= 1e-9 &&
         geom::norm(ua.leg2_direction.vec() - ub.leg2_direction.vec()) <= 1e-9 &&
         std::abs(ua.speed - ub.speed) <= 1e-9 * (1.0 + ua.speed);
}

inline void push_unique(CandidateSet& set, Route route, double residual, geom::Tolerance tol) {
  for (Candidate& existing : set.candidates) {
    if (same_route(existing.route, route, tol)) {
      existing.residual = std::min(existing.residual, residual);
      return;
    }
  }
  set.candidates.push_back(Candidate{std::move(route), residual});
}

inline void sort_candidates(CandidateSet& set) {
  std::sort(set.candidates.begin(), set.candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return sort_key(a.route) < sort_key(b.route);
            });
}

}  // namespace trajoracle::rec::detail
