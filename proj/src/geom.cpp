#include "trajoracle/geom.hpp"

#include <algorithm>
#include <numbers>

namespace trajoracle::geom {

double point_line_distance(Point2 p, const DirectedLine& l) noexcept {
  return std::abs(cross(l.direction.vec(), p - l.origin));
}

std::vector<Point2> circle_line_intersections(const Circle& c, const DirectedLine& l,
                                              Tolerance tol) {
  const double eps = tol.at(scene_scale_of(c, l));
  const double t0 = l.param_of(c.center);
  const Point2 foot = l.at(t0);
  const double d = distance(foot, c.center);
  if (d > c.radius + eps) return {};
  if (std::abs(d - c.radius) <= eps) return {foot};
  const double h = std::sqrt(std::max(0.0, c.radius * c.radius - d * d));
  return {l.at(t0 - h), l.at(t0 + h)};
}

std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2,
                                                Tolerance tol) {
  const double eps = tol.at(scene_scale_of(c1, c2));
  const Vec2 dc = c2.center - c1.center;
  const double d = norm(dc);
  const double r1 = c1.radius, r2 = c2.radius;
  if (d <= eps) {
    if (std::abs(r1 - r2) <= eps) {
      raise(errc::coincident_circles, "identical circles intersect everywhere");
    }
    return {};  // concentric, distinct radii
  }
  if (d > r1 + r2 + eps) return {};
  if (d < std::abs(r1 - r2) - eps) return {};
  // Radical-line foot at distance a from the first center.
  const double a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  const Point2 mid = c1.center + (a / d) * dc;
  const bool tangent =
      std::abs(d - (r1 + r2)) <= eps || std::abs(d - std::abs(r1 - r2)) <= eps;
  if (tangent) return {mid};
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  Point2 p = mid + (h / d) * perp(dc);
  Point2 q = mid - (h / d) * perp(dc);
  if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
  return {p, q};
}

namespace {

void sort_lines(std::vector<DirectedLine>& lines) {
  std::sort(lines.begin(), lines.end(), [](const DirectedLine& a, const DirectedLine& b) {
    return key_less(undirected_key(a), undirected_key(b));
  });
}

}  // namespace

std::vector<DirectedLine> tangent_lines_from_point(Point2 p, const Circle& c, Tolerance tol) {
  const double eps = tol.at(std::max(scene_scale_of(p), scene_scale_of(c)));
  const Vec2 v = c.center - p;
  const double dist = norm(v);
  if (c.radius <= eps) {
    if (dist <= eps) {
      raise(errc::degenerate_point, "tangent from the center of a point-circle");
    }
    return {DirectedLine{p, UnitVec2::normalized(v)}};
  }
  if (dist < c.radius - eps) return {};
  if (dist <= c.radius + eps) {
    // p sits on the circle: the tangent there.
    return {DirectedLine{p, UnitVec2::normalized(perp(v))}};
  }
  // Touch points lie at angle +-beta around the center-to-p direction.
  const UnitVec2 w = UnitVec2::normalized(p - c.center);
  const double beta = std::acos(std::clamp(c.radius / dist, -1.0, 1.0));
  std::vector<DirectedLine> out;
  for (double sign : {1.0, -1.0}) {
    const Point2 touch = c.center + c.radius * w.rotated(sign * beta).vec();
    out.push_back(DirectedLine{p, UnitVec2::normalized(touch - p)});
  }
  sort_lines(out);
  return out;
}

namespace {

// Translate a line along its normal. `toward` selects whether the shift runs
// toward or away from `ref`.
DirectedLine shifted_line(const DirectedLine& l, Point2 ref, double amount, bool toward) {
  if (amount == 0.0) return l;
  const Vec2 n = l.direction.perp().vec();
  const double side = dot(ref - l.origin, n) >= 0.0 ? 1.0 : -1.0;
  const double s = toward ? side : -side;
  return DirectedLine{l.origin + s * amount * n, l.direction};
}

void append_unique(std::vector<TaggedLine>& out, const DirectedLine& line, TangentKind kind,
                   Tolerance tol) {
  for (const TaggedLine& t : out) {
    if (same_undirected_line(t.line, line, tol)) return;
  }
  out.push_back({line, kind});
}

}  // namespace

std::vector<TaggedLine> common_tangents(const Circle& c1, const Circle& c2, Tolerance tol) {
  const double eps = tol.at(scene_scale_of(c1, c2));
  const Vec2 dc = c2.center - c1.center;
  const double d = norm(dc);
  if (d <= eps && std::abs(c1.radius - c2.radius) <= eps) {
    raise(errc::coincident_circles, "coincident circles share every tangent");
  }

  std::vector<TaggedLine> out;

  // External tangents: shrink both radii by the smaller one, leaving a point
  // and a circle of radius |r1 - r2|, then shift the tangent back out.
  if (std::abs(c1.radius - c2.radius) <= eps) {
    // Equal radii: the shrunk circle degenerates to a point, so take the two
    // lines parallel to the center line directly.
    const UnitVec2 u = UnitVec2::normalized(dc);
    const double r = c1.radius;
    for (double side : {1.0, -1.0}) {
      const DirectedLine line{c1.center + side * r * u.perp().vec(), u};
      append_unique(out, line, TangentKind::external, tol);
    }
  } else {
    const bool first_larger = c1.radius > c2.radius;
    const Circle& big = first_larger ? c1 : c2;
    const Circle& small = first_larger ? c2 : c1;
    const Circle aux{big.center, big.radius - small.radius};
    for (const DirectedLine& l : tangent_lines_from_point(small.center, aux, tol)) {
      append_unique(out, shifted_line(l, big.center, small.radius, /*toward=*/false),
                    TangentKind::external, tol);
    }
  }

  // Internal tangents: grow the second circle by r1 and shift back in.
  if (c1.radius + c2.radius > eps) {
    const Circle aux{c2.center, c2.radius + c1.radius};
    for (const DirectedLine& l : tangent_lines_from_point(c1.center, aux, tol)) {
      append_unique(out, shifted_line(l, c2.center, c1.radius, /*toward=*/true),
                    TangentKind::internal, tol);
    }
  }

  std::sort(out.begin(), out.end(), [](const TaggedLine& a, const TaggedLine& b) {
    if (a.kind != b.kind) return a.kind == TangentKind::external;
    return key_less(undirected_key(a.line), undirected_key(b.line));
  });
  return out;
}

Circle homothety_circle(const Circle& c, Point2 center, double ratio) {
  if (ratio == 0.0 || !std::isfinite(ratio)) {
    raise(errc::zero_ratio, "homothety ratio must be finite and nonzero");
  }
  return Circle{center + ratio * (c.center - center), std::abs(ratio) * c.radius};
}

DirectedLine perpendicular_bisector(Point2 p, Point2 q, Tolerance tol) {
  const double eps = tol.at(std::max(scene_scale_of(p), scene_scale_of(q)));
  if (distance(p, q) <= eps) {
    raise(errc::coincident_points, "perpendicular bisector of coincident points");
  }
  return DirectedLine{0.5 * (p + q), UnitVec2::normalized(perp(q - p))};
}

Point2 rotate_about(Point2 p, Point2 center, double radians) noexcept {
  const double c = std::cos(radians), s = std::sin(radians);
  const Vec2 v = p - center;
  return center + Vec2{c * v.x - s * v.y, s * v.x + c * v.y};
}

bool same_undirected_line(const DirectedLine& a, const DirectedLine& b, Tolerance tol) {
  double da = std::abs(a.angle_mod_pi() - b.angle_mod_pi());
  da = std::min(da, std::numbers::pi - da);
  if (da > 1e-9) return false;
  const double eps = tol.at(std::max(scene_scale_of(a), scene_scale_of(b)));
  return point_line_distance(a.origin, b) <= eps && point_line_distance(b.origin, a) <= eps;
}

LineKey undirected_key(const DirectedLine& l) {
  const double angle = l.angle_mod_pi();
  // Offset measured along the canonical normal for that angle, so lines that
  // only differ by direction sign share a key.
  const Vec2 n{-std::sin(angle), std::cos(angle)};
  return LineKey{angle, dot(n, l.origin)};
}

bool key_less(const LineKey& a, const LineKey& b) {
  if (a.angle != b.angle) return a.angle < b.angle;
  return a.offset < b.offset;
}

}  // namespace trajoracle::geom
