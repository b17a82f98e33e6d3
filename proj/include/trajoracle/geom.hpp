#pragma once

#include <cmath>
#include <numbers>
#include <initializer_list>
#include <vector>

#include "trajoracle/errors.hpp"

namespace trajoracle::geom {

// Everything in this module is an immutable value and every operation is a
// pure function, so concurrent use needs no synchronization.

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

using Point2 = Vec2;

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
constexpr Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
constexpr Vec2 operator-(Vec2 v) { return {-v.x, -v.y}; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }
inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Unit-length direction. Normalized on construction; the invariant
/// ux^2 + uy^2 = 1 holds to within 1e-12 afterwards.
class UnitVec2 {
 public:
  static UnitVec2 normalized(Vec2 v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
      raise(errc::invalid_argument, "cannot normalize a zero or non-finite vector");
    }
    return UnitVec2(v.x / n, v.y / n);
  }

  static UnitVec2 from_angle(double radians) noexcept {
    return UnitVec2(std::cos(radians), std::sin(radians));
  }

  double x() const noexcept { return ux_; }
  double y() const noexcept { return uy_; }
  Vec2 vec() const noexcept { return {ux_, uy_}; }

  double angle() const noexcept { return std::atan2(uy_, ux_); }
  UnitVec2 perp() const noexcept { return UnitVec2(-uy_, ux_); }
  UnitVec2 flipped() const noexcept { return UnitVec2(-ux_, -uy_); }
  UnitVec2 rotated(double radians) const noexcept {
    const double c = std::cos(radians), s = std::sin(radians);
    return UnitVec2(c * ux_ - s * uy_, s * ux_ + c * uy_);
  }

 private:
  UnitVec2(double ux, double uy) noexcept : ux_(ux), uy_(uy) {}
  double ux_, uy_;
};

struct DirectedLine {
  Point2 origin;
  UnitVec2 direction;

  Point2 at(double t) const { return origin + t * direction.vec(); }
  /// Signed parameter of the perpendicular foot of p.
  double param_of(Point2 p) const { return dot(p - origin, direction.vec()); }
  Point2 foot_of(Point2 p) const { return at(param_of(p)); }
  /// Direction angle folded into [0, pi).
  double angle_mod_pi() const {
    double a = std::fmod(direction.angle(), std::numbers::pi);
    if (a < 0.0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    return a;
  }
};

/// radius >= 0; a radius-0 point-circle stands in for a zero closest distance.
struct Circle {
  Point2 center;
  double radius = 0.0;
};

/// Coincidence and tangency decisions use a hybrid absolute-relative epsilon
/// eps = relative * (1 + scene scale), where the scene scale is the largest
/// coordinate or radius magnitude among the operands. Keeps results stable
/// for coordinates up to ~1e4.
struct Tolerance {
  double relative = 1e-9;
  double at(double scene_scale) const noexcept { return relative * (1.0 + scene_scale); }
};

inline double scene_scale(std::initializer_list<double> magnitudes) {
  double m = 0.0;
  for (double v : magnitudes) m = std::max(m, std::abs(v));
  return m;
}

inline double scene_scale_of(Point2 p) { return std::max(std::abs(p.x), std::abs(p.y)); }
inline double scene_scale_of(const Circle& c) {
  return std::max(scene_scale_of(c.center), std::abs(c.radius));
}
inline double scene_scale_of(const DirectedLine& l) { return scene_scale_of(l.origin); }

template <typename... Ts>
double scene_scale_of(const Ts&... parts) requires(sizeof...(Ts) > 1) {
  double m = 0.0;
  ((m = std::max(m, scene_scale_of(parts))), ...);
  return m;
}

enum class TangentKind { external, internal };

struct TaggedLine {
  DirectedLine line;
  TangentKind kind;
};

/// Perpendicular distance from p to l.
double point_line_distance(Point2 p, const DirectedLine& l) noexcept;

/// 0-2 intersection points, sorted by signed parameter along l. A line within
/// eps of tangency yields exactly one point, the perpendicular foot of the
/// center.
std::vector<Point2> circle_line_intersections(const Circle& c, const DirectedLine& l,
                                              Tolerance tol = {});

/// 0-2 intersection points in lexicographic (x, y) order. Near-tangent pairs
/// yield the single midpoint of the vanishing chord. Throws coincident_circles
/// when the circles are identical within eps.
std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2,
                                                Tolerance tol = {});

/// Tangent lines through p. Outside: 2, on the circle: 1, inside: none.
/// A radius-0 circle degenerates to the single line through p and the center;
/// throws degenerate_point if p coincides with such a center.
std::vector<DirectedLine> tangent_lines_from_point(Point2 p, const Circle& c,
                                                   Tolerance tol = {});

/// Common tangents of two circles, tagged external/internal, built by the
/// shifted-circle reduction to tangent_lines_from_point (equal radii take the
/// direct parallel-line form). Count follows the classical classification:
/// 4 disjoint, 3 externally tangent, 2 overlapping, 1 internally tangent,
/// 0 nested. Throws coincident_circles for identical circles.
std::vector<TaggedLine> common_tangents(const Circle& c1, const Circle& c2,
                                        Tolerance tol = {});

/// Scales c about `center` by `ratio` (signed). Throws zero_ratio.
Circle homothety_circle(const Circle& c, Point2 center, double ratio);

/// Line through the midpoint of pq, perpendicular to it. Throws
/// coincident_points when p and q coincide within eps.
DirectedLine perpendicular_bisector(Point2 p, Point2 q, Tolerance tol = {});

Point2 rotate_about(Point2 p, Point2 center, double radians) noexcept;

/// Undirected-line equality: direction angles agree mod pi within 1e-9 and
/// each origin lies on the other line within eps.
bool same_undirected_line(const DirectedLine& a, const DirectedLine& b, Tolerance tol = {});

/// Canonical (angle in [0, pi), signed offset) key for deterministic ordering
/// of multi-line results.
struct LineKey {
  double angle;
  double offset;
};

LineKey undirected_key(const DirectedLine& l);
bool key_less(const LineKey& a, const LineKey& b);

}  // namespace trajoracle::geom
