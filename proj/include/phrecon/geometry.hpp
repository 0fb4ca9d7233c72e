#pragma once

// Planar primitives shared by the filtration and reconstruction code:
// points, directions, lines in normal form, intersections and angles.
//
// Everything is plain 64-bit floating point. One global tolerance governs
// parallelism and on-line tests; it defaults to 1e-9 and assumes inputs of
// order one.

#include <atomic>
#include <cmath>
#include <compare>
#include <numbers>
#include <tuple>

#include "phrecon/errors.hpp"

namespace phrecon {

inline constexpr double kDefaultTolerance = 1e-9;

// Threshold on the cross product of two unit normals below which lines are
// treated as parallel.
inline constexpr double kParallelThreshold = 1e-12;

namespace detail {
inline std::atomic<double>& tolerance_storage() {
  static std::atomic<double> value{kDefaultTolerance};
  return value;
}
}  // namespace detail

inline double tolerance() { return detail::tolerance_storage().load(std::memory_order_relaxed); }

inline void set_tolerance(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw Error("tolerance must be positive and finite");
  detail::tolerance_storage().store(tau, std::memory_order_relaxed);
}

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;

  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator*(double k) const { return {x * k, y * k}; }
};

inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const Point2& a) { return std::hypot(a.x, a.y); }

struct Direction {
  double dx = 1.0;
  double dy = 0.0;

  friend bool operator==(const Direction&, const Direction&) = default;

  bool is_zero() const { return dx == 0.0 && dy == 0.0; }
  bool is_unit(double eps = 1e-12) const { return std::abs(dx * dx + dy * dy - 1.0) <= eps; }

  // Scaled to unit length. Throws ZeroDirection for (0, 0).
  Direction normalized() const {
    if (is_zero() || !std::isfinite(dx) || !std::isfinite(dy)) throw ZeroDirection();
    const double len = std::hypot(dx, dy);
    return {dx / len, dy / len};
  }

  static Direction unit(double dx, double dy) { return Direction{dx, dy}.normalized(); }

  Point2 as_point() const { return {dx, dy}; }
};

// Height of p along s. Linear in both arguments; s is not normalized here.
inline double height(const Point2& p, const Direction& s) { return p.x * s.dx + p.y * s.dy; }

// The line {q : q . normal = offset}.
struct Line {
  Direction normal;
  double offset = 0.0;

  // Unit normal whose first non-zero component is positive; the offset
  // follows the same scaling so the point set is unchanged.
  Line canonical() const {
    const Direction n = normal.normalized();
    const double len = std::hypot(normal.dx, normal.dy);
    double off = offset / len;
    const bool flip = n.dx < 0.0 || (n.dx == 0.0 && n.dy < 0.0);
    if (flip) return {{-n.dx, -n.dy}, -off};
    return {n, off};
  }

  // Signed residual q . normal - offset.
  double residual(const Point2& q) const { return height(q, normal) - offset; }

  // A point on the line and the line's direction vector.
  Point2 anchor() const {
    const double len2 = normal.dx * normal.dx + normal.dy * normal.dy;
    return {normal.dx * offset / len2, normal.dy * offset / len2};
  }
  Point2 along() const { return {-normal.dy, normal.dx}; }

  friend bool operator==(const Line& a, const Line& b) {
    const Line ca = a.canonical();
    const Line cb = b.canonical();
    return ca.normal == cb.normal && ca.offset == cb.offset;
  }
};

// Line through h * s perpendicular to s. Non-unit s is normalized first.
inline Line filtration_line(const Direction& s, double h) { return Line{s.normalized(), h}; }

// Intersection by Cramer's rule. The formula is antisymmetric in (a, b) term
// by term, so swapping the arguments gives a bit-identical point.
inline Point2 intersect_lines(const Line& a, const Line& b) {
  const Line ua = a.canonical();
  const Line ub = b.canonical();
  const double det = ua.normal.dx * ub.normal.dy - ua.normal.dy * ub.normal.dx;
  if (std::abs(det) <= kParallelThreshold) throw ParallelLines();
  const double x = (ua.offset * ub.normal.dy - ub.offset * ua.normal.dy) / det;
  const double y = (ua.normal.dx * ub.offset - ub.normal.dx * ua.offset) / det;
  return {x, y};
}

// Counter-clockwise rotation.
inline Direction rotate(const Direction& s, double angle) {
  const double c = std::cos(angle);
  const double sn = std::sin(angle);
  return {c * s.dx - sn * s.dy, sn * s.dx + c * s.dy};
}

// Unit vector perpendicular to v, obtained by a quarter turn counter-clockwise.
inline Direction perpendicular(const Point2& v) { return Direction::unit(-v.y, v.x); }

// Angle of the undirected line through u and v, in [0, pi).
inline double line_angle_mod_pi(const Point2& u, const Point2& v) {
  double dx = v.x - u.x;
  double dy = v.y - u.y;
  if (dx == 0.0 && dy == 0.0) throw CoincidentPoints();
  // Pick the representative in the upper half plane so that (u, v) and
  // (v, u) feed atan2 the exact same arguments.
  if (dy < 0.0 || (dy == 0.0 && dx < 0.0)) {
    dx = -dx;
    dy = -dy;
  }
  const double a = std::atan2(dy, dx);
  return a >= std::numbers::pi ? 0.0 : a;
}

}  // namespace phrecon
