#pragma once

#include <cmath>
#include <span>

namespace zonekit {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

[[nodiscard]] constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
[[nodiscard]] constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
[[nodiscard]] constexpr Point2 operator*(double s, Point2 v) { return {s * v.x, s * v.y}; }
[[nodiscard]] constexpr Point2 operator*(Point2 v, double s) { return {s * v.x, s * v.y}; }
[[nodiscard]] constexpr bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
[[nodiscard]] constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

/// The l_p norm on the plane, p in [1, inf]. p = 1 and p = inf are stored
/// exactly rather than as large finite exponents, so flat unit-ball faces
/// stay exactly flat and the general-p branch never sees them.
class LpNorm {
public:
    explicit LpNorm(double p);

    [[nodiscard]] double p() const { return p_; }
    [[nodiscard]] bool is_one() const { return p_ == 1.0; }
    [[nodiscard]] bool is_inf() const { return std::isinf(p_); }
    [[nodiscard]] bool uniformly_convex() const { return p_ > 1.0 && !is_inf(); }

    [[nodiscard]] double operator()(Point2 v) const;

    friend bool operator==(const LpNorm& a, const LpNorm& b) { return a.p_ == b.p_; }

private:
    double p_;
};

[[nodiscard]] double norm(Point2 v, const LpNorm& n);
[[nodiscard]] double distance(Point2 a, Point2 b, const LpNorm& n);

/// d(x, A) = min_{a in A} d(x, a). A must be nonempty.
[[nodiscard]] double set_distance(Point2 x, std::span<const Point2> a, const LpNorm& n);

/// d(A, B) = min over cross pairs. Both sets must be nonempty.
[[nodiscard]] double set_set_distance(std::span<const Point2> a, std::span<const Point2> b,
                                      const LpNorm& n);

/// Sampled estimate of the modulus of convexity
///   delta(eps) = 1 - sup{ |(x+y)/2| : |x| = |y| = 1, |x-y| >= eps }.
/// The sup is approached from below (coarse pair scan over unit vectors, then
/// local refinement), so the estimate is a measurement, not a certified bound.
/// Norms with flat unit-ball faces (p = 1, p = inf) come out at 0 for any
/// eps below the face length.
[[nodiscard]] double convexity_modulus_estimate(const LpNorm& n, double eps, int samples = 256);

}  // namespace zonekit
