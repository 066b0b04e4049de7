#include "zonekit/norms.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zonekit {

LpNorm::LpNorm(double p) : p_(p) {
    if (std::isnan(p) || p < 1.0) {
        throw std::invalid_argument("LpNorm: p must satisfy p >= 1 (got " + std::to_string(p) + ")");
    }
}

double LpNorm::operator()(Point2 v) const {
    const double ax = std::fabs(v.x);
    const double ay = std::fabs(v.y);
    if (is_inf()) return std::max(ax, ay);
    if (p_ == 1.0) return ax + ay;
    if (p_ == 2.0) return std::hypot(ax, ay);
    const double m = std::max(ax, ay);
    if (m == 0.0) return 0.0;
    // Factoring out the max keeps pow() away from overflow/underflow for
    // large p and extreme coordinates.
    return m * std::pow(std::pow(ax / m, p_) + std::pow(ay / m, p_), 1.0 / p_);
}

double norm(Point2 v, const LpNorm& n) { return n(v); }

double distance(Point2 a, Point2 b, const LpNorm& n) { return n(a - b); }

double set_distance(Point2 x, std::span<const Point2> a, const LpNorm& n) {
    if (a.empty()) throw std::invalid_argument("set_distance: empty set");
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& q : a) best = std::min(best, n(x - q));
    return best;
}

double set_set_distance(std::span<const Point2> a, std::span<const Point2> b, const LpNorm& n) {
    if (a.empty() || b.empty()) throw std::invalid_argument("set_set_distance: empty set");
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& q : a) best = std::min(best, set_distance(q, b, n));
    return best;
}

namespace {

Point2 unit_at(double angle, const LpNorm& n) {
    Point2 v{std::cos(angle), std::sin(angle)};
    return v * (1.0 / n(v));
}

}  // namespace

double convexity_modulus_estimate(const LpNorm& n, double eps, int samples) {
    if (!(eps > 0.0) || !(eps <= 2.0)) {
        throw std::invalid_argument("convexity_modulus_estimate: eps must lie in (0, 2]");
    }
    samples = std::max(samples, 32);

    // Feasibility uses a hair of slack so pairs achieving |x-y| = eps exactly
    // (the usual maximizers) are not lost to rounding.
    const double feas = eps - 1e-12;
    const double two_pi = 2.0 * std::numbers::pi;

    double best = 0.0;
    double best_a = 0.0;
    double best_b = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double a = two_pi * i / samples;
        const Point2 u = unit_at(a, n);
        for (int j = i + 1; j < samples; ++j) {
            const double b = two_pi * j / samples;
            const Point2 v = unit_at(b, n);
            if (n(u - v) < feas) continue;
            const double mid = n((u + v) * 0.5);
            if (mid > best) {
                best = mid;
                best_a = a;
                best_b = b;
            }
        }
    }

    // Local refinement around the best coarse pair.
    double w = two_pi / samples;
    while (w > 1e-12) {
        double round_best = best;
        double round_a = best_a;
        double round_b = best_b;
        for (int da = -4; da <= 4; ++da) {
            const double a = best_a + da * (w / 4.0);
            const Point2 u = unit_at(a, n);
            for (int db = -4; db <= 4; ++db) {
                const double b = best_b + db * (w / 4.0);
                const Point2 v = unit_at(b, n);
                if (n(u - v) < feas) continue;
                const double mid = n((u + v) * 0.5);
                if (mid > round_best) {
                    round_best = mid;
                    round_a = a;
                    round_b = b;
                }
            }
        }
        best = round_best;
        best_a = round_a;
        best_b = round_b;
        w *= 0.5;
    }

    return std::max(0.0, 1.0 - best);
}

}  // namespace zonekit
