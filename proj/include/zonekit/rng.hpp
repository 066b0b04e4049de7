#pragma once

#include <cstdint>
#include <string_view>

#include "zonekit/norms.hpp"

namespace zonekit {

/// Deterministic random stream derived from a scene seed and a stream name,
/// so independent consumers (jitter, scene placement, triple sampling) never
/// share or perturb each other's sequences. splitmix64 core; identical output
/// on every platform.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::string_view name);

    [[nodiscard]] std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53 bits.
    [[nodiscard]] double uniform();
    [[nodiscard]] double uniform(double lo, double hi);
    [[nodiscard]] int uniform_int(int lo, int hi);  // inclusive bounds

    [[nodiscard]] Point2 in_box(Point2 lo, Point2 hi);

    /// Uniform-ish point in the open l_p ball around center (rejection from
    /// the bounding box).
    [[nodiscard]] Point2 in_ball(Point2 center, double radius, const LpNorm& n);

private:
    std::uint64_t state_;
};

}  // namespace zonekit
