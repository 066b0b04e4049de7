#include "zonekit/rng.hpp"

#include <cmath>

namespace zonekit {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::string_view name) {
    // FNV-1a over the stream name, folded into the seed.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    state_ = seed ^ h;
    // Burn a few outputs so nearby seeds decorrelate.
    for (int i = 0; i < 4; ++i) splitmix64(state_);
}

std::uint64_t RandomStream::next_u64() { return splitmix64(state_); }

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int RandomStream::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

Point2 RandomStream::in_box(Point2 lo, Point2 hi) {
    return {uniform(lo.x, hi.x), uniform(lo.y, hi.y)};
}

Point2 RandomStream::in_ball(Point2 center, double radius, const LpNorm& n) {
    for (;;) {
        const Point2 q{uniform(-radius, radius), uniform(-radius, radius)};
        if (n(q) < radius) return center + q;
    }
}

}  // namespace zonekit
