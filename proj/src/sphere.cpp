#include "capgraph/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capgraph {

double dot(const UnitVector& u, const UnitVector& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

UnitVector cross(const UnitVector& u, const UnitVector& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

double norm(const UnitVector& u) { return std::sqrt(dot(u, u)); }

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : engine_(mix64(mix64(master_seed) + stream_index)),
      master_seed_(master_seed),
      stream_index_(stream_index) {}

std::uint64_t RandomStream::next_u64() {
    ++position_;
    return engine_();
}

double RandomStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::pair<double, double> RandomStream::next_gaussian_pair() {
    const double u1 = next_double();
    const double u2 = next_double();
    // 1 - u1 lies in (0, 1], so the log is finite.
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

UnitVector sample_uniform_unit_vector(RandomStream& stream) {
    for (;;) {
        const auto [g1, g2] = stream.next_gaussian_pair();
        const auto [g3, g4] = stream.next_gaussian_pair();
        (void)g4;
        const double n2 = g1 * g1 + g2 * g2 + g3 * g3;
        if (n2 > 0.0) {
            const double inv = 1.0 / std::sqrt(n2);
            return {g1 * inv, g2 * inv, g3 * inv};
        }
        // All three normals were zero; astronomically rare, draw again.
    }
}

std::vector<UnitVector> sample_unit_vectors(RandomStream& stream, std::size_t count) {
    std::vector<UnitVector> points;
    points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        points.push_back(sample_uniform_unit_vector(stream));
    }
    return points;
}

double angular_distance(const UnitVector& u, const UnitVector& v) {
    constexpr double kNormTolerance = 1e-6;
    if (std::abs(norm(u) - 1.0) > kNormTolerance || std::abs(norm(v) - 1.0) > kNormTolerance) {
        throw std::domain_error("angular_distance requires unit vectors");
    }
    const UnitVector c = cross(u, v);
    return std::atan2(norm(c), dot(u, v));
}

std::vector<UnitVector> fibonacci_grid(std::size_t m) {
    std::vector<UnitVector> points;
    points.reserve(m);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < m; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        points.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return points;
}

}  // namespace capgraph
