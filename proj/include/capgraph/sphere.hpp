#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Uniform sampling on the unit sphere with reproducible, splittable random
// streams, plus the angular metric and a quasi-uniform test grid.

namespace capgraph {

struct UnitVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;
};

double dot(const UnitVector& u, const UnitVector& v);
UnitVector cross(const UnitVector& u, const UnitVector& v);
double norm(const UnitVector& u);

/// Deterministic random stream identified by (master_seed, stream_index).
///
/// Streams with equal identifiers produce identical draw sequences; distinct
/// stream indices give statistically independent streams. The generator is
/// pinned for bit-reproducibility: an std::mt19937_64 engine seeded with
/// splitmix64(splitmix64(master_seed) + stream_index), uniform doubles taken
/// as (u64 >> 11) * 2^-53, and Gaussians via the Box-Muller transform.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    /// Uniform double in [0, 1); consumes one raw draw.
    double next_double();
    /// Two independent standard normals; consumes two raw draws.
    std::pair<double, double> next_gaussian_pair();

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }
    /// Number of raw 64-bit draws consumed so far.
    std::uint64_t position() const { return position_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t position_ = 0;
};

/// splitmix64 output mix; used to derive stream seeds.
std::uint64_t mix64(std::uint64_t z);

/// Uniform (area measure) point on S^2: three Box-Muller normals,
/// normalized. Consumes exactly four raw draws.
UnitVector sample_uniform_unit_vector(RandomStream& stream);

std::vector<UnitVector> sample_unit_vectors(RandomStream& stream, std::size_t count);

/// Great-circle angle in [0, pi], computed as atan2(|u x v|, u.v) so that
/// angles near 0 and pi keep full precision. Inputs must be unit vectors
/// (norm within 1e-6 of 1), otherwise std::domain_error.
double angular_distance(const UnitVector& u, const UnitVector& v);

/// m quasi-uniform points on S^2 along the golden-angle spiral.
/// Deterministic in m; mesh norm is O(1/sqrt(m)).
std::vector<UnitVector> fibonacci_grid(std::size_t m);

}  // namespace capgraph
