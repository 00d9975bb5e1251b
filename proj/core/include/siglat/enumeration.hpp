#ifndef SIGLAT_ENUMERATION_HPP
#define SIGLAT_ENUMERATION_HPP

#include "siglat/partition.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace siglat {

/// Largest n enumerate_partitions will materialize (B(12) is ~4.2 million).
inline constexpr int kMaxEnumerationSize = 12;

/// Largest n sample_partition supports (the counting table stays in uint64).
inline constexpr int kMaxSampleSize = 25;

/// All partitions of an n-point set, each exactly once, in lexicographic
/// order of restricted growth strings. The first element is the trivial
/// partition, the last the discrete one.
std::vector<Partition> enumerate_partitions(int n);

/// Number of partitions of an n-point set (the Bell number), computed by
/// counting restricted growth strings. n <= kMaxSampleSize.
std::uint64_t partition_count(int n);

/// Draws from [0, n) without modulo bias; n >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// A partition of the n-point set drawn uniformly at random, by sampling a
/// restricted growth string digit-by-digit with exact completion counts.
Partition sample_partition(GroundSet space, std::mt19937_64& rng);

/// Stateless mixer used to derive independent per-trial generators from a
/// single seed; deterministic regardless of scheduling.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace siglat

#endif
