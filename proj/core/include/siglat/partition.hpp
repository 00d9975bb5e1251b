#ifndef SIGLAT_PARTITION_HPP
#define SIGLAT_PARTITION_HPP

#include "siglat/ground.hpp"

#include <span>
#include <string>
#include <vector>

namespace siglat {

/// A partition of a ground set into disjoint nonempty blocks covering all
/// points. Blocks are kept in canonical order: ascending minimum element.
/// Equality is structural, so canonical partitions compare bitwise.
class Partition {
public:
    static Partition trivial(GroundSet space);   // one block, the whole set
    static Partition discrete(GroundSet space);  // all singletons

    /// Builds a partition from a restricted growth string: rgs[p] is the
    /// block index of point p, rgs[0] = 0, rgs[p] <= max(rgs[0..p-1]) + 1.
    static Partition from_rgs(GroundSet space, std::span<const int> rgs);

    GroundSet space() const { return space_; }
    const std::vector<Subset>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    int block_index_of(int point) const;
    const Subset& block_containing(int point) const { return blocks_[block_index_of(point)]; }

    /// The restricted growth string of this partition.
    std::vector<int> rgs() const;

    /// Renders as "{{0},{1,2}}", blocks in canonical order.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

    friend Partition canonical_partition(GroundSet, std::vector<Subset>);

private:
    Partition(GroundSet space, std::vector<Subset> blocks)
        : space_(space), blocks_(std::move(blocks)) {}

    GroundSet space_;
    std::vector<Subset> blocks_;
};

/// Validates and canonicalizes a block list: blocks must be nonempty,
/// pairwise disjoint, and cover the space. Throws std::invalid_argument
/// naming the offending point otherwise.
Partition canonical_partition(GroundSet space, std::vector<Subset> blocks);

/// True iff every block of p is contained in some block of q
/// (p is finer than or equal to q).
bool refines(const Partition& p, const Partition& q);

/// The finest partition coarser than both p and q: blocks are the connected
/// components of the graph joining two points whenever they share a block of
/// p or a block of q.
Partition overlap_components(const Partition& p, const Partition& q);

/// Common refinement of p and q: nonempty pairwise block intersections.
Partition common_refinement(const Partition& p, const Partition& q);

} // namespace siglat

#endif
