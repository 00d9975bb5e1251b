#include "siglat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace siglat {

Partition Partition::trivial(GroundSet space) {
    return Partition(space, {Subset::full(space)});
}

Partition Partition::discrete(GroundSet space) {
    std::vector<Subset> blocks;
    blocks.reserve(space.size());
    for (int p = 0; p < space.size(); ++p) blocks.push_back(Subset::single(space, p));
    return Partition(space, std::move(blocks));
}

Partition Partition::from_rgs(GroundSet space, std::span<const int> rgs) {
    if (static_cast<int>(rgs.size()) != space.size())
        throw std::invalid_argument("restricted growth string length mismatch");
    int max_seen = -1;
    std::vector<std::uint64_t> bits;
    for (int p = 0; p < space.size(); ++p) {
        int d = rgs[p];
        if (d < 0 || d > max_seen + 1)
            throw std::invalid_argument("not a restricted growth string at position " +
                                        std::to_string(p));
        if (d == max_seen + 1) { bits.push_back(0); max_seen = d; }
        bits[d] |= std::uint64_t{1} << p;
    }
    std::vector<Subset> blocks;
    blocks.reserve(bits.size());
    for (std::uint64_t b : bits) blocks.emplace_back(space, b);
    // RGS block indices appear in order of first occurrence, so the block list
    // is already sorted by minimum element.
    return Partition(space, std::move(blocks));
}

int Partition::block_index_of(int point) const {
    for (int i = 0; i < block_count(); ++i)
        if (blocks_[i].test(point)) return i;
    throw std::invalid_argument("point " + std::to_string(point) +
                                " outside ground set of size " +
                                std::to_string(space_.size()));
}

std::vector<int> Partition::rgs() const {
    std::vector<int> out(space_.size());
    for (int p = 0; p < space_.size(); ++p) out[p] = block_index_of(p);
    return out;
}

std::string Partition::to_string() const {
    std::string out = "{";
    for (int i = 0; i < block_count(); ++i) {
        if (i) out += ",";
        out += blocks_[i].to_string();
    }
    return out + "}";
}

Partition canonical_partition(GroundSet space, std::vector<Subset> blocks) {
    std::uint64_t seen = 0;
    for (const Subset& b : blocks) {
        require_same_space(space, b.space(), "canonical_partition");
        if (b.is_empty())
            throw std::invalid_argument("canonical_partition: empty block");
        if (seen & b.bits()) {
            int p = Subset(space, seen & b.bits()).min_point();
            throw std::invalid_argument("canonical_partition: point " +
                                        std::to_string(p) +
                                        " appears in more than one block");
        }
        seen |= b.bits();
    }
    std::uint64_t missing = Subset::full(space).bits() & ~seen;
    if (missing)
        throw std::invalid_argument("canonical_partition: point " +
                                    std::to_string(Subset(space, missing).min_point()) +
                                    " not covered by any block");
    std::sort(blocks.begin(), blocks.end(),
              [](const Subset& a, const Subset& b) { return a.min_point() < b.min_point(); });
    return Partition(space, std::move(blocks));
}

bool refines(const Partition& p, const Partition& q) {
    require_same_space(p.space(), q.space(), "refines");
    for (const Subset& b : p.blocks())
        if (!q.block_containing(b.min_point()).contains(b)) return false;
    return true;
}

namespace {

// Minimal union-find over ground-set points.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

} // namespace

Partition overlap_components(const Partition& p, const Partition& q) {
    require_same_space(p.space(), q.space(), "overlap_components");
    GroundSet space = p.space();
    UnionFind uf(space.size());
    for (const Partition* part : {&p, &q})
        for (const Subset& b : part->blocks()) {
            int root = b.min_point();
            for (int point : b.points()) uf.unite(point, root);
        }
    std::vector<std::uint64_t> bits(space.size(), 0);
    for (int point = 0; point < space.size(); ++point)
        bits[uf.find(point)] |= std::uint64_t{1} << point;
    std::vector<Subset> blocks;
    for (std::uint64_t b : bits)
        if (b) blocks.emplace_back(space, b);
    return canonical_partition(space, std::move(blocks));
}

Partition common_refinement(const Partition& p, const Partition& q) {
    require_same_space(p.space(), q.space(), "common_refinement");
    std::vector<Subset> blocks;
    for (const Subset& a : p.blocks())
        for (const Subset& b : q.blocks()) {
            Subset cell = a & b;
            if (!cell.is_empty()) blocks.push_back(cell);
        }
    return canonical_partition(p.space(), std::move(blocks));
}

} // namespace siglat
