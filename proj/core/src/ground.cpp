#include "siglat/ground.hpp"

#include <bit>
#include <stdexcept>

namespace siglat {

GroundSet::GroundSet(int size) : size_(size) {
    if (size < 1)
        throw std::invalid_argument("ground set must have at least one point");
    if (size > kMaxGroundSize)
        throw std::invalid_argument("ground set larger than " +
                                    std::to_string(kMaxGroundSize) + " points");
}

void require_same_space(const GroundSet& a, const GroundSet& b, const char* what) {
    if (!(a == b))
        throw std::invalid_argument(std::string(what) + ": mismatched ground sets (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + " points)");
}

namespace {
std::uint64_t full_bits(int size) {
    return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}
} // namespace

Subset::Subset(GroundSet space, std::uint64_t bits) : space_(space), bits_(bits) {
    if (bits & ~full_bits(space.size()))
        throw std::invalid_argument("subset has points outside its ground set");
}

Subset Subset::full(GroundSet space) { return {space, full_bits(space.size())}; }

Subset Subset::single(GroundSet space, int point) {
    if (point < 0 || point >= space.size())
        throw std::invalid_argument("point " + std::to_string(point) +
                                    " outside ground set of size " +
                                    std::to_string(space.size()));
    return {space, std::uint64_t{1} << point};
}

Subset Subset::of(GroundSet space, std::initializer_list<int> points) {
    return of(space, std::vector<int>(points));
}

Subset Subset::of(GroundSet space, const std::vector<int>& points) {
    std::uint64_t bits = 0;
    for (int p : points) bits |= single(space, p).bits();
    return {space, bits};
}

bool Subset::test(int point) const {
    return point >= 0 && point < space_.size() && (bits_ >> point & 1);
}

int Subset::count() const { return std::popcount(bits_); }

int Subset::min_point() const {
    if (bits_ == 0) throw std::logic_error("min_point of empty subset");
    return std::countr_zero(bits_);
}

std::vector<int> Subset::points() const {
    std::vector<int> out;
    for (int p = 0; p < space_.size(); ++p)
        if (bits_ >> p & 1) out.push_back(p);
    return out;
}

Subset Subset::complement() const { return {space_, ~bits_ & full_bits(space_.size())}; }

bool Subset::contains(const Subset& other) const {
    require_same_space(space_, other.space_, "contains");
    return (other.bits_ & ~bits_) == 0;
}

bool Subset::intersects(const Subset& other) const {
    require_same_space(space_, other.space_, "intersects");
    return (bits_ & other.bits_) != 0;
}

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int p : points()) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

Subset operator|(const Subset& a, const Subset& b) {
    require_same_space(a.space_, b.space_, "union");
    return {a.space_, a.bits_ | b.bits_};
}

Subset operator&(const Subset& a, const Subset& b) {
    require_same_space(a.space_, b.space_, "intersection");
    return {a.space_, a.bits_ & b.bits_};
}

Subset operator-(const Subset& a, const Subset& b) {
    require_same_space(a.space_, b.space_, "difference");
    return {a.space_, a.bits_ & ~b.bits_};
}

} // namespace siglat
