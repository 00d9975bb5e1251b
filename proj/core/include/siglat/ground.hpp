#ifndef SIGLAT_GROUND_HPP
#define SIGLAT_GROUND_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace siglat {

/// Widest ground set a Subset bit-vector can hold.
inline constexpr int kMaxGroundSize = 64;

/// A finite set of points labeled 0..size-1.
class GroundSet {
public:
    explicit GroundSet(int size);

    int size() const { return size_; }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    int size_;
};

/// A subset of a ground set, stored as a bit-vector (bit p = point p).
class Subset {
public:
    Subset(GroundSet space, std::uint64_t bits);

    static Subset empty(GroundSet space) { return {space, 0}; }
    static Subset full(GroundSet space);
    static Subset single(GroundSet space, int point);
    static Subset of(GroundSet space, std::initializer_list<int> points);
    static Subset of(GroundSet space, const std::vector<int>& points);

    GroundSet space() const { return space_; }
    std::uint64_t bits() const { return bits_; }

    bool test(int point) const;
    bool is_empty() const { return bits_ == 0; }
    int count() const;
    /// Smallest point in the set; requires a nonempty set.
    int min_point() const;
    std::vector<int> points() const;

    Subset complement() const;
    bool contains(const Subset& other) const;   // other ⊆ this
    bool intersects(const Subset& other) const;

    /// Renders as "{0,2,5}"; the empty set as "{}".
    std::string to_string() const;

    friend Subset operator|(const Subset& a, const Subset& b);
    friend Subset operator&(const Subset& a, const Subset& b);
    friend Subset operator-(const Subset& a, const Subset& b);
    friend bool operator==(const Subset&, const Subset&) = default;

private:
    GroundSet space_;
    std::uint64_t bits_;
};

/// Throws std::invalid_argument unless both values live on the same ground set.
void require_same_space(const GroundSet& a, const GroundSet& b, const char* what);

} // namespace siglat

#endif
