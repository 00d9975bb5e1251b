#include "siglat/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace siglat {

namespace {

void require_positive(int n, int cap, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
    if (n > cap)
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                    " exceeds supported maximum " + std::to_string(cap));
}

// ways[i][m]: completions of an RGS from position i when the prefix maximum
// is m. ways[n][*] = 1; ways[i][m] = (m+1)*ways[i+1][m] + ways[i+1][m+1].
std::vector<std::vector<std::uint64_t>> completion_table(int n) {
    std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int m = 0; m <= n; ++m) ways[n][m] = 1;
    for (int i = n - 1; i >= 1; --i)
        for (int m = 0; m < n; ++m)
            ways[i][m] = static_cast<std::uint64_t>(m + 1) * ways[i + 1][m] + ways[i + 1][m + 1];
    return ways;
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    require_positive(n, kMaxEnumerationSize, "enumerate_partitions");
    GroundSet space(n);
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    while (true) {
        out.push_back(Partition::from_rgs(space, rgs));
        // advance to the next restricted growth string in lexicographic order
        int i = n - 1;
        for (; i >= 1; --i) {
            int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

std::uint64_t partition_count(int n) {
    require_positive(n, kMaxSampleSize, "partition_count");
    return completion_table(n)[1][0];
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % n;
}

Partition sample_partition(GroundSet space, std::mt19937_64& rng) {
    int n = space.size();
    require_positive(n, kMaxSampleSize, "sample_partition");
    auto ways = completion_table(n);
    std::vector<int> rgs(n, 0);
    int max_seen = 0;
    for (int i = 1; i < n; ++i) {
        // digit d in 0..max_seen keeps the maximum, d = max_seen+1 raises it
        std::uint64_t keep = ways[i + 1][max_seen];
        std::uint64_t raise = ways[i + 1][max_seen + 1];
        std::uint64_t total = static_cast<std::uint64_t>(max_seen + 1) * keep + raise;
        std::uint64_t t = uniform_below(rng, total);
        if (t < static_cast<std::uint64_t>(max_seen + 1) * keep) {
            rgs[i] = static_cast<int>(t / keep);
        } else {
            rgs[i] = ++max_seen;
        }
    }
    return Partition::from_rgs(space, rgs);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace siglat
