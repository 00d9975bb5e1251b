// Test-side oracles, independent of the partition-based implementation:
// sigma-algebras as explicit membership tables over all 2^n subsets, closed
// by fixpoint, and a recursive set-partition enumerator. Used to compute
// expected values the library must reproduce.
#ifndef SIGLAT_TESTS_ORACLE_HPP
#define SIGLAT_TESTS_ORACLE_HPP

#include "siglat/partition.hpp"
#include "siglat/sigma.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using std::uint64_t;

// --- explicit sigma-algebra families -------------------------------------

struct Family {
    int n = 0;
    std::vector<char> member;   // indexed by subset bitmask

    bool operator==(const Family& o) const = default;
    bool has(uint64_t s) const { return member[s] != 0; }
};

inline uint64_t full_mask(int n) { return (uint64_t{1} << n) - 1; }

inline Family closure(int n, const std::vector<uint64_t>& generators) {
    Family fam{n, std::vector<char>(uint64_t{1} << n, 0)};
    std::vector<uint64_t> work;
    auto add = [&](uint64_t s) {
        if (!fam.member[s]) { fam.member[s] = 1; work.push_back(s); }
    };
    add(0);
    add(full_mask(n));
    for (uint64_t g : generators) add(g & full_mask(n));
    for (std::size_t i = 0; i < work.size(); ++i) {
        add(~work[i] & full_mask(n));
        for (std::size_t j = 0; j <= i; ++j) add(work[i] | work[j]);
    }
    return fam;
}

inline Family family_meet(const Family& f, const Family& g) {
    Family out{f.n, std::vector<char>(f.member.size(), 0)};
    for (std::size_t s = 0; s < f.member.size(); ++s)
        out.member[s] = f.member[s] && g.member[s];
    return out;
}

inline Family family_join(const Family& f, const Family& g) {
    std::vector<uint64_t> gens;
    for (uint64_t s = 0; s < f.member.size(); ++s)
        if (f.member[s] || g.member[s]) gens.push_back(s);
    return closure(f.n, gens);
}

inline bool family_sub(const Family& f, const Family& g) {
    for (std::size_t s = 0; s < f.member.size(); ++s)
        if (f.member[s] && !g.member[s]) return false;
    return true;
}

inline std::size_t family_size(const Family& f) {
    std::size_t count = 0;
    for (char m : f.member) count += m != 0;
    return count;
}

// minimal nonempty members, sorted by their smallest point
inline std::vector<uint64_t> family_atoms(const Family& f) {
    std::vector<uint64_t> members;
    for (uint64_t s = 1; s < f.member.size(); ++s)
        if (f.member[s]) members.push_back(s);
    std::vector<uint64_t> atoms;
    for (uint64_t a : members) {
        bool minimal = true;
        for (uint64_t b : members)
            if (b != a && (b & a) == b) { minimal = false; break; }
        if (minimal) atoms.push_back(a);
    }
    std::sort(atoms.begin(), atoms.end(),
              [](uint64_t x, uint64_t y) { return (x & (~x + 1)) < (y & (~y + 1)); });
    return atoms;
}

// product family on nx*nu points, index (x,u) -> x*nu+u
inline uint64_t rect_mask(int nu, uint64_t left, uint64_t right) {
    uint64_t r = 0;
    for (int x = 0; x < 64; ++x)
        if (left >> x & 1)
            for (int u = 0; u < nu; ++u)
                if (right >> u & 1) r |= uint64_t{1} << (x * nu + u);
    return r;
}

inline Family family_product(int nx, int nu, const Family& a, const Family& f) {
    std::vector<uint64_t> gens;
    for (uint64_t s = 0; s < a.member.size(); ++s)
        if (a.member[s])
            for (uint64_t t = 0; t < f.member.size(); ++t)
                if (f.member[t]) gens.push_back(rect_mask(nu, s, t));
    return closure(nx * nu, gens);
}

// --- bridging to library values ------------------------------------------

inline std::vector<uint64_t> blocks_bits(const siglat::Partition& p) {
    std::vector<uint64_t> out;
    for (const siglat::Subset& b : p.blocks()) out.push_back(b.bits());
    return out;
}

inline Family family_of(const siglat::SigmaAlgebra& s) {
    return closure(s.space().size(), blocks_bits(s.atoms()));
}

// --- independent partition enumeration -----------------------------------
// Recursive scheme: the block containing the smallest remaining point is
// chosen as that point plus any subset of the other remaining points.
inline void partitions_rec(uint64_t remaining, std::vector<uint64_t>& acc,
                           std::vector<std::vector<uint64_t>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    uint64_t low = remaining & (~remaining + 1);
    uint64_t rest = remaining ^ low;
    // iterate over all subsets of rest
    uint64_t sub = 0;
    while (true) {
        acc.push_back(low | sub);
        partitions_rec(rest ^ sub, acc, out);
        acc.pop_back();
        if (sub == rest) break;
        sub = (sub - rest) & rest;
    }
}

inline std::vector<std::vector<uint64_t>> all_partitions_bruteforce(int n) {
    std::vector<std::vector<uint64_t>> out;
    std::vector<uint64_t> acc;
    partitions_rec(full_mask(n), acc, out);
    for (auto& blocks : out)
        std::sort(blocks.begin(), blocks.end(),
                  [](uint64_t x, uint64_t y) { return (x & (~x + 1)) < (y & (~y + 1)); });
    return out;
}

// restricted growth string of a canonical block list
inline std::vector<int> rgs_of(const std::vector<uint64_t>& blocks, int n) {
    std::vector<int> rgs(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int p = 0; p < n; ++p)
            if (blocks[b] >> p & 1) rgs[p] = static_cast<int>(b);
    return rgs;
}

} // namespace oracle

#endif
