#include "siglat/sigma.hpp"

namespace siglat {

SigmaAlgebra generate(GroundSet space, std::span<const Subset> family) {
    // Split the trivial partition by each generator in turn; the result is
    // the common refinement of all {S, ~S}, whose block at x is exactly the
    // intersection of each generator or its complement by membership of x.
    std::vector<Subset> blocks = {Subset::full(space)};
    for (const Subset& gen : family) {
        require_same_space(space, gen.space(), "generate");
        std::vector<Subset> next;
        next.reserve(blocks.size() * 2);
        for (const Subset& b : blocks) {
            Subset inside = b & gen;
            Subset outside = b - gen;
            if (!inside.is_empty()) next.push_back(inside);
            if (!outside.is_empty()) next.push_back(outside);
        }
        blocks = std::move(next);
    }
    return SigmaAlgebra(canonical_partition(space, std::move(blocks)));
}

bool contains(const SigmaAlgebra& f, const Subset& s) {
    require_same_space(f.space(), s.space(), "contains");
    for (const Subset& atom : f.atoms().blocks()) {
        Subset cut = atom & s;
        if (!cut.is_empty() && !(cut == atom)) return false;
    }
    return true;
}

SigmaAlgebra meet(const SigmaAlgebra& f, const SigmaAlgebra& g) {
    require_same_space(f.space(), g.space(), "meet");
    return SigmaAlgebra(overlap_components(f.atoms(), g.atoms()));
}

SigmaAlgebra join(const SigmaAlgebra& f, const SigmaAlgebra& g) {
    require_same_space(f.space(), g.space(), "join");
    return SigmaAlgebra(common_refinement(f.atoms(), g.atoms()));
}

bool is_sub(const SigmaAlgebra& f, const SigmaAlgebra& g) {
    require_same_space(f.space(), g.space(), "is_sub");
    return refines(g.atoms(), f.atoms());
}

bool separates_points(const SigmaAlgebra& f) {
    for (const Subset& atom : f.atoms().blocks())
        if (atom.count() != 1) return false;
    return true;
}

} // namespace siglat
