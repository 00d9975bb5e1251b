#ifndef SIGLAT_SIGMA_HPP
#define SIGLAT_SIGMA_HPP

#include "siglat/partition.hpp"

#include <span>

namespace siglat {

/// A sigma-algebra on a finite ground set, represented by its atom
/// partition. The represented family is exactly the unions of atoms, so two
/// sigma-algebras are equal iff their atom partitions are.
class SigmaAlgebra {
public:
    explicit SigmaAlgebra(Partition atoms) : atoms_(std::move(atoms)) {}

    static SigmaAlgebra trivial(GroundSet space) { return SigmaAlgebra(Partition::trivial(space)); }
    static SigmaAlgebra discrete(GroundSet space) { return SigmaAlgebra(Partition::discrete(space)); }

    GroundSet space() const { return atoms_.space(); }
    const Partition& atoms() const { return atoms_; }
    int atom_count() const { return atoms_.block_count(); }

    friend bool operator==(const SigmaAlgebra&, const SigmaAlgebra&) = default;

private:
    Partition atoms_;
};

/// Smallest sigma-algebra containing every set of the family. The atom of a
/// point x is the intersection over all generators S of (S if x is in S,
/// else the complement of S); with an empty family this is the trivial
/// sigma-algebra.
SigmaAlgebra generate(GroundSet space, std::span<const Subset> family);

/// True iff s is a union of atoms of f (equivalently, s splits no atom).
bool contains(const SigmaAlgebra& f, const Subset& s);

/// The intersection of two sigma-algebras: the largest sigma-algebra
/// contained in both. Atoms are the overlap components of the atom
/// partitions.
SigmaAlgebra meet(const SigmaAlgebra& f, const SigmaAlgebra& g);

/// The smallest sigma-algebra containing both. Atoms are the nonempty
/// pairwise intersections of atoms.
SigmaAlgebra join(const SigmaAlgebra& f, const SigmaAlgebra& g);

/// True iff every member of f is a member of g.
bool is_sub(const SigmaAlgebra& f, const SigmaAlgebra& g);

/// True iff every atom is a singleton (the finite form of a countably
/// separated space).
bool separates_points(const SigmaAlgebra& f);

} // namespace siglat

#endif
