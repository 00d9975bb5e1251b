#ifndef SIGLAT_PRODUCT_HPP
#define SIGLAT_PRODUCT_HPP

#include "siglat/sigma.hpp"

#include <optional>
#include <utility>

namespace siglat {

/// The product of two ground sets, with the row-major index map
/// (x, u) -> x * |U| + u onto a ground set of |X| * |U| points.
class ProductSpace {
public:
    ProductSpace(GroundSet left, GroundSet right);

    GroundSet left() const { return left_; }
    GroundSet right() const { return right_; }
    GroundSet total() const { return GroundSet(left_.size() * right_.size()); }

    int index(int x, int u) const;
    std::pair<int, int> coords(int i) const;

    friend bool operator==(const ProductSpace&, const ProductSpace&) = default;

private:
    GroundSet left_;
    GroundSet right_;
};

/// The rectangle left x right as a subset of the product's ground set.
Subset rectangle(const ProductSpace& ps, const Subset& left, const Subset& right);

/// First (resp. second) coordinates occurring in s.
Subset project_left(const ProductSpace& ps, const Subset& s);
Subset project_right(const ProductSpace& ps, const Subset& s);

/// True iff s equals the product of its two projections. The empty set is a
/// rectangle (it is {} x {}).
bool is_rectangle(const ProductSpace& ps, const Subset& s);

/// The diagonal {(x, x)} of a square product space.
Subset diagonal(const ProductSpace& ps);

/// The product sigma-algebra A (x) F: the smallest sigma-algebra on X x U
/// containing all rectangles of members. Its atoms are exactly the grid of
/// atom pairs, computed directly.
SigmaAlgebra product(const SigmaAlgebra& a, const SigmaAlgebra& f);

/// The same sigma-algebra seen on U x X, with coordinates swapped.
SigmaAlgebra transpose(const ProductSpace& ps, const SigmaAlgebra& h);

/// Factors h as a product: present with (a0, e) iff the atoms of h form a
/// full grid {a x e : a atom of a0, e atom of e}; absent otherwise. The full
/// grid is required, so partial rectangle layouts are rejected.
std::optional<std::pair<SigmaAlgebra, SigmaAlgebra>>
product_form(const ProductSpace& ps, const SigmaAlgebra& h);

/// Evaluation of the distributivity equation
///   (A (x) F) meet (A (x) G)  ==  A (x) (F meet G)
/// on one instance, together with the atom-shape criterion that
/// characterizes when equality holds.
struct DistributivityReport {
    SigmaAlgebra lhs;        // (A (x) F) meet (A (x) G)
    SigmaAlgebra rhs;        // A (x) (F meet G)
    bool inclusion_ok;       // rhs is a sub-sigma-algebra of lhs
    bool equal;              // lhs == rhs
    bool atoms_rectangles;   // every atom of lhs is a rectangle
    bool equivalence_ok;     // equal <=> atoms_rectangles
};

/// Builds the report for sigma-algebras A on X and F, G on U.
DistributivityReport distributivity_report(const SigmaAlgebra& a,
                                           const SigmaAlgebra& f,
                                           const SigmaAlgebra& g);

} // namespace siglat

#endif
