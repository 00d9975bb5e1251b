#include "siglat/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace siglat {

ProductSpace::ProductSpace(GroundSet left, GroundSet right) : left_(left), right_(right) {
    if (left.size() > kMaxGroundSize / right.size())
        throw std::invalid_argument("product space exceeds " +
                                    std::to_string(kMaxGroundSize) + " points");
}

int ProductSpace::index(int x, int u) const {
    if (x < 0 || x >= left_.size() || u < 0 || u >= right_.size())
        throw std::invalid_argument("product coordinates out of range");
    return x * right_.size() + u;
}

std::pair<int, int> ProductSpace::coords(int i) const {
    if (i < 0 || i >= total().size())
        throw std::invalid_argument("product index out of range");
    return {i / right_.size(), i % right_.size()};
}

namespace {

void require_on_product(const ProductSpace& ps, const GroundSet& space, const char* what) {
    if (!(space == ps.total()))
        throw std::invalid_argument(std::string(what) +
                                    ": subset does not live on the product space");
}

} // namespace

Subset rectangle(const ProductSpace& ps, const Subset& left, const Subset& right) {
    require_same_space(ps.left(), left.space(), "rectangle (left factor)");
    require_same_space(ps.right(), right.space(), "rectangle (right factor)");
    std::uint64_t bits = 0;
    for (int x : left.points())
        for (int u : right.points())
            bits |= std::uint64_t{1} << ps.index(x, u);
    return Subset(ps.total(), bits);
}

Subset project_left(const ProductSpace& ps, const Subset& s) {
    require_on_product(ps, s.space(), "project_left");
    std::uint64_t bits = 0;
    for (int i : s.points()) bits |= std::uint64_t{1} << ps.coords(i).first;
    return Subset(ps.left(), bits);
}

Subset project_right(const ProductSpace& ps, const Subset& s) {
    require_on_product(ps, s.space(), "project_right");
    std::uint64_t bits = 0;
    for (int i : s.points()) bits |= std::uint64_t{1} << ps.coords(i).second;
    return Subset(ps.right(), bits);
}

bool is_rectangle(const ProductSpace& ps, const Subset& s) {
    require_on_product(ps, s.space(), "is_rectangle");
    if (s.is_empty()) return true;
    return rectangle(ps, project_left(ps, s), project_right(ps, s)) == s;
}

Subset diagonal(const ProductSpace& ps) {
    if (!(ps.left() == ps.right()))
        throw std::invalid_argument("diagonal requires a square product space");
    std::uint64_t bits = 0;
    for (int x = 0; x < ps.left().size(); ++x)
        bits |= std::uint64_t{1} << ps.index(x, x);
    return Subset(ps.total(), bits);
}

SigmaAlgebra product(const SigmaAlgebra& a, const SigmaAlgebra& f) {
    ProductSpace ps(a.space(), f.space());
    std::vector<Subset> blocks;
    blocks.reserve(static_cast<std::size_t>(a.atom_count()) * f.atom_count());
    for (const Subset& atom_a : a.atoms().blocks())
        for (const Subset& atom_f : f.atoms().blocks())
            blocks.push_back(rectangle(ps, atom_a, atom_f));
    return SigmaAlgebra(canonical_partition(ps.total(), std::move(blocks)));
}

SigmaAlgebra transpose(const ProductSpace& ps, const SigmaAlgebra& h) {
    require_on_product(ps, h.space(), "transpose");
    ProductSpace flipped(ps.right(), ps.left());
    std::vector<Subset> blocks;
    blocks.reserve(h.atom_count());
    for (const Subset& atom : h.atoms().blocks()) {
        std::uint64_t bits = 0;
        for (int i : atom.points()) {
            auto [x, u] = ps.coords(i);
            bits |= std::uint64_t{1} << flipped.index(u, x);
        }
        blocks.emplace_back(flipped.total(), bits);
    }
    return SigmaAlgebra(canonical_partition(flipped.total(), std::move(blocks)));
}

std::optional<std::pair<SigmaAlgebra, SigmaAlgebra>>
product_form(const ProductSpace& ps, const SigmaAlgebra& h) {
    require_on_product(ps, h.space(), "product_form");
    std::vector<Subset> lefts, rights;
    for (const Subset& atom : h.atoms().blocks()) {
        if (!is_rectangle(ps, atom)) return std::nullopt;
        Subset l = project_left(ps, atom);
        Subset r = project_right(ps, atom);
        if (std::find(lefts.begin(), lefts.end(), l) == lefts.end()) lefts.push_back(l);
        if (std::find(rights.begin(), rights.end(), r) == rights.end()) rights.push_back(r);
    }
    // The distinct projections must each partition their factor, and every
    // pair must be an atom (a full grid); otherwise h has no product form.
    if (static_cast<std::size_t>(h.atom_count()) != lefts.size() * rights.size())
        return std::nullopt;
    std::uint64_t left_union = 0, right_union = 0;
    for (const Subset& l : lefts) {
        if (left_union & l.bits()) return std::nullopt;
        left_union |= l.bits();
    }
    for (const Subset& r : rights) {
        if (right_union & r.bits()) return std::nullopt;
        right_union |= r.bits();
    }
    if (left_union != Subset::full(ps.left()).bits()) return std::nullopt;
    if (right_union != Subset::full(ps.right()).bits()) return std::nullopt;
    SigmaAlgebra a0(canonical_partition(ps.left(), lefts));
    SigmaAlgebra e(canonical_partition(ps.right(), rights));
    if (!(product(a0, e) == h)) return std::nullopt;
    return std::make_pair(std::move(a0), std::move(e));
}

DistributivityReport distributivity_report(const SigmaAlgebra& a,
                                           const SigmaAlgebra& f,
                                           const SigmaAlgebra& g) {
    require_same_space(f.space(), g.space(), "distributivity_report");
    ProductSpace ps(a.space(), f.space());
    SigmaAlgebra lhs = meet(product(a, f), product(a, g));
    SigmaAlgebra rhs = product(a, meet(f, g));
    bool inclusion_ok = is_sub(rhs, lhs);
    bool equal = lhs == rhs;
    bool atoms_rectangles = true;
    for (const Subset& atom : lhs.atoms().blocks())
        if (!is_rectangle(ps, atom)) { atoms_rectangles = false; break; }
    return DistributivityReport{std::move(lhs), std::move(rhs), inclusion_ok, equal,
                                atoms_rectangles, equal == atoms_rectangles};
}

} // namespace siglat
