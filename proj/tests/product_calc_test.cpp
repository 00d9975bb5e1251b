#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "siglat/enumeration.hpp"
#include "siglat/product.hpp"

using namespace siglat;

namespace {

SigmaAlgebra alg(GroundSet space, std::vector<std::vector<int>> blocks) {
    std::vector<Subset> subsets;
    for (const auto& b : blocks) subsets.push_back(Subset::of(space, b));
    return SigmaAlgebra(canonical_partition(space, std::move(subsets)));
}

std::vector<SigmaAlgebra> all_algebras(int n) {
    std::vector<SigmaAlgebra> out;
    for (const Partition& p : enumerate_partitions(n)) out.emplace_back(p);
    return out;
}

} // namespace

TEST_CASE("product space index map is row-major and bijective") {
    ProductSpace ps{GroundSet(2), GroundSet(3)};
    CHECK(ps.total().size() == 6);
    CHECK(ps.index(0, 0) == 0);
    CHECK(ps.index(0, 2) == 2);
    CHECK(ps.index(1, 0) == 3);
    for (int i = 0; i < 6; ++i) {
        auto [x, u] = ps.coords(i);
        CHECK(ps.index(x, u) == i);
    }
    CHECK_THROWS_AS(ps.index(2, 0), std::invalid_argument);
    CHECK_THROWS_AS((ProductSpace{GroundSet(13), GroundSet(5)}), std::invalid_argument);
    CHECK((ProductSpace{GroundSet(8), GroundSet(8)}).total().size() == 64);
}

TEST_CASE("projections read off coordinates") {
    ProductSpace ps{GroundSet(2), GroundSet(2)};
    Subset one(ps.total(), 0);
    SUBCASE("single point") {
        Subset s = Subset::single(ps.total(), ps.index(0, 1));
        CHECK(project_left(ps, s) == Subset::of(ps.left(), {0}));
        CHECK(project_right(ps, s) == Subset::of(ps.right(), {1}));
    }
    SUBCASE("empty set") {
        Subset s = Subset::empty(ps.total());
        CHECK(project_left(ps, s).is_empty());
        CHECK(project_right(ps, s).is_empty());
    }
    SUBCASE("diagonal") {
        Subset s = diagonal(ps);
        CHECK(project_left(ps, s) == Subset::full(ps.left()));
        CHECK(project_right(ps, s) == Subset::full(ps.right()));
    }
    SUBCASE("wrong space rejected") {
        CHECK_THROWS_AS(project_left(ps, Subset::empty(GroundSet(3))), std::invalid_argument);
    }
}

TEST_CASE("is_rectangle") {
    ProductSpace ps{GroundSet(2), GroundSet(3)};
    Subset rect_set = rectangle(ps, Subset::of(ps.left(), {0, 1}), Subset::of(ps.right(), {2}));
    CHECK(is_rectangle(ps, rect_set));
    CHECK(is_rectangle(ps, Subset::empty(ps.total())));
    ProductSpace sq{GroundSet(2), GroundSet(2)};
    CHECK_FALSE(is_rectangle(sq, diagonal(sq)));
    CHECK_THROWS_AS(is_rectangle(ps, Subset::empty(GroundSet(5))), std::invalid_argument);
}

TEST_CASE("diagonal of the 2x2 square") {
    ProductSpace sq{GroundSet(2), GroundSet(2)};
    CHECK(diagonal(sq).bits() == 0b1001);
    CHECK_THROWS_AS(diagonal(ProductSpace{GroundSet(2), GroundSet(3)}), std::invalid_argument);
}

TEST_CASE("product worked examples") {
    GroundSet x(2), u(3);
    SigmaAlgebra f = alg(u, {{0, 1}, {2}});
    SUBCASE("trivial left factor collapses") {
        SigmaAlgebra p = product(SigmaAlgebra::trivial(x), f);
        CHECK(p.atom_count() == 2);
        CHECK(p.atoms().to_string() == "{{0,1,3,4},{2,5}}");   // X x {0,1} and X x {2}
    }
    SUBCASE("discrete times discrete is discrete") {
        CHECK(product(SigmaAlgebra::discrete(x), SigmaAlgebra::discrete(u)) ==
              SigmaAlgebra::discrete(GroundSet(6)));
    }
    SUBCASE("two by three grid") {
        SigmaAlgebra a = SigmaAlgebra::discrete(x);
        SigmaAlgebra p = product(a, f);
        CHECK(p.atom_count() == 4);
        CHECK(p.atoms().to_string() == "{{0,1},{2},{3,4},{5}}");
    }
}

TEST_CASE("atom count is multiplicative for all pairs, sizes <= 4") {
    for (int nx = 1; nx <= 4; ++nx)
        for (int nu = 1; nu <= 4; ++nu)
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu))
                    CHECK(product(a, f).atom_count() == a.atom_count() * f.atom_count());
}

TEST_CASE("grid product equals generation from member rectangles, sizes <= 3") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int nu = 1; nu <= 3; ++nu)
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu)) {
                    oracle::Family expected = oracle::family_product(
                        nx, nu, oracle::family_of(a), oracle::family_of(f));
                    CHECK(oracle::blocks_bits(product(a, f).atoms()) ==
                          oracle::family_atoms(expected));
                }
}

TEST_CASE("product_form round trips every product, sizes <= 3") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int nu = 1; nu <= 3; ++nu) {
            ProductSpace ps{GroundSet(nx), GroundSet(nu)};
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu)) {
                    auto factored = product_form(ps, product(a, f));
                    REQUIRE(factored.has_value());
                    CHECK(factored->first == a);
                    CHECK(factored->second == f);
                }
        }
}

TEST_CASE("product_form of the trivial algebra is a pair of trivials") {
    ProductSpace ps{GroundSet(2), GroundSet(3)};
    auto factored = product_form(ps, SigmaAlgebra::trivial(ps.total()));
    REQUIRE(factored.has_value());
    CHECK(factored->first == SigmaAlgebra::trivial(ps.left()));
    CHECK(factored->second == SigmaAlgebra::trivial(ps.right()));
}

TEST_CASE("the diagonal-generated algebra has no product form") {
    ProductSpace sq{GroundSet(2), GroundSet(2)};
    std::vector<Subset> gens = {diagonal(sq)};
    SigmaAlgebra h = generate(sq.total(), gens);
    CHECK(h.atoms().to_string() == "{{0,3},{1,2}}");   // diagonal and antidiagonal
    CHECK_FALSE(product_form(sq, h).has_value());
}

TEST_CASE("absent product_form really means no factorization exists, sizes <= 2") {
    for (int nx = 1; nx <= 2; ++nx)
        for (int nu = 1; nu <= 2; ++nu) {
            ProductSpace ps{GroundSet(nx), GroundSet(nu)};
            for (const Partition& p : enumerate_partitions(nx * nu)) {
                SigmaAlgebra h(p);
                if (product_form(ps, h)) continue;
                for (const auto& a0 : all_algebras(nx))
                    for (const auto& e : all_algebras(nu))
                        CHECK_FALSE(product(a0, e) == h);
            }
        }
}

TEST_CASE("distributivity_report worked examples") {
    GroundSet x(3), u(3);
    SigmaAlgebra a = alg(x, {{0}, {1, 2}});
    SigmaAlgebra f = alg(u, {{1}, {0, 2}});
    SigmaAlgebra g = alg(u, {{2}, {0, 1}});
    SUBCASE("equal factors") {
        DistributivityReport rep = distributivity_report(a, f, f);
        CHECK(rep.equal);
        CHECK(rep.lhs == product(a, f));
    }
    SUBCASE("nested factors") {
        SigmaAlgebra sub = SigmaAlgebra::trivial(u);
        DistributivityReport rep = distributivity_report(a, sub, g);   // sub is below g
        REQUIRE(is_sub(sub, g));
        CHECK(rep.equal);
    }
    SUBCASE("three-point example evaluates equal with rectangle atoms") {
        DistributivityReport rep = distributivity_report(a, f, g);
        CHECK(rep.equal);
        CHECK(rep.atoms_rectangles);
        CHECK(rep.inclusion_ok);
        CHECK(rep.equivalence_ok);
        // cross-check both sides against the explicit-family route
        oracle::Family fa = oracle::family_of(a);
        oracle::Family ff = oracle::family_of(f);
        oracle::Family fg = oracle::family_of(g);
        oracle::Family lhs = oracle::family_meet(oracle::family_product(3, 3, fa, ff),
                                                 oracle::family_product(3, 3, fa, fg));
        oracle::Family rhs =
            oracle::family_product(3, 3, fa, oracle::family_meet(ff, fg));
        CHECK(oracle::blocks_bits(rep.lhs.atoms()) == oracle::family_atoms(lhs));
        CHECK(oracle::blocks_bits(rep.rhs.atoms()) == oracle::family_atoms(rhs));
    }
    SUBCASE("factors on different spaces rejected") {
        CHECK_THROWS_AS(distributivity_report(a, f, SigmaAlgebra::trivial(GroundSet(2))),
                        std::invalid_argument);
    }
}

TEST_CASE("reports satisfy the finite lattice properties exhaustively, sizes <= 3") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int nu = 1; nu <= 3; ++nu)
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu))
                    for (const auto& g : all_algebras(nu)) {
                        DistributivityReport rep = distributivity_report(a, f, g);
                        CHECK(rep.inclusion_ok);
                        CHECK(rep.equivalence_ok);
                        CHECK(rep.equal);   // finite models are distributive
                        if (is_sub(f, g) || is_sub(g, f)) CHECK(rep.equal);
                        if (separates_points(rep.lhs)) {
                            // singleton atoms are rectangles, forcing equality
                            CHECK(rep.atoms_rectangles);
                            CHECK(rep.equal);
                        }
                        // product form of the meet side exists exactly when equal
                        ProductSpace ps{GroundSet(nx), GroundSet(nu)};
                        CHECK(product_form(ps, rep.lhs).has_value() == rep.equal);
                    }
}

TEST_CASE("join distributes over the product exhaustively, sizes <= 3") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int nu = 1; nu <= 3; ++nu)
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu))
                    for (const auto& g : all_algebras(nu))
                        CHECK(join(product(a, f), product(a, g)) == product(a, join(f, g)));
}

TEST_CASE("transpose mirrors the index map") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int nu = 1; nu <= 3; ++nu) {
            ProductSpace ps{GroundSet(nx), GroundSet(nu)};
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu))
                    CHECK(transpose(ps, product(a, f)) == product(f, a));
        }
}

TEST_CASE("distributivity reports are invariant under transposing all inputs, sizes <= 3") {
    for (int nx = 1; nx <= 3; ++nx)
        for (int nu = 1; nu <= 3; ++nu) {
            ProductSpace ps{GroundSet(nx), GroundSet(nu)};
            ProductSpace flipped{GroundSet(nu), GroundSet(nx)};
            for (const auto& a : all_algebras(nx))
                for (const auto& f : all_algebras(nu))
                    for (const auto& g : all_algebras(nu)) {
                        DistributivityReport rep = distributivity_report(a, f, g);
                        SigmaAlgebra mirrored_lhs = meet(product(f, a), product(g, a));
                        SigmaAlgebra mirrored_rhs = product(meet(f, g), a);
                        CHECK(transpose(ps, rep.lhs) == mirrored_lhs);
                        CHECK(transpose(ps, rep.rhs) == mirrored_rhs);
                        CHECK((mirrored_lhs == mirrored_rhs) == rep.equal);
                        bool mirrored_rects = true;
                        for (const Subset& atom : mirrored_lhs.atoms().blocks())
                            if (!is_rectangle(flipped, atom)) mirrored_rects = false;
                        CHECK(mirrored_rects == rep.atoms_rectangles);
                    }
        }
}

TEST_CASE("diagonal membership characterizes point separation, |X| <= 4") {
    for (int n = 1; n <= 4; ++n) {
        ProductSpace sq{GroundSet(n), GroundSet(n)};
        for (const auto& f : all_algebras(n))
            CHECK(contains(product(f, f), diagonal(sq)) == separates_points(f));
    }
}
