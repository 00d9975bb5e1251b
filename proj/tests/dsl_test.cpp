#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siglat/dsl/eval.hpp"
#include "siglat/dsl/parser.hpp"
#include "siglat/dsl/printer.hpp"
#include "siglat/dsl/typecheck.hpp"
#include "siglat/verify.hpp"

#include <array>
#include <functional>
#include <random>

using namespace siglat;
using namespace siglat::dsl;

namespace {

SigmaAlgebra alg(GroundSet space, std::vector<std::vector<int>> blocks) {
    std::vector<Subset> subsets;
    for (const auto& b : blocks) subsets.push_back(Subset::of(space, b));
    return SigmaAlgebra(canonical_partition(space, std::move(subsets)));
}

const Expr& lhs_of(const Script& script, std::size_t i = 0) { return *script.checks[i].lhs; }

} // namespace

TEST_CASE("parse a complete script") {
    Script script = parse("space X=2\nspace U=3\nvar A:X\nvar F:U\nvar G:U\n"
                          "check (A*F)^(A*G) == A*(F^G)");
    CHECK(script.spaces.size() == 2);
    CHECK(script.vars.size() == 3);
    REQUIRE(script.checks.size() == 1);
    CHECK(script.checks[0].rel == Relation::Equal);
    CHECK(to_string(lhs_of(script)) == "A*F^A*G");
}

TEST_CASE("precedence: product binds tighter than meet, meet tighter than join") {
    Script a = parse("space X=2\nvar A:X\nvar F:X\nvar G:X\ncheck A*F^G == A\n");
    Script b = parse("space X=2\nvar A:X\nvar F:X\nvar G:X\ncheck (A*F)^G == A\n");
    CHECK(same_expr(lhs_of(a), lhs_of(b)));
    Script c = parse("space X=2\nvar A:X\nvar F:X\nvar G:X\ncheck A|F^G == A\n");
    Script d = parse("space X=2\nvar A:X\nvar F:X\nvar G:X\ncheck A|(F^G) == A\n");
    CHECK(same_expr(lhs_of(c), lhs_of(d)));
    Script e = parse("space X=2\nvar A:X\nvar F:X\nvar G:X\ncheck A^F^G == A\n");
    Script f = parse("space X=2\nvar A:X\nvar F:X\nvar G:X\ncheck (A^F)^G == A\n");
    CHECK(same_expr(lhs_of(e), lhs_of(f)));
}

TEST_CASE("parse errors carry position and expectation") {
    SUBCASE("truncated check") {
        try {
            parse("check A == ");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.expected() == "an expression");
            CHECK(std::string(e.what()).find("end of input") != std::string::npos);
        }
    }
    SUBCASE("position points at the offending token") {
        try {
            parse("space X = 2\nspace Y purple\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.pos().line == 2);
            CHECK(e.pos().col == 9);
            CHECK(e.expected() == "'='");
        }
    }
    SUBCASE("stray character") {
        CHECK_THROWS_AS(parse("space X = 2\ncheck $ == $\n"), ParseError);
    }
    SUBCASE("comments are skipped") {
        Script script = parse("# leading comment\nspace X = 1 # trailing\ncheck trivial(X) == trivial(X)\n");
        CHECK(script.spaces.size() == 1);
        CHECK(script.checks.size() == 1);
    }
}

TEST_CASE("partition literals") {
    auto blocks = parse_partition_literal("{{0},{1,2}}");
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0});
    CHECK(blocks[1] == std::vector<int>{1, 2});
    CHECK(partition_literal_string(blocks) == "{{0},{1,2}}");
    CHECK_THROWS_AS(parse_partition_literal("{{0},"), ParseError);
    CHECK_THROWS_AS(parse_partition_literal("{}"), ParseError);
}

TEST_CASE("typecheck annotates spaces") {
    Script script = parse("space X=2\nspace U=3\nvar A:X\nvar F:U\nvar G:U\n"
                          "check (A*F)^(A*G) == A*(F^G)\n");
    TypedScript typed = typecheck(script);
    const SpaceType& t = typed.expr_spaces.at(script.checks[0].lhs.get());
    CHECK(t.is_product());
    CHECK(t.to_string() == "X*U");
    CHECK(t.size() == 6);
}

TEST_CASE("typecheck rejects meets across spaces, naming both") {
    Script script = parse("space X=2\nspace U=3\nvar A:X\nvar F:U\ncheck A^F == A^F\n");
    try {
        typecheck(script);
        FAIL("expected TypeError");
    } catch (const TypeError& e) {
        std::string what = e.what();
        CHECK(what.find("meet requires identical spaces") != std::string::npos);
        CHECK(what.find("'X'") != std::string::npos);
        CHECK(what.find("'U'") != std::string::npos);
    }
}

TEST_CASE("typecheck validates declarations") {
    CHECK_THROWS_AS(typecheck(parse("space X=2\nspace X=3\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("var A : X\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("space X=2\nvar A:X\nvar A:X\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("space X=0\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("space X=2\ncheck A == A\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("space X=2\nlet P = {{0},{0,1}} : X\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("space X=2\nlet P = {{0}} : X\n")), TypeError);
    CHECK_THROWS_AS(typecheck(parse("space X=2\nlet P = {{0,5}} : X\n")), TypeError);
    CHECK_THROWS_AS(
        typecheck(parse("space X=2\nspace U=2\nvar A:X\nvar F:U\nconstrain A <= F\n")),
        TypeError);
    CHECK_NOTHROW(typecheck(parse("space X=2\nlet P = {{0},{1}} : X\ncheck P == P\n")));
}

TEST_CASE("relation sides must share a space") {
    Script script = parse("space X=2\nspace U=3\nvar A:X\nvar F:U\ncheck A == F\n");
    CHECK_THROWS_AS(typecheck(script), TypeError);
}

TEST_CASE("nested product space annotations format points as nested pairs") {
    Script script = parse("space X=2\nspace U=2\nspace V=2\nvar A:X\nvar F:U\nvar G:V\n"
                          "check (A*F)*G == (A*F)*G\n");
    TypedScript typed = typecheck(script);
    const SpaceType& t = typed.expr_spaces.at(script.checks[0].lhs.get());
    CHECK(t.to_string() == "(X*U)*V");
    CHECK(t.size() == 8);
    CHECK(t.format_point(0) == "((0,0),0)");
    CHECK(t.format_point(7) == "((1,1),1)");
}

TEST_CASE("evaluate worked examples") {
    GroundSet u(3);
    SpaceSizes sizes{{"U", 3}};
    SUBCASE("trivial constant") {
        Script script = parse("space U=3\ncheck trivial(U) == trivial(U)\n");
        SigmaAlgebra value = evaluate(lhs_of(script), {}, sizes);
        CHECK(value == SigmaAlgebra::trivial(u));
    }
    SUBCASE("meet idempotence through the evaluator") {
        Script script = parse("space U=3\nvar A:U\ncheck A^A == A\n");
        Assignment assignment;
        assignment.emplace("A", alg(u, {{0}, {1, 2}}));
        CHECK(evaluate(lhs_of(script), assignment, sizes) == assignment.at("A"));
        CHECK(holds(script.checks[0], assignment, sizes));
    }
    SUBCASE("the three-point witness evaluates to the discrete algebra") {
        Script script = parse("space U=3\nvar A:U\nvar F:U\nvar G:U\n"
                              "check (A|F)^(A|G) == A|(F^G)\n");
        Assignment assignment;
        assignment.emplace("A", alg(u, {{0}, {1, 2}}));
        assignment.emplace("F", alg(u, {{1}, {0, 2}}));
        assignment.emplace("G", alg(u, {{2}, {0, 1}}));
        CHECK(evaluate(lhs_of(script), assignment, sizes) == SigmaAlgebra::discrete(u));
        CHECK(evaluate(*script.checks[0].rhs, assignment, sizes) == assignment.at("A"));
        CHECK_FALSE(holds(script.checks[0], assignment, sizes));
    }
    SUBCASE("unassigned variables are named") {
        Script script = parse("space U=3\nvar A:U\ncheck A == A\n");
        CHECK_THROWS_WITH_AS(evaluate(lhs_of(script), {}, sizes), doctest::Contains("'A'"),
                             std::invalid_argument);
    }
}

TEST_CASE("the one-sided inclusion holds through the evaluator") {
    Script script = parse("space X=2\nspace U=3\nvar A:X\nvar F:U\nvar G:U\n"
                          "check A*(F^G) <= (A*F)^(A*G)\n");
    SpaceSizes sizes = declared_sizes(script);
    GroundSet x(2), u(3);
    Assignment assignment;
    assignment.emplace("A", SigmaAlgebra::discrete(x));
    assignment.emplace("F", alg(u, {{1}, {0, 2}}));
    assignment.emplace("G", alg(u, {{2}, {0, 1}}));
    CHECK(holds(script.checks[0], assignment, sizes));
}

TEST_CASE("let declarations produce canonical fixed assignments") {
    Script script = parse("space X=3\nlet P = {{1,2},{0}} : X\ncheck P == P\n");
    Assignment lets = let_assignment(script, declared_sizes(script));
    CHECK(lets.at("P").atoms().to_string() == "{{0},{1,2}}");
}

TEST_CASE("pretty-printer round trips the golden corpus") {
    const auto& corpus = verify::parser_corpus();
    CHECK(corpus.size() >= 20);
    for (const std::string& text : corpus) {
        Script first = parse(text);
        std::string printed = to_string(first);
        Script second = parse(printed);
        CHECK(same_script(first, second));
        // printing is a fixed point after one round
        CHECK(to_string(second) == printed);
    }
}

TEST_CASE("printing any expression tree re-parses to the same tree") {
    // hand-rolled generator over a fixed variable pool
    std::mt19937_64 rng(20240817);
    auto pick = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };
    std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
        auto node = std::make_unique<Expr>();
        if (depth == 0 || pick(4) == 0) {
            switch (pick(3)) {
                case 0: node->node = VarRef{std::string(1, static_cast<char>('A' + pick(4)))}; break;
                case 1: node->node = ConstAlg{ConstKind::Discrete, "X"}; break;
                default: node->node = ConstAlg{ConstKind::Trivial, "X"}; break;
            }
            return node;
        }
        BinOp op = std::array{BinOp::Product, BinOp::Meet, BinOp::Join}[pick(3)];
        node->node = Binary{op, gen(depth - 1), gen(depth - 1)};
        return node;
    };
    for (int trial = 0; trial < 300; ++trial) {
        ExprPtr tree = gen(4);
        std::string text = "space X=2\nvar A:X\nvar B:X\nvar C:X\nvar D:X\ncheck " +
                           to_string(*tree) + " == " + to_string(*tree) + "\n";
        Script parsed = parse(text);
        CHECK(same_expr(*parsed.checks[0].lhs, *tree));
        CHECK(same_expr(*parsed.checks[0].rhs, *tree));
    }
}

TEST_CASE("printer inserts parentheses only where the tree needs them") {
    Script script = parse("space X=2\nvar A:X\nvar B:X\nvar C:X\n"
                          "check A|(B^C) == (A|B)^C\n");
    CHECK(to_string(lhs_of(script)) == "A|B^C");
    CHECK(to_string(*script.checks[0].rhs) == "(A|B)^C");
    Script right = parse("space X=2\nvar A:X\nvar B:X\nvar C:X\ncheck A^(B^C) == A\n");
    CHECK(to_string(lhs_of(right)) == "A^(B^C)");
}
