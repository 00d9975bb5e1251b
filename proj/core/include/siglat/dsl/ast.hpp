#ifndef SIGLAT_DSL_AST_HPP
#define SIGLAT_DSL_AST_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace siglat::dsl {

struct SourcePos {
    int line = 1;
    int col = 1;
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class BinOp { Product, Meet, Join };          // * ^ |
enum class Relation { Equal, Sub };                // == <=
enum class ConstKind { Discrete, Trivial };

const char* spelling(BinOp op);
const char* spelling(Relation rel);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct VarRef {
    std::string name;
};

struct ConstAlg {
    ConstKind kind;
    std::string space;
};

struct Binary {
    BinOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    std::variant<VarRef, ConstAlg, Binary> node;
    SourcePos pos;
};

/// Structural equality, ignoring source positions.
bool same_expr(const Expr& a, const Expr& b);

struct SpaceDecl {
    std::string name;
    int size;
    SourcePos pos;
};

struct VarDecl {
    std::string name;
    std::string space;
    SourcePos pos;
};

struct LetDecl {
    std::string name;
    std::vector<std::vector<int>> blocks;   // partition literal
    std::string space;
    SourcePos pos;
};

struct ConstrainDecl {
    std::string finer;     // constrain finer <= coarser
    std::string coarser;
    SourcePos pos;
};

struct CheckDecl {
    ExprPtr lhs;
    Relation rel;
    ExprPtr rhs;
    SourcePos pos;
};

struct Script {
    std::vector<SpaceDecl> spaces;
    std::vector<VarDecl> vars;
    std::vector<LetDecl> lets;
    std::vector<ConstrainDecl> constraints;
    std::vector<CheckDecl> checks;
};

/// Structural equality of whole scripts, ignoring source positions.
bool same_script(const Script& a, const Script& b);

} // namespace siglat::dsl

#endif
