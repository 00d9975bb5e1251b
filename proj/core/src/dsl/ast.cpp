#include "siglat/dsl/ast.hpp"

namespace siglat::dsl {

const char* spelling(BinOp op) {
    switch (op) {
        case BinOp::Product: return "*";
        case BinOp::Meet: return "^";
        case BinOp::Join: return "|";
    }
    return "?";
}

const char* spelling(Relation rel) {
    return rel == Relation::Equal ? "==" : "<=";
}

bool same_expr(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* va = std::get_if<VarRef>(&a.node))
        return va->name == std::get<VarRef>(b.node).name;
    if (const auto* ca = std::get_if<ConstAlg>(&a.node)) {
        const auto& cb = std::get<ConstAlg>(b.node);
        return ca->kind == cb.kind && ca->space == cb.space;
    }
    const auto& ba = std::get<Binary>(a.node);
    const auto& bb = std::get<Binary>(b.node);
    return ba.op == bb.op && same_expr(*ba.lhs, *bb.lhs) && same_expr(*ba.rhs, *bb.rhs);
}

bool same_script(const Script& a, const Script& b) {
    auto decl_eq = [](const auto& x, const auto& y, auto&& field_eq) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!field_eq(x[i], y[i])) return false;
        return true;
    };
    return decl_eq(a.spaces, b.spaces,
                   [](const SpaceDecl& x, const SpaceDecl& y) {
                       return x.name == y.name && x.size == y.size;
                   }) &&
           decl_eq(a.vars, b.vars,
                   [](const VarDecl& x, const VarDecl& y) {
                       return x.name == y.name && x.space == y.space;
                   }) &&
           decl_eq(a.lets, b.lets,
                   [](const LetDecl& x, const LetDecl& y) {
                       return x.name == y.name && x.space == y.space && x.blocks == y.blocks;
                   }) &&
           decl_eq(a.constraints, b.constraints,
                   [](const ConstrainDecl& x, const ConstrainDecl& y) {
                       return x.finer == y.finer && x.coarser == y.coarser;
                   }) &&
           decl_eq(a.checks, b.checks,
                   [](const CheckDecl& x, const CheckDecl& y) {
                       return x.rel == y.rel && same_expr(*x.lhs, *y.lhs) &&
                              same_expr(*x.rhs, *y.rhs);
                   });
}

} // namespace siglat::dsl
