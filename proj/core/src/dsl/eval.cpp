#include "siglat/dsl/eval.hpp"

#include "siglat/product.hpp"

#include <stdexcept>

namespace siglat::dsl {

SpaceSizes declared_sizes(const Script& script) {
    SpaceSizes sizes;
    for (const auto& s : script.spaces) sizes[s.name] = s.size;
    return sizes;
}

Assignment let_assignment(const Script& script, const SpaceSizes& sizes) {
    Assignment out;
    for (const auto& l : script.lets) {
        GroundSet space(sizes.at(l.space));
        std::vector<Subset> blocks;
        blocks.reserve(l.blocks.size());
        for (const auto& block : l.blocks) blocks.push_back(Subset::of(space, block));
        out.emplace(l.name, SigmaAlgebra(canonical_partition(space, std::move(blocks))));
    }
    return out;
}

SigmaAlgebra evaluate(const Expr& expr, const Assignment& assignment, const SpaceSizes& sizes) {
    if (const auto* v = std::get_if<VarRef>(&expr.node)) {
        auto it = assignment.find(v->name);
        if (it == assignment.end())
            throw std::invalid_argument("variable '" + v->name + "' has no assigned value");
        return it->second;
    }
    if (const auto* c = std::get_if<ConstAlg>(&expr.node)) {
        auto it = sizes.find(c->space);
        if (it == sizes.end())
            throw std::invalid_argument("space '" + c->space + "' has no size in effect");
        GroundSet space(it->second);
        return c->kind == ConstKind::Discrete ? SigmaAlgebra::discrete(space)
                                              : SigmaAlgebra::trivial(space);
    }
    const auto& b = std::get<Binary>(expr.node);
    SigmaAlgebra lhs = evaluate(*b.lhs, assignment, sizes);
    SigmaAlgebra rhs = evaluate(*b.rhs, assignment, sizes);
    switch (b.op) {
        case BinOp::Product: return product(lhs, rhs);
        case BinOp::Meet: return meet(lhs, rhs);
        case BinOp::Join: return join(lhs, rhs);
    }
    throw std::logic_error("unreachable operator");
}

bool holds(const CheckDecl& check, const Assignment& assignment, const SpaceSizes& sizes) {
    SigmaAlgebra lhs = evaluate(*check.lhs, assignment, sizes);
    SigmaAlgebra rhs = evaluate(*check.rhs, assignment, sizes);
    return check.rel == Relation::Equal ? lhs == rhs : is_sub(lhs, rhs);
}

} // namespace siglat::dsl
