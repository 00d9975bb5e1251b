#include "siglat/dsl/printer.hpp"

namespace siglat::dsl {

namespace {

int precedence(BinOp op) {
    switch (op) {
        case BinOp::Join: return 0;
        case BinOp::Meet: return 1;
        case BinOp::Product: return 2;
    }
    return 0;
}

void render(const Expr& expr, int parent_prec, bool right_child, std::string& out) {
    if (const auto* v = std::get_if<VarRef>(&expr.node)) {
        out += v->name;
        return;
    }
    if (const auto* c = std::get_if<ConstAlg>(&expr.node)) {
        out += c->kind == ConstKind::Discrete ? "discrete(" : "trivial(";
        out += c->space;
        out += ')';
        return;
    }
    const auto& b = std::get<Binary>(expr.node);
    int prec = precedence(b.op);
    // Left association: a right child at equal precedence needs parens.
    bool parens = prec < parent_prec || (prec == parent_prec && right_child);
    if (parens) out += '(';
    render(*b.lhs, prec, false, out);
    out += spelling(b.op);
    render(*b.rhs, prec, true, out);
    if (parens) out += ')';
}

} // namespace

std::string to_string(const Expr& expr) {
    std::string out;
    render(expr, -1, false, out);
    return out;
}

std::string partition_literal_string(const std::vector<std::vector<int>>& blocks) {
    std::string out = "{";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ",";
        out += "{";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(blocks[i][j]);
        }
        out += "}";
    }
    return out + "}";
}

std::string to_string(const Script& script) {
    std::string out;
    for (const auto& s : script.spaces)
        out += "space " + s.name + " = " + std::to_string(s.size) + "\n";
    for (const auto& v : script.vars)
        out += "var " + v.name + " : " + v.space + "\n";
    for (const auto& l : script.lets)
        out += "let " + l.name + " = " + partition_literal_string(l.blocks) + " : " + l.space + "\n";
    for (const auto& c : script.constraints)
        out += "constrain " + c.finer + " <= " + c.coarser + "\n";
    for (const auto& c : script.checks)
        out += "check " + to_string(*c.lhs) + " " + spelling(c.rel) + " " + to_string(*c.rhs) + "\n";
    return out;
}

} // namespace siglat::dsl
