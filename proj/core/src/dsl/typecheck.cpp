#include "siglat/dsl/typecheck.hpp"

#include "siglat/ground.hpp"

#include <set>

namespace siglat::dsl {

SpaceType SpaceType::primitive(std::string name, int size) {
    SpaceType t;
    t.name_ = std::move(name);
    t.size_ = size;
    return t;
}

SpaceType SpaceType::product_of(SpaceType left, SpaceType right) {
    SpaceType t;
    t.size_ = left.size_ * right.size_;
    t.left_ = std::make_shared<const SpaceType>(std::move(left));
    t.right_ = std::make_shared<const SpaceType>(std::move(right));
    return t;
}

std::string SpaceType::to_string() const {
    if (!is_product()) return name_;
    std::string l = left().is_product() ? "(" + left().to_string() + ")" : left().to_string();
    std::string r = right().is_product() ? "(" + right().to_string() + ")" : right().to_string();
    return l + "*" + r;
}

std::string SpaceType::format_point(int i) const {
    if (!is_product()) return std::to_string(i);
    int x = i / right().size();
    int u = i % right().size();
    return "(" + left().format_point(x) + "," + right().format_point(u) + ")";
}

bool operator==(const SpaceType& a, const SpaceType& b) {
    if (a.is_product() != b.is_product()) return false;
    if (!a.is_product()) return a.name_ == b.name_ && a.size_ == b.size_;
    return a.left() == b.left() && a.right() == b.right();
}

TypeError::TypeError(SourcePos pos, const std::string& message)
    : std::runtime_error("type error at line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.col) + ": " + message),
      pos_(pos) {}

namespace {

class Checker {
public:
    explicit Checker(const Script& script) : script_(script) {}

    TypedScript run() {
        declare_spaces();
        declare_vars();
        check_constraints();
        for (const auto& check : script_.checks) {
            annotate(*check.lhs);
            annotate(*check.rhs);
            const SpaceType& l = out_.expr_spaces.at(check.lhs.get());
            const SpaceType& r = out_.expr_spaces.at(check.rhs.get());
            if (!(l == r))
                throw TypeError(check.pos, "relation compares sigma-algebras on different spaces ('" +
                                               l.to_string() + "' vs '" + r.to_string() + "')");
        }
        return std::move(out_);
    }

private:
    void declare_spaces() {
        for (const auto& s : script_.spaces) {
            if (s.size < 1)
                throw TypeError(s.pos, "space '" + s.name + "' must have at least one point");
            if (s.size > kMaxGroundSize)
                throw TypeError(s.pos, "space '" + s.name + "' exceeds " +
                                           std::to_string(kMaxGroundSize) + " points");
            if (!out_.space_sizes.emplace(s.name, s.size).second)
                throw TypeError(s.pos, "duplicate space name '" + s.name + "'");
        }
    }

    void declare_vars() {
        auto declare = [&](const std::string& name, const std::string& space, SourcePos pos) {
            if (!out_.space_sizes.count(space))
                throw TypeError(pos, "undeclared space '" + space + "'");
            if (out_.space_sizes.count(name))
                throw TypeError(pos, "name '" + name + "' already used for a space");
            if (!out_.var_spaces.emplace(name, space).second)
                throw TypeError(pos, "duplicate variable name '" + name + "'");
        };
        for (const auto& v : script_.vars) declare(v.name, v.space, v.pos);
        for (const auto& l : script_.lets) {
            declare(l.name, l.space, l.pos);
            validate_literal(l);
        }
    }

    void validate_literal(const LetDecl& l) {
        int size = out_.space_sizes.at(l.space);
        std::set<int> seen;
        for (const auto& block : l.blocks) {
            if (block.empty())
                throw TypeError(l.pos, "empty block in partition literal for '" + l.name + "'");
            for (int p : block) {
                if (p < 0 || p >= size)
                    throw TypeError(l.pos, "point " + std::to_string(p) + " outside space '" +
                                               l.space + "' of size " + std::to_string(size));
                if (!seen.insert(p).second)
                    throw TypeError(l.pos, "point " + std::to_string(p) +
                                               " appears twice in partition literal for '" +
                                               l.name + "'");
            }
        }
        if (static_cast<int>(seen.size()) != size)
            for (int p = 0; p < size; ++p)
                if (!seen.count(p))
                    throw TypeError(l.pos, "point " + std::to_string(p) +
                                               " missing from partition literal for '" + l.name +
                                               "'");
    }

    void check_constraints() {
        for (const auto& c : script_.constraints) {
            const std::string* fs = find_var_space(c.finer);
            const std::string* cs = find_var_space(c.coarser);
            if (!fs) throw TypeError(c.pos, "undeclared variable '" + c.finer + "'");
            if (!cs) throw TypeError(c.pos, "undeclared variable '" + c.coarser + "'");
            if (*fs != *cs)
                throw TypeError(c.pos, "constraint relates variables on different spaces ('" +
                                           *fs + "' vs '" + *cs + "')");
        }
    }

    const std::string* find_var_space(const std::string& name) const {
        auto it = out_.var_spaces.find(name);
        return it == out_.var_spaces.end() ? nullptr : &it->second;
    }

    const SpaceType& annotate(const Expr& expr) {
        if (const auto* v = std::get_if<VarRef>(&expr.node)) {
            const std::string* space = find_var_space(v->name);
            if (!space) throw TypeError(expr.pos, "undeclared variable '" + v->name + "'");
            return store(expr, SpaceType::primitive(*space, out_.space_sizes.at(*space)));
        }
        if (const auto* c = std::get_if<ConstAlg>(&expr.node)) {
            auto it = out_.space_sizes.find(c->space);
            if (it == out_.space_sizes.end())
                throw TypeError(expr.pos, "undeclared space '" + c->space + "'");
            return store(expr, SpaceType::primitive(c->space, it->second));
        }
        const auto& b = std::get<Binary>(expr.node);
        const SpaceType& l = annotate(*b.lhs);
        const SpaceType& r = annotate(*b.rhs);
        if (b.op == BinOp::Product)
            return store(expr, SpaceType::product_of(l, r));
        if (!(l == r))
            throw TypeError(expr.pos, std::string(b.op == BinOp::Meet ? "meet" : "join") +
                                          " requires identical spaces ('" + l.to_string() +
                                          "' vs '" + r.to_string() + "')");
        return store(expr, l);
    }

    const SpaceType& store(const Expr& expr, SpaceType type) {
        return out_.expr_spaces.emplace(&expr, std::move(type)).first->second;
    }

    const Script& script_;
    TypedScript out_;
};

} // namespace

TypedScript typecheck(const Script& script) {
    return Checker(script).run();
}

} // namespace siglat::dsl
