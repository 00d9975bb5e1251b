#ifndef SIGLAT_DSL_TYPECHECK_HPP
#define SIGLAT_DSL_TYPECHECK_HPP

#include "siglat/dsl/ast.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace siglat::dsl {

/// The (possibly nested product) space an expression lives on. Primitive
/// spaces are identified by declared name; products are structural.
class SpaceType {
public:
    static SpaceType primitive(std::string name, int size);
    static SpaceType product_of(SpaceType left, SpaceType right);

    bool is_product() const { return left_ != nullptr; }
    int size() const { return size_; }

    /// Declared name; primitive spaces only.
    const std::string& name() const { return name_; }
    const SpaceType& left() const { return *left_; }
    const SpaceType& right() const { return *right_; }

    /// "X" for primitives, "X*U" for products, "(X*U)*V" when nested.
    std::string to_string() const;

    /// Renders point i: a plain integer on a primitive space, a nested
    /// coordinate pair such as "(0,2)" on a product.
    std::string format_point(int i) const;

    friend bool operator==(const SpaceType& a, const SpaceType& b);

private:
    SpaceType() = default;

    std::string name_;
    int size_ = 0;
    std::shared_ptr<const SpaceType> left_;
    std::shared_ptr<const SpaceType> right_;
};

class TypeError : public std::runtime_error {
public:
    TypeError(SourcePos pos, const std::string& message);
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// Per-expression space annotations for one script.
struct TypedScript {
    std::map<std::string, int> space_sizes;            // declared sizes
    std::map<std::string, std::string> var_spaces;     // var/let name -> space name
    std::map<const Expr*, SpaceType> expr_spaces;      // every sub-expression
};

/// Validates declarations (unique names, declared spaces, literal/space size
/// agreement, constraint operands on one space) and annotates every
/// expression with its space. Meet and join require identical spaces;
/// product always types, yielding the product space.
TypedScript typecheck(const Script& script);

} // namespace siglat::dsl

#endif
