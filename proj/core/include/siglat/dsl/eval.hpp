#ifndef SIGLAT_DSL_EVAL_HPP
#define SIGLAT_DSL_EVAL_HPP

#include "siglat/dsl/ast.hpp"
#include "siglat/sigma.hpp"

#include <map>
#include <string>

namespace siglat::dsl {

/// Variable name -> sigma-algebra bound to it.
using Assignment = std::map<std::string, SigmaAlgebra>;

/// Space name -> ground-set size in effect for this evaluation. The miner
/// re-sizes free spaces below their declared size, so sizes travel with the
/// assignment rather than the script.
using SpaceSizes = std::map<std::string, int>;

/// Sizes as declared in the script.
SpaceSizes declared_sizes(const Script& script);

/// The fixed sigma-algebras introduced by the script's let declarations.
Assignment let_assignment(const Script& script, const SpaceSizes& sizes);

/// Structural recursion: variables look up the assignment, discrete/trivial
/// are constants on their space, and the operators delegate to product,
/// meet and join. Throws std::invalid_argument naming any unassigned
/// variable.
SigmaAlgebra evaluate(const Expr& expr, const Assignment& assignment, const SpaceSizes& sizes);

/// "==" compares canonical atom partitions; "<=" is the sub-sigma-algebra
/// test.
bool holds(const CheckDecl& check, const Assignment& assignment, const SpaceSizes& sizes);

} // namespace siglat::dsl

#endif
