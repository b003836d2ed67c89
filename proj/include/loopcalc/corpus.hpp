#pragma once

// Deterministic generators for property checks: random space expressions
// and simplicial complexes.

#include <random>
#include <vector>

#include "loopcalc/expr.hpp"
#include "loopcalc/simplicial.hpp"

namespace loopcalc {

/// Random expression of depth <= depth. Every Loop node has a simply
/// connected child that is a sphere, a Moore space, a suspension, or a wedge
/// or product of those, so series_of is defined on the result.
Expr random_expr(std::mt19937_64& rng, int depth);

/// Every simplicial complex on the vertex set [m] (vertices may be ghosts).
std::vector<SimplicialComplex> all_complexes(int m);

SimplicialComplex random_complex(std::mt19937_64& rng, int m);

/// All subsets of `faces`.
std::vector<std::vector<Face>> all_subsets(const std::vector<Face>& faces);

}  // namespace loopcalc
