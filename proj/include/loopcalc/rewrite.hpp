#pragma once

// Rewriting of space expressions to wedge normal form.
//
// Rules (ids as they appear in traces):
//   AC            wedge/product/smash bookkeeping: flatten, drop units,
//                 drop summands of connectivity >= cap, canonical order
//   R1            suspension of spheres, Moore spaces, wedges, products,
//                 half-smashes and residue smashes
//   R2            smash of spheres and Moore spaces, P^s∧P^t splitting,
//                 suspension coordinates pulled out of a smash
//   R2-distribute smash distributes over wedge
//   R3            product units
//   R4            A ⋉ B -> (A ∧ B) ∨ B for suspension-like B
//   R5            Ω(A × B) -> ΩA × ΩB; Σ^t ΩΣX -> ∨_{k>=1} Σ^t X^∧k
//   R6            J_0, J_1 and Σ^t J_k(X) -> ∨_{j=1..k} Σ^t X^∧j
//
// Strategy: innermost-leftmost, children first, then the root rule of the
// rebuilt node, then the result is normalized again.

#include <string>
#include <vector>

#include "loopcalc/expr.hpp"

namespace loopcalc {

enum class SummandKind { Sphere, Moore, Residue };

SummandKind summand_kind(const Expr& e);

struct WedgeNormalForm {
  /// Sorted by (connectivity, Sphere<Moore<Residue, parameters, text).
  std::vector<Expr> summands;
  int cap = 0;
  /// False when anything was dropped at the cap.
  bool complete = true;

  /// The normal form as an expression: pt, a single summand, or a wedge.
  Expr to_expr() const;

  friend bool operator==(const WedgeNormalForm&, const WedgeNormalForm&) = default;
};

struct TraceStep {
  std::string rule;
  Expr before;
  Expr after;
};

/// Canonical summand order used by WedgeNormalForm.
bool summand_less(const Expr& a, const Expr& b);

/// Sphere, Moore, Suspend, a wedge of suspension-like terms, or a smash with
/// at least one suspension-like factor.
bool is_suspension_like(const Expr& e);

/// Throws Error(Parameter) when cap < 1 and NotSimplyConnected for loops on
/// spaces of connectivity <= 0.
WedgeNormalForm normalize(const Expr& e, int cap);

/// The rule applications performed by normalize, in order.
std::vector<TraceStep> trace(const Expr& e, int cap);

/// Replays a trace: each step replaces the first (innermost-leftmost) subterm
/// equal to `before` by `after`.
Expr fold_trace(const Expr& e, const std::vector<TraceStep>& steps);

/// Restriction of a normal form computed at a larger cap to cap N: drops
/// summands of connectivity >= N and renormalizes residue contents at N.
WedgeNormalForm restrict_to(const WedgeNormalForm& wnf, int cap);

}  // namespace loopcalc
