#pragma once

#include "pomega/nba.hpp"
#include "pomega/nba_ops.hpp"
#include "pomega/s1s.hpp"

namespace pomega {

/// Eliminates surface sugar: membership becomes subset (on a singleton
/// track), set equality splits into two subsets (or the valid atom when the
/// sides coincide), individual quantifiers become set quantifiers guarded by
/// sing, and trivial subformulas fold to the true/false atoms. sing, <= and
/// S on individuals remain as primitive atoms compiled directly. Negations
/// are pushed through the boolean connectives, stopping at atoms and
/// quantifiers.
S1sPtr desugar(const S1sPtr& f);

/// Compiles a desugared formula into an automaton over its sorted free
/// variables: atoms as fixed small automata, disjunction as union,
/// conjunction as product, negation as complement, quantification as
/// projection (with cylindrification to align track lists). Intermediate
/// automata are reduced.
Nba compile(const S1sPtr& f, const Limits& limits = {});

/// Convenience: desugar then compile.
Nba compile_s1s(const S1sPtr& f, const Limits& limits = {});

/// Pure-kernel definition of sing(X) used to cross-check the primitive
/// automaton: X is nonempty, and every subset of X is empty or X itself.
S1sPtr sing_kernel_reference(const std::string& x, const std::string& helper1,
                             const std::string& helper2);

} // namespace pomega
