#pragma once

#include <vector>

#include "pomega/fo.hpp"
#include "pomega/term.hpp"

namespace pomega {

/// One literal of a clause: an equation or (negated) disequation of terms.
struct FoLiteral {
  TermPtr lhs, rhs;
  bool negated;
};

/// Disjunctive normal form of a quantifier-free formula: a disjunction of
/// conjunctions of literals, with no minimization.
std::vector<std::vector<FoLiteral>> fo_dnf(const FoPtr& f);

/// Converts a quantifier-free formula into a single term t such that, under
/// every valuation, the formula holds in the powerset algebra exactly when t
/// evaluates to the full set. Built from the DNF: each clause j becomes
///   t_j := meet of (I -> F ~(r <-> s)) for its disequations
///          and (u <-> v) for its equations,
/// and the result is t := I -> join of G t_j.
TermPtr qf_to_equation(const FoPtr& f);

} // namespace pomega
