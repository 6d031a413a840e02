#pragma once

#include "pomega/fo.hpp"
#include "pomega/s1s.hpp"
#include "pomega/term.hpp"
#include "pomega/upset.hpp"

namespace pomega {

/// Evaluates a term in the powerset algebra of the naturals, restricted to
/// ultimately periodic sets. The valuation must cover the term's variables.
UpSet eval_term(const TermPtr& t, const Valuation& v);

/// Evaluates a quantifier-free first-order formula; equations compare
/// canonical forms.
bool eval_qf(const FoPtr& f, const Valuation& v);

/// Evaluates a quantifier-free S1S formula (kernel shapes plus the surface
/// atoms, which have direct positional semantics). S(P,Q) is decided by
/// scanning positions up to the aligned stem plus twice the aligned loop,
/// which suffices by periodicity.
bool eval_s1s_kernel(const S1sPtr& f, const Valuation& v);

} // namespace pomega
