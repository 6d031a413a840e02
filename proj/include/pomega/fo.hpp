#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pomega/term.hpp"

namespace pomega {

struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

/// First-order formula over algebra terms. The stored tree uses only
/// equations, disjunction, negation and existential quantification; the
/// parser expands &&, =>, <=>, != and forall.
struct FoFormula {
  enum class Kind { Eq, Or, Not, Exists };

  Kind kind;
  TermPtr lhs_term, rhs_term; // Eq
  FoPtr lhs, rhs;             // Or children; Not/Exists child in lhs
  std::string binder;         // Exists
};

bool fo_eq_ast(const FoPtr& a, const FoPtr& b);

FoPtr fo_eq(TermPtr lhs, TermPtr rhs);
FoPtr fo_or(FoPtr a, FoPtr b);
FoPtr fo_not(FoPtr a);
FoPtr fo_exists(std::string binder, FoPtr body);

// Derived forms.
FoPtr fo_neq(TermPtr lhs, TermPtr rhs);
FoPtr fo_and(FoPtr a, FoPtr b);
FoPtr fo_implies(FoPtr a, FoPtr b);
FoPtr fo_iff(FoPtr a, FoPtr b);
FoPtr fo_forall(std::string binder, FoPtr body);
FoPtr fo_and_all(const std::vector<FoPtr>& fs); // empty conjunction is 1 = 1

std::set<std::string> fo_free_vars(const FoPtr& f);
bool fo_quantifier_free(const FoPtr& f);

/// True when the formula is a chain of universal quantifiers (in the stored
/// not-exists-not form) over a quantifier-free matrix; outputs the matrix.
bool fo_is_universal(const FoPtr& f, FoPtr* matrix = nullptr);
/// True when the formula is an existential prefix over a quantifier-free
/// matrix.
bool fo_is_existential(const FoPtr& f);

/// Renames bound variables so that they are pairwise distinct and distinct
/// from every free variable.
FoPtr fo_rectify(const FoPtr& f);

/// Grammar:
///   fo := term "=" term | term "!=" term | "!" fo
///       | fo ("&&"|"||"|"=>"|"<=>") fo
///       | ("exists"|"forall") ident "." fo | "(" fo ")"
/// Precedence, high to low: !, &&, ||, =>, <=>; a quantifier body extends as
/// far right as possible.
FoPtr parse_fo(const std::string& text, const ParseOptions& opts = {});

/// Prints so that parse_fo(print_fo(f)) equals f. Negated equations print
/// with !=, the forall pattern with "forall", and the conjunction pattern
/// with &&.
std::string print_fo(const FoPtr& f);

} // namespace pomega
