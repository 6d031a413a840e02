#pragma once

#include <memory>
#include <set>
#include <string>

#include "pomega/term.hpp"

namespace pomega {

struct S1sFormula;
using S1sPtr = std::shared_ptr<const S1sFormula>;

/// Second-order formula over subsets of the naturals. The kernel consists of
/// Subset, Succ, Or, Not and Exists2; the remaining shapes are surface sugar
/// eliminated by the compiler. Variable sort follows the name: capitalized
/// names are set variables, lower-case names are individual (position)
/// variables, which stand for singleton sets.
struct S1sFormula {
  enum class Kind {
    Subset,  // P sub Q           (kernel)
    Succ,    // S(P,Q)            (kernel)
    Or,      // a || b            (kernel)
    Not,     // !a                (kernel)
    Exists2, // ex2 P. a          (kernel)
    And,     // a && b            (surface)
    Sing,    // sing(x)           (surface)
    Mem,     // x in P            (surface)
    Le,      // x <= y            (surface)
    SuccInd, // S(x,y)            (surface)
    EqSet,   // a == b            (surface)
    Exists1, // ex1 x. a          (surface)
    True,    // internal: valid atom
    False,   // internal: empty-language atom
  };

  Kind kind;
  std::string var1, var2; // atom operands / quantifier binder (var1)
  S1sPtr lhs, rhs;
};

bool s1s_eq_ast(const S1sPtr& a, const S1sPtr& b);

S1sPtr s1s_subset(std::string p, std::string q);
S1sPtr s1s_succ(std::string p, std::string q);
S1sPtr s1s_or(S1sPtr a, S1sPtr b);
S1sPtr s1s_and(S1sPtr a, S1sPtr b);
S1sPtr s1s_not(S1sPtr a);
S1sPtr s1s_exists2(std::string binder, S1sPtr body);
S1sPtr s1s_exists1(std::string binder, S1sPtr body);
S1sPtr s1s_forall2(std::string binder, S1sPtr body); // !ex2 b. !body
S1sPtr s1s_forall1(std::string binder, S1sPtr body);
S1sPtr s1s_sing(std::string x);
S1sPtr s1s_mem(std::string x, std::string p);
S1sPtr s1s_le(std::string x, std::string y);
S1sPtr s1s_succ_ind(std::string x, std::string y);
S1sPtr s1s_eqset(std::string a, std::string b);
S1sPtr s1s_true();
S1sPtr s1s_false();

std::set<std::string> s1s_free_vars(const S1sPtr& f);
/// True when only the five kernel shapes occur.
bool s1s_is_kernel(const S1sPtr& f);
bool s1s_quantifier_free(const S1sPtr& f);

/// Renames bound variables so they are pairwise distinct and distinct from
/// all free variables, preserving each name's case (and hence sort).
S1sPtr s1s_rectify(const S1sPtr& f);

/// Grammar:
///   s1s := ident "sub" ident | "S(" ident "," ident ")" | "!" s1s
///        | s1s ("&&"|"||") s1s | ("ex2"|"all2") Ident "." s1s
///        | "sing(" x ")" | x "in" P | x "<=" y | ident "==" ident
///        | ("ex1"|"all1") x "." s1s | "(" s1s ")"
/// Capitalized identifiers are set variables, lower-case ones individual
/// variables. The parser renames bound variables apart from free ones.
S1sPtr parse_s1s(const std::string& text);

/// Prints so that parse_s1s(print_s1s(f)) equals f for rectified formulas
/// free of the internal True/False atoms.
std::string print_s1s(const S1sPtr& f);

} // namespace pomega
