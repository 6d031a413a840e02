#pragma once

#include <memory>
#include <set>
#include <string>

#include "pomega/term.hpp"
#include "pomega/upset.hpp"

namespace pomega {

struct NnfTerm;
using NnfPtr = std::shared_ptr<const NnfTerm>;

/// Term in negation normal form: literals (possibly negated variables and
/// constants) combined by union, intersection, next, eventually and box.
/// Box and intersection are first-class here; converting back to a plain
/// Term re-expands them.
struct NnfTerm {
  enum class Kind { Lit, Union, Inter, Next, Diamond, Box };
  enum class Base { Var, Bottom, Init };

  Kind kind;
  Base base = Base::Var; // Lit only
  bool negated = false;  // Lit only
  std::string name;      // Lit/Var only
  NnfPtr lhs, rhs;
};

int nnf_cmp(const NnfPtr& a, const NnfPtr& b);
inline bool nnf_eq(const NnfPtr& a, const NnfPtr& b) { return nnf_cmp(a, b) == 0; }

struct NnfLess {
  bool operator()(const NnfPtr& a, const NnfPtr& b) const { return nnf_cmp(a, b) < 0; }
};

/// Finite set of NNF terms; the closure operation keeps it containing the
/// initial-instant constant, closed under subterms, and containing X(F s)
/// and X(G s) for each member F s and G s.
using FilterableSet = std::set<NnfPtr, NnfLess>;

NnfPtr nnf_lit(NnfTerm::Base base, bool negated, std::string name = "");
NnfPtr nnf_union(NnfPtr a, NnfPtr b);
NnfPtr nnf_inter(NnfPtr a, NnfPtr b);
NnfPtr nnf_next(NnfPtr a);
NnfPtr nnf_diamond(NnfPtr a);
NnfPtr nnf_box(NnfPtr a);

/// Pushes negations down to literals.
NnfPtr nnf(const TermPtr& t);

/// Re-expands box and intersection into the seven base constructors.
TermPtr nnf_to_term(const NnfPtr& t);

/// Prints using the term grammar's G and & sugar; the output reparses to
/// nnf_to_term(t).
std::string print_nnf(const NnfPtr& t);

/// Direct evaluation on ultimately periodic sets.
UpSet eval_nnf(const NnfPtr& t, const Valuation& v);

std::set<std::string> nnf_vars(const NnfPtr& t);

/// All NNF subterms, including the term itself; a negated literal also
/// contributes its positive part.
FilterableSet nnf_subterms(const NnfPtr& t);

/// Smallest filterable set containing t.
FilterableSet filterable_closure(const NnfPtr& t);
FilterableSet filterable_closure(const FilterableSet& base);

/// Checks the four closure conditions.
bool is_filterable(const FilterableSet& gamma);

} // namespace pomega
