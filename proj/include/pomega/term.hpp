#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace pomega {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Algebra term over union, complement, bottom, next, eventually and the
/// initial-instant constant. Derived connectives (&, ->, <->, G, 1) are
/// expanded at parse time; the stored tree uses only these seven shapes.
struct Term {
  enum class Kind { Var, Bottom, Init, Union, Complement, Next, Diamond };

  Kind kind;
  std::string name; // Var only
  TermPtr lhs;      // Union left / unary child
  TermPtr rhs;      // Union right
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
bool term_eq(const TermPtr& a, const TermPtr& b);

// Constructors.
TermPtr var(std::string name);
TermPtr bottom();
TermPtr init();
TermPtr join(TermPtr a, TermPtr b);
TermPtr cmpl(TermPtr a);
TermPtr next(TermPtr a);
TermPtr diamond(TermPtr a);

// Derived forms, expanded into the base constructors.
TermPtr top();
TermPtr meet(TermPtr a, TermPtr b);
TermPtr box(TermPtr a);
TermPtr implies(TermPtr a, TermPtr b);
TermPtr iff(TermPtr a, TermPtr b);
/// Fold of meet over a list; the empty meet is top, a singleton is itself.
TermPtr meet_all(const std::vector<TermPtr>& ts);
/// Fold of join over a list; the empty join is bottom.
TermPtr join_all(const std::vector<TermPtr>& ts);

std::set<std::string> free_vars(const TermPtr& t);

struct ParseOptions {
  /// Accept identifiers starting with '_' (reserved for generated names).
  bool allow_internal = false;
};

/// Parses the ASCII term grammar:
///   term := ident | "0" | "1" | "I" | "~" term | "X" term | "F" term
///         | "G" term | term ("&"|"|"|"->"|"<->") term | "(" term ")"
/// Precedence, high to low: prefix operators, &, |, ->, <->. The binary
/// operators & and | associate to the left, -> and <-> to the right.
TermPtr parse_term(const std::string& text, const ParseOptions& opts = {});

/// Prints a term so that parse_term(print_term(t)) is structurally equal
/// to t. Complement(Bottom) prints as "1", the box pattern as "G", and the
/// meet pattern as "&".
std::string print_term(const TermPtr& t);

} // namespace pomega
