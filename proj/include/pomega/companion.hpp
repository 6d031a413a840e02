#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pomega/fo.hpp"
#include "pomega/nba.hpp"
#include "pomega/nba_ops.hpp"
#include "pomega/translate.hpp"

namespace pomega {

/// Existential normal form of a formula: the prefix binds one fresh variable
/// per alphabet letter and one per automaton state, and the matrix states
/// that the automaton's acceptance term evaluates to the full set, together
/// with the letter definitions.
struct CompanionResult {
  FoPtr formula;  // existential prefix over a quantifier-free matrix
  Nba automaton;  // single-initial automaton for the source formula
  TermPtr term;   // acceptance term over letter and state variables
  std::vector<std::pair<std::string, TermPtr>> letter_bindings;
  TranslationEnv env;
};

/// Fresh variable names; the '_' prefix is unavailable to user input.
std::string letter_variable(std::uint32_t letter, std::size_t width);
std::string state_variable(int index);

/// Encodes acceptance of a single-initial automaton as a term over letter
/// and state variables: Part & Init & Trans & Accept, where
///   Part   = union over states q of (q & meet of -q' for q' != q),
///   Init   = I -> q0,
///   Trans  = meet over q of (q -> union of (a & X q') over transitions),
///   Accept = union over accepting q of F q.
/// Empty meets are 1 and empty unions are 0.
TermPtr automaton_to_term(const Nba& a);

/// Runs the full pipeline: translate, compile, make the automaton
/// single-initial, encode it as a term, and bind each letter variable to
/// the corresponding boolean combination of the formula's free variables.
/// The free variable count is capped (the letter block is exponential).
CompanionResult existential_companion(const FoPtr& f, const Limits& limits = {},
                                      std::size_t max_free_vars = 6);

} // namespace pomega
