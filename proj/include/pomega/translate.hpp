#pragma once

#include <map>
#include <set>
#include <string>

#include "pomega/fo.hpp"
#include "pomega/s1s.hpp"

namespace pomega {

/// Bookkeeping for the translation into S1S: an injective mapping from
/// algebra variables to capitalized set variables, plus a fresh supply of
/// lower-case position variables.
class TranslationEnv {
public:
  TranslationEnv() = default;
  /// Assigns set names to the given algebra variables, in sorted order.
  static TranslationEnv for_variables(const std::set<std::string>& alg_vars);

  /// Set variable for an algebra variable, assigning a fresh name on first
  /// use.
  std::string set_name(const std::string& alg_var);
  /// Algebra variable for a set variable assigned earlier.
  const std::string& algebra_name(const std::string& set_var) const;
  bool has_algebra_name(const std::string& set_var) const;

  std::string fresh_position();

private:
  std::map<std::string, std::string> to_set_;
  std::map<std::string, std::string> to_alg_;
  std::set<std::string> used_;
  int positions_ = 0;
};

/// The position-indexed translation of a term: a surface S1S formula with
/// one free individual variable standing for the position tested.
S1sPtr translate_term(const TermPtr& t, const std::string& position, TranslationEnv& env);

/// Translation of a first-order formula: equations become universally
/// quantified positionwise equivalences, and algebra quantifiers become set
/// quantifiers. The input is rectified first; the formula's free set
/// variables correspond exactly to its free algebra variables via env.
S1sPtr translate_fo(const FoPtr& f, TranslationEnv& env);

struct Translation {
  S1sPtr formula;
  TranslationEnv env;
};
Translation translate_fo(const FoPtr& f);

} // namespace pomega
