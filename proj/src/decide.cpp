#include "pomega/decide.hpp"

#include <chrono>
#include <stdexcept>

#include "pomega/compile.hpp"
#include "pomega/semantics.hpp"
#include "pomega/translate.hpp"

namespace pomega {

const char* status_name(Status s) {
  switch (s) {
    case Status::Valid: return "valid";
    case Status::Invalid: return "invalid";
    case Status::Satisfiable: return "satisfiable";
    case Status::Unsatisfiable: return "unsatisfiable";
    case Status::True: return "true";
    case Status::False: return "false";
    case Status::Equivalent: return "equivalent";
    case Status::Inequivalent: return "inequivalent";
  }
  return "?";
}

bool status_positive(Status s) {
  switch (s) {
    case Status::Valid:
    case Status::Satisfiable:
    case Status::True:
    case Status::Equivalent: return true;
    default: return false;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

/// Decodes a witness word into a valuation over the formula's free algebra
/// variables; variables without a track are unconstrained and become empty.
Valuation decode_witness(const LassoWord& word, const Nba& automaton,
                         const TranslationEnv& env, const std::set<std::string>& free_names) {
  const Valuation on_sets = decode_word(word, automaton.tracks);
  Valuation out;
  for (const auto& [set_name, value] : on_sets) out[env.algebra_name(set_name)] = value;
  for (const auto& name : free_names)
    if (!out.count(name)) out[name] = UpSet::empty();
  return out;
}

/// Valuation keyed by the automaton's set-variable tracks.
Valuation to_set_names(const Valuation& algebra_vals, TranslationEnv& env) {
  Valuation out;
  for (const auto& [name, value] : algebra_vals) out[env.set_name(name)] = value;
  return out;
}

/// Strips a leading universal prefix (in the stored not-exists-not form);
/// validity is unchanged and witnesses then name the stripped variables.
FoPtr strip_universal_prefix(FoPtr f) {
  while (f->kind == FoFormula::Kind::Not && f->lhs->kind == FoFormula::Kind::Exists &&
         f->lhs->lhs->kind == FoFormula::Kind::Not)
    f = f->lhs->lhs->lhs;
  return f;
}

FoPtr strip_existential_prefix(FoPtr f) {
  while (f->kind == FoFormula::Kind::Exists) f = f->lhs;
  return f;
}

} // namespace

Verdict is_valid(const FoPtr& f, const Limits& limits) {
  const auto start = Clock::now();
  Verdict v;
  // Deciding the matrix with the outer universal block free leaves validity
  // unchanged and lets the countermodel name those variables.
  const FoPtr matrix = strip_universal_prefix(fo_rectify(f));
  Translation tr = translate_fo(matrix);
  const Nba negated = compile_s1s(s1s_not(tr.formula), limits);
  v.check_states = negated.states;
  // For universal sentences the verdict transfers to every algebra of the
  // class: validity by companionship, invalidity because the countermodel
  // already lives in the powerset algebra.
  v.transfers_to_all_algebras = fo_is_universal(f);
  auto witness = find_accepting_lasso(negated);
  if (!witness) {
    v.status = Status::Valid;
  } else {
    v.status = Status::Invalid;
    v.run = witness->run;
    const auto free_names = fo_free_vars(matrix);
    Valuation counter = decode_witness(witness->word, negated, tr.env, free_names);
    // Re-check: the countermodel must falsify the matrix.
    const Nba positive = compile_s1s(tr.formula, limits);
    v.formula_states = positive.states;
    if (accepts(positive, encode_word(to_set_names(counter, tr.env), positive.tracks)))
      throw std::logic_error("countermodel failed automaton re-check");
    if (fo_quantifier_free(matrix) && eval_qf(matrix, counter))
      throw std::logic_error("countermodel failed direct evaluation re-check");
    v.witness = std::move(counter);
  }
  v.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

Verdict is_satisfiable(const FoPtr& f, const Limits& limits) {
  const auto start = Clock::now();
  Verdict v;
  const FoPtr matrix = strip_existential_prefix(fo_rectify(f));
  Translation tr = translate_fo(matrix);
  const Nba automaton = compile_s1s(tr.formula, limits);
  v.formula_states = automaton.states;
  auto witness = find_accepting_lasso(automaton);
  if (!witness) {
    v.status = Status::Unsatisfiable;
  } else {
    v.status = Status::Satisfiable;
    v.run = witness->run;
    const auto free_names = fo_free_vars(matrix);
    Valuation model = decode_witness(witness->word, automaton, tr.env, free_names);
    // Re-check through a fresh compilation.
    Translation tr2 = translate_fo(matrix);
    const Nba again = compile_s1s(tr2.formula, limits);
    if (!accepts(again, encode_word(to_set_names(model, tr2.env), again.tracks)))
      throw std::logic_error("witness failed automaton re-check");
    if (fo_quantifier_free(matrix) && !eval_qf(matrix, model))
      throw std::logic_error("witness failed direct evaluation re-check");
    v.witness = std::move(model);
  }
  v.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

Verdict are_equivalent(const FoPtr& f, const FoPtr& g, const Limits& limits) {
  const auto start = Clock::now();
  Verdict v;
  std::set<std::string> all_names = fo_free_vars(f);
  const auto g_names = fo_free_vars(g);
  all_names.insert(g_names.begin(), g_names.end());
  TranslationEnv env = TranslationEnv::for_variables(all_names);
  const S1sPtr sf = translate_fo(f, env);
  const S1sPtr sg = translate_fo(g, env);
  auto [af, ag] = align_tracks(compile_s1s(sf, limits), compile_s1s(sg, limits));
  v.formula_states = af.states;
  v.check_states = ag.states;
  const Nba not_g = complement(ag, limits);
  const Nba not_f = complement(af, limits);
  auto witness = find_accepting_lasso(intersect(af, not_g, limits));
  if (!witness) witness = find_accepting_lasso(intersect(ag, not_f, limits));
  if (!witness) {
    v.status = Status::Equivalent;
  } else {
    v.status = Status::Inequivalent;
    v.run = witness->run;
    Valuation distinguishing = decode_witness(witness->word, af, env, all_names);
    const LassoWord word = encode_word(to_set_names(distinguishing, env), af.tracks);
    if (accepts(af, word) == accepts(ag, word))
      throw std::logic_error("distinguishing valuation failed re-check");
    v.witness = std::move(distinguishing);
  }
  v.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

Verdict holds(const FoPtr& f, const Valuation& v0, const Limits& limits) {
  const auto start = Clock::now();
  for (const auto& name : fo_free_vars(f))
    if (!v0.count(name)) throw std::out_of_range("unbound variable: " + name);
  Verdict v;
  Translation tr = translate_fo(f);
  const Nba automaton = compile_s1s(tr.formula, limits);
  v.formula_states = automaton.states;
  const bool truth =
      accepts(automaton, encode_word(to_set_names(v0, tr.env), automaton.tracks));
  v.status = truth ? Status::True : Status::False;
  v.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return v;
}

Verdict t_validity(const FoPtr& f, const Limits& limits) {
  Verdict v = is_valid(f, limits);
  // transfers_to_all_algebras is set exactly for universal sentences; for
  // those, validity over the powerset model settles validity in every
  // algebra of the class, and invalidity is already witnessed inside it.
  return v;
}

} // namespace pomega
