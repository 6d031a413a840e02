#include "pomega/companion.hpp"

#include <stdexcept>

#include "pomega/compile.hpp"

namespace pomega {

std::string letter_variable(std::uint32_t letter, std::size_t width) {
  std::string name = "_a_";
  for (std::size_t k = 0; k < width; ++k) name.push_back(letter & (1u << k) ? '1' : '0');
  return name;
}

std::string state_variable(int index) { return "_q_" + std::to_string(index); }

TermPtr automaton_to_term(const Nba& a) {
  if (a.initial.size() != 1)
    throw std::invalid_argument("automaton_to_term requires a single initial state");
  std::vector<TermPtr> state_vars(a.states);
  for (int q = 0; q < a.states; ++q) state_vars[q] = var(state_variable(q));

  std::vector<TermPtr> part_terms;
  for (int q = 0; q < a.states; ++q) {
    std::vector<TermPtr> conj{state_vars[q]};
    for (int r = 0; r < a.states; ++r)
      if (r != q) conj.push_back(cmpl(state_vars[r]));
    part_terms.push_back(meet_all(conj));
  }
  const TermPtr part = join_all(part_terms);

  const TermPtr init_term = implies(init(), state_vars[a.initial[0]]);

  const auto by_src = a.by_source();
  std::vector<TermPtr> trans_terms;
  for (int q = 0; q < a.states; ++q) {
    std::vector<TermPtr> moves;
    for (const auto& t : by_src[q])
      moves.push_back(
          meet(var(letter_variable(t.letter, a.tracks.size())), next(state_vars[t.to])));
    trans_terms.push_back(implies(state_vars[q], join_all(moves)));
  }
  const TermPtr trans = meet_all(trans_terms);

  std::vector<TermPtr> accept_terms;
  for (int q : a.accepting) accept_terms.push_back(diamond(state_vars[q]));
  const TermPtr accept = join_all(accept_terms);

  return meet_all({part, init_term, trans, accept});
}

CompanionResult existential_companion(const FoPtr& f, const Limits& limits,
                                      std::size_t max_free_vars) {
  const auto free_names = fo_free_vars(f);
  if (free_names.size() > max_free_vars)
    throw ResourceLimit("companion construction capped at " +
                        std::to_string(max_free_vars) +
                        " free variables (letter block is exponential)");
  CompanionResult out;
  Translation tr = translate_fo(f);
  out.env = tr.env;
  out.automaton = single_initial(reduce(compile_s1s(tr.formula, limits), limits));
  out.term = automaton_to_term(out.automaton);

  const std::size_t n = out.automaton.tracks.size();
  for (std::uint32_t letter = 0; letter < (1u << n); ++letter) {
    std::vector<TermPtr> parts;
    for (std::size_t k = 0; k < n; ++k) {
      TermPtr p = var(out.env.algebra_name(out.automaton.tracks[k]));
      parts.push_back(letter & (1u << k) ? p : cmpl(p));
    }
    out.letter_bindings.emplace_back(letter_variable(letter, n), meet_all(parts));
  }

  std::vector<FoPtr> conjuncts{fo_eq(out.term, top())};
  for (const auto& [name, binding] : out.letter_bindings)
    conjuncts.push_back(fo_eq(var(name), binding));
  FoPtr body = fo_and_all(conjuncts);

  for (int q = out.automaton.states; q-- > 0;) body = fo_exists(state_variable(q), body);
  for (std::uint32_t letter = 1u << n; letter-- > 0;)
    body = fo_exists(letter_variable(letter, n), body);
  out.formula = body;
  return out;
}

} // namespace pomega
