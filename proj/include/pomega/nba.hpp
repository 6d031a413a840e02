#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pomega/upset.hpp"

namespace pomega {

/// One transition; the letter is a bitmask over the automaton's track list
/// (bit k set = track k present in the letter).
struct Transition {
  int from;
  std::uint32_t letter;
  int to;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic Buchi automaton over a track alphabet. Kept immutable
/// after construction; operations return new automata.
struct Nba {
  std::vector<std::string> tracks;
  int states = 0;
  std::vector<int> initial;            // sorted, unique
  std::vector<int> accepting;          // sorted, unique
  std::vector<Transition> transitions; // sorted, unique

  std::uint32_t letter_count() const { return 1u << tracks.size(); }
  bool is_initial(int q) const;
  bool is_accepting(int q) const;

  /// Sorts and deduplicates the state lists and transitions, and checks the
  /// structural invariants (endpoints in range, letters within width).
  void normalize();

  /// Successor lists grouped by source state, sorted by (letter, target).
  std::vector<std::vector<Transition>> by_source() const;
};

/// Ultimately periodic word: finite stem plus nonempty loop of letters,
/// kept canonical (minimal loop period, then minimal stem).
struct LassoWord {
  int width = 0;
  std::vector<std::uint32_t> stem;
  std::vector<std::uint32_t> loop;

  LassoWord() : loop{0} {}
  LassoWord(int width, std::vector<std::uint32_t> stem, std::vector<std::uint32_t> loop);

  std::uint32_t at(std::uint64_t i) const {
    return i < stem.size() ? stem[i] : loop[(i - stem.size()) % loop.size()];
  }
  bool operator==(const LassoWord& o) const {
    return width == o.width && stem == o.stem && loop == o.loop;
  }
};

/// Accepting run on a lasso word: states along the stem and along the loop
/// (the run's loop length may be a multiple of the word's), plus an
/// accepting state that the loop visits.
struct RunWitness {
  std::vector<int> stem_states;
  std::vector<int> loop_states;
  int accepting_state = -1;

  int state_at(std::uint64_t i) const {
    return i < stem_states.size()
               ? stem_states[i]
               : loop_states[(i - stem_states.size()) % loop_states.size()];
  }
};

/// Line-based text format:
///   tracks: p q
///   states: 3
///   init: 0
///   final: 2
///   0 10 1
/// Transition letters are bitstrings over the track order (character k is
/// track k); with no tracks the letter column is "-". Transition lines are
/// ordered lexicographically.
std::string nba_to_text(const Nba& a);
Nba nba_from_text(const std::string& text);

/// Automaton with |stem|+|loop| states accepting exactly the given word.
Nba word_automaton(const LassoWord& w, std::vector<std::string> tracks);

/// Word whose letter at position i collects the tracks whose sets contain i
/// (track k's bit is set iff i lies in the valuation of tracks[k]).
LassoWord encode_word(const Valuation& v, const std::vector<std::string>& tracks);

/// Positionwise inverse of encode_word.
Valuation decode_word(const LassoWord& w, const std::vector<std::string>& tracks);

} // namespace pomega
