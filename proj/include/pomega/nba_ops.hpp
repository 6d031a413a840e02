#pragma once

#include <chrono>
#include <optional>

#include "pomega/errors.hpp"
#include "pomega/nba.hpp"

namespace pomega {

/// Resource budget for automaton constructions. Exceeding it raises
/// ResourceLimit; it never silently degrades a result.
struct Limits {
  std::size_t max_states = 200000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_states(std::size_t n, const char* what) const {
    if (n > max_states)
      throw ResourceLimit(std::string(what) + " exceeded the state cap of " +
                          std::to_string(max_states));
  }
  void check_time(const char* what) const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw ResourceLimit(std::string(what) + " exceeded the time budget");
  }
};

/// Complement over the full track alphabet. Reduces the input, takes the
/// two-copy construction when the input is deterministic, and otherwise the
/// rank-based construction (tight level rankings with an obligation set,
/// ranks bounded by twice the state count).
Nba complement(const Nba& a, const Limits& limits = {});

/// Rank-based complementation; exposed for direct testing.
Nba complement_rank(const Nba& a, const Limits& limits = {});
/// Complement of a deterministic automaton (at most one initial state and
/// one successor per state and letter): original copy plus an accepting
/// copy that forbids accepting states, plus a sink for missing transitions.
Nba complement_deterministic(const Nba& a);
/// Breakpoint complementation for inherently weak automata: the automaton
/// is read as a co-Buchi automaton over the states outside accepting
/// strongly connected components, and the complement is the deterministic
/// breakpoint construction with "obligation empty" acceptance.
Nba complement_weak(const Nba& a, const Limits& limits = {});
bool is_deterministic(const Nba& a);
/// True when every cyclic strongly connected component either contains no
/// accepting state or has no accepting-state-free cycle.
bool is_inherently_weak(const Nba& a);

/// Degeneralized product; both automata must carry the same track list.
Nba intersect(const Nba& a, const Nba& b, const Limits& limits = {});
/// Disjoint union with merged initial sets; same track list required.
Nba unite(const Nba& a, const Nba& b);

/// Removes a track, merging transitions that collapse.
Nba project(const Nba& a, const std::string& track);
/// Adds an absent track, duplicating each transition for both bit values.
/// The track is inserted at its lower-bound position in the track list.
Nba cylindrify(const Nba& a, const std::string& track);
/// Re-expresses the automaton over a superset of its tracks (any order);
/// missing tracks become unconstrained.
Nba retrack(const Nba& a, const std::vector<std::string>& target);
/// Cylindrifies both automata to the sorted union of their track lists.
std::pair<Nba, Nba> align_tracks(const Nba& a, const Nba& b);

struct EmptinessWitness {
  RunWitness run;
  LassoWord word;
};

/// Reachable-cycle analysis: returns a witness lasso word plus accepting run
/// exactly when the language is nonempty.
std::optional<EmptinessWitness> find_accepting_lasso(const Nba& a);
inline bool is_empty(const Nba& a) { return !find_accepting_lasso(a).has_value(); }

/// Membership of an ultimately periodic word, via the product with the
/// word's automaton.
bool accepts(const Nba& a, const LassoWord& w);
/// As accepts, but returns the run over a's states when accepted.
std::optional<RunWitness> accepting_run(const Nba& a, const LassoWord& w);

/// Language-preserving cleanup: drops states that are unreachable or cannot
/// reach an accepting cycle, quotients by direct-simulation equivalence and
/// removes simulation-dominated duplicate transitions.
Nba reduce(const Nba& a, const Limits& limits = {});

/// Equivalent automaton with exactly one initial state (a fresh state
/// copying the outgoing transitions of the old initial set, if needed).
Nba single_initial(const Nba& a);

} // namespace pomega
