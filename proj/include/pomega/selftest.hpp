#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pomega/fo.hpp"
#include "pomega/frame.hpp"
#include "pomega/nba.hpp"
#include "pomega/nba_ops.hpp"
#include "pomega/nnf.hpp"
#include "pomega/s1s.hpp"
#include "pomega/upset.hpp"

namespace pomega::selftest {

/// Deterministic generator; one per suite, seeded from the battery seed.
using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi); // inclusive

UpSet random_upset(Rng& rng, int max_stem, int max_loop);
Valuation random_valuation(Rng& rng, const std::vector<std::string>& vars, int max_stem,
                           int max_loop);
LassoWord random_word(Rng& rng, int width, int max_stem, int max_loop);
Nba random_nba(Rng& rng, int max_states, int max_tracks);
TermPtr random_term(Rng& rng, const std::vector<std::string>& vars, int depth);
FoPtr random_qf_formula(Rng& rng, const std::vector<std::string>& vars, int depth);
S1sPtr random_kernel_formula(Rng& rng, const std::vector<std::string>& set_vars, int depth);
NnfPtr random_nnf_term(Rng& rng, const std::vector<std::string>& vars, int depth);
LassoFrame random_frame(Rng& rng, int max_nodes, const std::vector<std::string>& vars);

/// Independent membership check: searches the position-annotated run graph
/// directly, with no use of the automaton operations.
bool brute_accepts(const Nba& a, const LassoWord& w);
/// Enumerates every lasso word over the full alphabet within the given
/// stem/loop bounds and returns the first accepted one.
std::optional<LassoWord> brute_find_word(const Nba& a, int max_stem, int max_loop);

struct CriterionResult {
  int index;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct BatteryResult {
  std::vector<CriterionResult> criteria;
  double total_seconds = 0.0;
  bool all_pass() const;
};

/// Runs the full acceptance battery. Each criterion is timed; a resource
/// abort is reported distinctly in the detail and counts as a failure.
BatteryResult run_acceptance(std::uint64_t seed, const Limits& limits);

/// One line per criterion plus a summary; returns all_pass().
bool print_battery(const BatteryResult& battery, std::ostream& out);

} // namespace pomega::selftest
