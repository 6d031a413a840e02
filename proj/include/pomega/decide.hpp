#pragma once

#include <optional>
#include <string>

#include "pomega/fo.hpp"
#include "pomega/nba.hpp"
#include "pomega/nba_ops.hpp"
#include "pomega/upset.hpp"

namespace pomega {

enum class Status {
  Valid,
  Invalid,
  Satisfiable,
  Unsatisfiable,
  True,
  False,
  Equivalent,
  Inequivalent,
};

const char* status_name(Status s);
/// Statuses mapping to exit code 0; the others map to 1.
bool status_positive(Status s);

/// Decision outcome. A witness valuation is present exactly for invalid,
/// satisfiable and inequivalent verdicts, over the source formula's free
/// algebra variables, and has been re-checked against the formula.
struct Verdict {
  Status status;
  std::optional<Valuation> witness;
  std::optional<RunWitness> run;
  // Sizes of the automata built for the decision, and elapsed time.
  int formula_states = 0;
  int check_states = 0;
  double elapsed_seconds = 0.0;
  /// True when the verdict transfers from the powerset model to every
  /// algebra of the class (universal sentences only).
  bool transfers_to_all_algebras = false;
};

/// Validity over the powerset algebra (the universal closure for open
/// formulas): compiles the negation and tests emptiness. A countermodel is
/// decoded from the witness lasso and re-checked.
Verdict is_valid(const FoPtr& f, const Limits& limits = {});

/// Dual of is_valid; a satisfying valuation is returned and re-checked.
Verdict is_satisfiable(const FoPtr& f, const Limits& limits = {});

/// Language equality of the two compiled automata over the union of the
/// free variables; both difference automata are tested for emptiness.
Verdict are_equivalent(const FoPtr& f, const FoPtr& g, const Limits& limits = {});

/// Truth of f under the given ultimately periodic valuation, via membership
/// of the encoded word.
Verdict holds(const FoPtr& f, const Valuation& v, const Limits& limits = {});

/// Validity reported with its scope: for universal sentences the verdict
/// carries over to every algebra of the class; otherwise it concerns the
/// powerset model only and the verdict is flagged accordingly.
Verdict t_validity(const FoPtr& f, const Limits& limits = {});

} // namespace pomega
