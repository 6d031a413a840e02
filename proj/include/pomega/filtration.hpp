#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pomega/frame.hpp"
#include "pomega/nnf.hpp"
#include "pomega/upset.hpp"

namespace pomega {

/// Output of the filtration: the quotient by agreement on the closure set,
/// the induced relations, the balloon-ordered class enumeration, the
/// schedule through the classes and the ultimately periodic valuation read
/// off from it.
struct FiltrationResult {
  int class_count = 0;
  int alpha = 0; // strictly increasing stem length of the balloon
  int beta = 1;  // size of the final cluster
  std::vector<std::uint32_t> classes; // balloon position -> node mask
  std::vector<int> node_class;        // node -> balloon position
  std::vector<std::uint32_t> rel_f;   // image relation of the successor
  std::vector<std::uint32_t> leq_y;   // reflexive-transitive closure of rel_f
  std::vector<std::uint32_t> preceq;  // the linear preorder on classes
  std::vector<int> sigma_stem;        // schedule, class per instant
  std::vector<int> sigma_loop;
  std::vector<std::uint64_t> milestones;     // schedule position of each class
  std::vector<std::uint64_t> node_positions; // node -> witnessing instant
  Valuation p_bar;                           // variables of the closure set

  int sigma_at(std::uint64_t n) const {
    if (n < sigma_stem.size()) return sigma_stem[n];
    return sigma_loop[(n - sigma_stem.size()) % sigma_loop.size()];
  }
  bool f_step(int y, int z) const { return (rel_f[y] >> z) & 1; }
};

/// Runs the construction. The frame must pass check_frame and gamma must be
/// filterable with its variables covered by the frame's valuation.
FiltrationResult filtrate(const LassoFrame& fr, const FilterableSet& gamma);

struct StarViolation {
  int node;
  std::string term;
  std::uint64_t position;
};

struct StarReport {
  bool ok = true;
  std::vector<StarViolation> violations;
};

/// Checks the filtration property: membership of a node in a closure term
/// on the frame forces membership of the node's instant in the term's value
/// over the schedule valuation. p_bar may be overridden to probe the check.
StarReport verify_star(const FiltrationResult& res, const LassoFrame& fr,
                       const FilterableSet& gamma);
StarReport verify_star(const FiltrationResult& res, const LassoFrame& fr,
                       const FilterableSet& gamma, const Valuation& p_bar);

/// Structural assertions on a filtration result: quotient/schedule
/// relations, linearity, balloon shape, basepoint isolation and the
/// schedule properties. Returns human-readable violations; empty means all
/// hold.
std::vector<std::string> check_filtration_invariants(const FiltrationResult& res,
                                                     const LassoFrame& fr);

struct Prop35Report {
  bool con = true;
  bool dum = true;
  bool linear = true;
  std::string detail;
  bool ok() const { return con && dum && linear; }
};

/// Exhaustively checks the two derived laws (Con and Dum) over all subset
/// valuations and the linearity of the preorder. Capped at 12 nodes.
Prop35Report verify_prop35(const LassoFrame& fr);

} // namespace pomega
