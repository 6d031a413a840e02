#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pomega/nnf.hpp"
#include "pomega/term.hpp"

namespace pomega {

/// Finite frame in lasso shape: nodes 0..size-1, successor i -> i+1 with
/// the last node looping back to loop_start, basepoint 0, an explicit
/// preorder stored as row bitmasks, and a valuation mapping variables to
/// node subsets. Node subsets are bitmasks (bit i = node i).
struct LassoFrame {
  int size = 0;
  int loop_start = 0;
  std::vector<std::uint32_t> leq; // leq[x] has bit y iff x <= y
  std::map<std::string, std::uint32_t> valuation;

  static constexpr int kMaxNodes = 20;

  int successor(int x) const { return x + 1 < size ? x + 1 : loop_start; }
  bool le(int x, int y) const { return (leq[x] >> y) & 1; }
  std::uint32_t full() const { return size >= 32 ? ~0u : (1u << size) - 1; }

  /// Lasso frame with the successor-reachability preorder (integer order up
  /// to the last node, with the loop nodes forming one cluster).
  static LassoFrame lasso(int size, int loop_start);
};

struct FrameCheckReport {
  struct Item {
    std::string condition;
    bool pass;
    std::string detail; // violating instance on failure
  };
  std::vector<Item> items;
  bool ok() const;
};

/// Checks that leq is a preorder and the four frame conditions: (i) x <=
/// f(x) and x < y implies f(x) <= y; (ii) forward-closed sets are upward
/// closed (exhaustive over all subsets); (iii) the basepoint is a minimum;
/// (iv) the successor never returns to the basepoint.
FrameCheckReport check_frame(const LassoFrame& fr);

/// Dual-algebra evaluation: F is the downset, X the successor preimage, I
/// the basepoint singleton.
std::uint32_t eval_on_frame(const TermPtr& t, const LassoFrame& fr);
std::uint32_t eval_on_frame(const NnfPtr& t, const LassoFrame& fr);

/// Frame file format: `nodes: m`, `loopstart: k`, optional `leq: x y, ...`
/// (the explicit relation), then `name = nodebitstring` valuation lines.
LassoFrame parse_frame(const std::string& text);
std::string frame_to_text(const LassoFrame& fr);

} // namespace pomega
