#include "pomega/compile.hpp"

#include <algorithm>
#include <map>

namespace pomega {

namespace {

// Constructors with true/false folding.

S1sPtr mk_or(S1sPtr a, S1sPtr b) {
  if (a->kind == S1sFormula::Kind::True || b->kind == S1sFormula::Kind::True)
    return s1s_true();
  if (a->kind == S1sFormula::Kind::False) return b;
  if (b->kind == S1sFormula::Kind::False) return a;
  return s1s_or(std::move(a), std::move(b));
}

S1sPtr mk_and(S1sPtr a, S1sPtr b) {
  if (a->kind == S1sFormula::Kind::False || b->kind == S1sFormula::Kind::False)
    return s1s_false();
  if (a->kind == S1sFormula::Kind::True) return b;
  if (b->kind == S1sFormula::Kind::True) return a;
  return s1s_and(std::move(a), std::move(b));
}

S1sPtr mk_not(S1sPtr a) {
  if (a->kind == S1sFormula::Kind::True) return s1s_false();
  if (a->kind == S1sFormula::Kind::False) return s1s_true();
  if (a->kind == S1sFormula::Kind::Not) return a->lhs;
  return s1s_not(std::move(a));
}

S1sPtr mk_exists2(std::string binder, S1sPtr body) {
  if (body->kind == S1sFormula::Kind::True || body->kind == S1sFormula::Kind::False)
    return body;
  return s1s_exists2(std::move(binder), std::move(body));
}

/// Sugar elimination, before negation pushing.
S1sPtr eliminate_sugar(const S1sPtr& f) {
  switch (f->kind) {
    case S1sFormula::Kind::Mem: return s1s_subset(f->var1, f->var2);
    case S1sFormula::Kind::EqSet:
      if (f->var1 == f->var2) return s1s_true();
      return mk_and(s1s_subset(f->var1, f->var2), s1s_subset(f->var2, f->var1));
    case S1sFormula::Kind::Le:
      if (f->var1 == f->var2) return s1s_sing(f->var1);
      return f;
    case S1sFormula::Kind::SuccInd:
      if (f->var1 == f->var2) return s1s_false();
      return f;
    case S1sFormula::Kind::Exists1:
      return mk_exists2(f->var1, mk_and(s1s_sing(f->var1), eliminate_sugar(f->lhs)));
    case S1sFormula::Kind::Or:
      return mk_or(eliminate_sugar(f->lhs), eliminate_sugar(f->rhs));
    case S1sFormula::Kind::And:
      return mk_and(eliminate_sugar(f->lhs), eliminate_sugar(f->rhs));
    case S1sFormula::Kind::Not: return mk_not(eliminate_sugar(f->lhs));
    case S1sFormula::Kind::Exists2: return mk_exists2(f->var1, eliminate_sugar(f->lhs));
    default: return f;
  }
}

/// Negation pushing through the boolean connectives, memoized on (node,
/// polarity) so shared subtrees stay shared for the compile cache.
struct NegationPusher {
  std::map<std::pair<const S1sFormula*, bool>, S1sPtr> memo;

  S1sPtr run(const S1sPtr& f, bool positive) {
    const auto key = std::make_pair(f.get(), positive);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    S1sPtr out;
    switch (f->kind) {
      case S1sFormula::Kind::Or:
        out = positive ? mk_or(run(f->lhs, true), run(f->rhs, true))
                       : mk_and(run(f->lhs, false), run(f->rhs, false));
        break;
      case S1sFormula::Kind::And:
        out = positive ? mk_and(run(f->lhs, true), run(f->rhs, true))
                       : mk_or(run(f->lhs, false), run(f->rhs, false));
        break;
      case S1sFormula::Kind::Not: out = run(f->lhs, !positive); break;
      case S1sFormula::Kind::Exists2: {
        S1sPtr body = run(f->lhs, true);
        out = positive ? mk_exists2(f->var1, std::move(body))
                       : mk_not(mk_exists2(f->var1, std::move(body)));
        break;
      }
      case S1sFormula::Kind::True: out = positive ? s1s_true() : s1s_false(); break;
      case S1sFormula::Kind::False: out = positive ? s1s_false() : s1s_true(); break;
      default: out = positive ? f : mk_not(f); break;
    }
    memo.emplace(key, out);
    return out;
  }
};

// Primitive atom automata, over sorted track lists.

struct TrackBits {
  std::vector<std::string> tracks;
  std::uint32_t bit(const std::string& name) const {
    const auto it = std::find(tracks.begin(), tracks.end(), name);
    return 1u << (it - tracks.begin());
  }
};

TrackBits sorted_tracks(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return {std::move(names)};
}

Nba universal_atom() {
  Nba a;
  a.states = 1;
  a.initial = {0};
  a.accepting = {0};
  a.transitions = {{0, 0, 0}};
  a.normalize();
  return a;
}

Nba false_atom() {
  Nba a;
  a.states = 0;
  return a;
}

Nba subset_atom(const std::string& p, const std::string& q) {
  if (p == q) {
    Nba a;
    a.tracks = {p};
    a.states = 1;
    a.initial = {0};
    a.accepting = {0};
    a.transitions = {{0, 0, 0}, {0, 1, 0}};
    a.normalize();
    return a;
  }
  TrackBits tb = sorted_tracks({p, q});
  const std::uint32_t bp = tb.bit(p), bq = tb.bit(q);
  Nba a;
  a.tracks = tb.tracks;
  a.states = 1;
  a.initial = {0};
  a.accepting = {0};
  for (std::uint32_t l = 0; l < 4; ++l)
    if (!(l & bp) || (l & bq)) a.transitions.push_back({0, l, 0});
  a.normalize();
  return a;
}

/// Searches for a position n with n in P and n+1 in Q, deterministically:
/// waiting / saw P at the previous instant / done.
Nba succ_atom(const std::string& p, const std::string& q) {
  TrackBits tb = sorted_tracks({p, q});
  const std::uint32_t bp = tb.bit(p), bq = tb.bit(q);
  Nba a;
  a.tracks = tb.tracks;
  a.states = 3;
  a.initial = {0};
  a.accepting = {2};
  for (std::uint32_t l = 0; l < a.letter_count(); ++l) {
    a.transitions.push_back({0, l, l & bp ? 1 : 0});
    a.transitions.push_back({1, l, l & bq ? 2 : (l & bp ? 1 : 0)});
    a.transitions.push_back({2, l, 2});
  }
  a.normalize();
  return a;
}

Nba sing_atom(const std::string& x) {
  Nba a;
  a.tracks = {x};
  a.states = 2;
  a.initial = {0};
  a.accepting = {1};
  a.transitions = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}};
  a.normalize();
  return a;
}

/// Both tracks singletons with the x position at or before the y position.
Nba le_atom(const std::string& x, const std::string& y) {
  TrackBits tb = sorted_tracks({x, y});
  const std::uint32_t bx = tb.bit(x), by = tb.bit(y);
  Nba a;
  a.tracks = tb.tracks;
  a.states = 3;
  a.initial = {0};
  a.accepting = {2};
  a.transitions = {{0, 0, 0},       {0, bx, 1},      {0, bx | by, 2},
                   {1, 0, 1},       {1, by, 2},      {2, 0, 2}};
  a.normalize();
  return a;
}

/// Both tracks singletons with the y position directly after the x position.
Nba succ_ind_atom(const std::string& x, const std::string& y) {
  TrackBits tb = sorted_tracks({x, y});
  const std::uint32_t bx = tb.bit(x), by = tb.bit(y);
  Nba a;
  a.tracks = tb.tracks;
  a.states = 3;
  a.initial = {0};
  a.accepting = {2};
  a.transitions = {{0, 0, 0}, {0, bx, 1}, {1, by, 2}, {2, 0, 2}};
  a.normalize();
  return a;
}

struct Compiler {
  const Limits& limits;
  std::map<const S1sFormula*, Nba> memo;

  explicit Compiler(const Limits& lim) : limits(lim) {}

  Nba run(const S1sPtr& f) {
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    limits.check_time("compile");
    Nba out;
    switch (f->kind) {
      case S1sFormula::Kind::True: out = universal_atom(); break;
      case S1sFormula::Kind::False: out = false_atom(); break;
      case S1sFormula::Kind::Subset: out = subset_atom(f->var1, f->var2); break;
      case S1sFormula::Kind::Succ: out = succ_atom(f->var1, f->var2); break;
      case S1sFormula::Kind::Sing: out = sing_atom(f->var1); break;
      case S1sFormula::Kind::Le: out = le_atom(f->var1, f->var2); break;
      case S1sFormula::Kind::SuccInd: out = succ_ind_atom(f->var1, f->var2); break;
      case S1sFormula::Kind::Or: {
        auto [a, b] = align_tracks(run(f->lhs), run(f->rhs));
        out = reduce(unite(a, b), limits);
        break;
      }
      case S1sFormula::Kind::And: {
        auto [a, b] = align_tracks(run(f->lhs), run(f->rhs));
        out = reduce(intersect(a, b, limits), limits);
        break;
      }
      case S1sFormula::Kind::Not: out = complement(run(f->lhs), limits); break;
      case S1sFormula::Kind::Exists2: {
        Nba body = run(f->lhs);
        const auto& tr = body.tracks;
        if (std::find(tr.begin(), tr.end(), f->var1) != tr.end())
          out = reduce(project(body, f->var1), limits);
        else
          out = body;
        break;
      }
      case S1sFormula::Kind::Mem:
      case S1sFormula::Kind::EqSet:
      case S1sFormula::Kind::Exists1:
        throw std::invalid_argument("compile requires a desugared formula");
    }
    memo.emplace(f.get(), out);
    return out;
  }
};

} // namespace

S1sPtr desugar(const S1sPtr& f) {
  NegationPusher pusher;
  return pusher.run(eliminate_sugar(f), true);
}

Nba compile(const S1sPtr& f, const Limits& limits) {
  Compiler compiler(limits);
  return compiler.run(f);
}

Nba compile_s1s(const S1sPtr& f, const Limits& limits) {
  return compile(desugar(f), limits);
}

S1sPtr sing_kernel_reference(const std::string& x, const std::string& helper1,
                             const std::string& helper2) {
  // Nonempty: not every set contains x's complement side, i.e. there is a
  // set not including x from above: ex2 Y. !(X sub Y).
  S1sPtr nonempty = s1s_exists2(helper1, s1s_not(s1s_subset(x, helper1)));
  // Every subset of X is empty or X: all2 Y. !(Y sub X) || (all2 Z. Y sub Z) || X sub Y.
  S1sPtr empty_y = s1s_forall2(helper2, s1s_subset(helper1, helper2));
  S1sPtr minimal = s1s_forall2(
      helper1,
      s1s_or(s1s_or(s1s_not(s1s_subset(helper1, x)), empty_y), s1s_subset(x, helper1)));
  return s1s_and(nonempty, minimal);
}

} // namespace pomega
