#include "pomega/nba_ops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace pomega {

namespace {

Nba empty_nba(std::vector<std::string> tracks) {
  Nba a;
  a.tracks = std::move(tracks);
  a.states = 0;
  return a;
}

Nba universal_nba(std::vector<std::string> tracks) {
  Nba a;
  a.tracks = std::move(tracks);
  if (a.letter_count() > (1u << 20))
    throw ResourceLimit("universal automaton over too many tracks");
  a.states = 1;
  a.initial = {0};
  a.accepting = {0};
  for (std::uint32_t l = 0; l < a.letter_count(); ++l) a.transitions.push_back({0, l, 0});
  a.normalize();
  return a;
}

std::vector<char> reachable_states(const Nba& a) {
  std::vector<char> seen(a.states, 0);
  std::queue<int> queue;
  for (int s : a.initial) {
    seen[s] = 1;
    queue.push(s);
  }
  const auto by_src = a.by_source();
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop();
    for (const auto& t : by_src[s])
      if (!seen[t.to]) {
        seen[t.to] = 1;
        queue.push(t.to);
      }
  }
  return seen;
}

/// Iterative Tarjan; fills scc ids (0..count-1) and returns the count.
int strongly_connected_components(const Nba& a, std::vector<int>& scc) {
  const int n = a.states;
  scc.assign(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& t : a.transitions) adj[t.from].push_back(t.to);
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, count = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      if (fr.child < adj[fr.v].size()) {
        const int w = adj[fr.v][fr.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
      } else {
        if (low[fr.v] == index[fr.v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            scc[w] = count;
            if (w == fr.v) break;
          }
          ++count;
        }
        const int v = fr.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return count;
}

/// Keeps states that are reachable and can reach a cycle through an
/// accepting state; language-preserving.
Nba prune(const Nba& a) {
  if (a.states == 0) return a;
  const auto reach = reachable_states(a);
  std::vector<int> scc;
  const int nscc = strongly_connected_components(a, scc);
  std::vector<char> cyclic(nscc, 0);
  for (const auto& t : a.transitions)
    if (scc[t.from] == scc[t.to]) cyclic[scc[t.from]] = 1;
  std::vector<char> productive(a.states, 0);
  std::queue<int> queue;
  for (int q : a.accepting)
    if (cyclic[scc[q]] && !productive[q]) {
      productive[q] = 1;
      queue.push(q);
    }
  std::vector<std::vector<int>> radj(a.states);
  for (const auto& t : a.transitions) radj[t.to].push_back(t.from);
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop();
    for (int p : radj[s])
      if (!productive[p]) {
        productive[p] = 1;
        queue.push(p);
      }
  }
  std::vector<int> remap(a.states, -1);
  int kept = 0;
  for (int q = 0; q < a.states; ++q)
    if (reach[q] && productive[q]) remap[q] = kept++;
  if (kept == a.states) return a;
  Nba out;
  out.tracks = a.tracks;
  out.states = kept;
  for (int q : a.initial)
    if (remap[q] != -1) out.initial.push_back(remap[q]);
  if (out.initial.empty()) return empty_nba(a.tracks);
  for (int q : a.accepting)
    if (remap[q] != -1) out.accepting.push_back(remap[q]);
  for (const auto& t : a.transitions)
    if (remap[t.from] != -1 && remap[t.to] != -1)
      out.transitions.push_back({remap[t.from], t.letter, remap[t.to]});
  out.normalize();
  return out;
}

/// Per-state transitions grouped as (letter, sorted targets).
std::vector<std::vector<std::pair<std::uint32_t, std::vector<int>>>> grouped_successors(
    const Nba& a) {
  std::vector<std::vector<std::pair<std::uint32_t, std::vector<int>>>> out(a.states);
  for (const auto& t : a.transitions) {
    auto& row = out[t.from];
    if (row.empty() || row.back().first != t.letter) row.push_back({t.letter, {}});
    row.back().second.push_back(t.to);
  }
  return out;
}

/// Direct simulation preorder: sim[q][r] holds when r stepwise simulates q,
/// respecting acceptance.
std::vector<std::vector<char>> direct_simulation(const Nba& a) {
  const int n = a.states;
  const auto succ = grouped_successors(a);
  std::vector<std::vector<char>> sim(n, std::vector<char>(n, 1));
  for (int q = 0; q < n; ++q)
    for (int r = 0; r < n; ++r)
      if (a.is_accepting(q) && !a.is_accepting(r)) sim[q][r] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        if (!sim[q][r] || q == r) continue;
        bool ok = true;
        for (const auto& [letter, qsucc] : succ[q]) {
          const auto it = std::lower_bound(
              succ[r].begin(), succ[r].end(), letter,
              [](const auto& row, std::uint32_t l) { return row.first < l; });
          const bool has = it != succ[r].end() && it->first == letter;
          for (int qs : qsucc) {
            bool matched = false;
            if (has)
              for (int rs : it->second)
                if (sim[qs][rs]) {
                  matched = true;
                  break;
                }
            if (!matched) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) {
          sim[q][r] = 0;
          changed = true;
        }
      }
    }
  }
  return sim;
}

Nba quotient_by_equivalence(const Nba& a, const std::vector<std::vector<char>>& sim) {
  const int n = a.states;
  std::vector<int> cls(n, -1);
  int ncls = 0;
  for (int q = 0; q < n; ++q) {
    if (cls[q] != -1) continue;
    cls[q] = ncls;
    for (int r = q + 1; r < n; ++r)
      if (cls[r] == -1 && sim[q][r] && sim[r][q]) cls[r] = ncls;
    ++ncls;
  }
  if (ncls == n) return a;
  Nba out;
  out.tracks = a.tracks;
  out.states = ncls;
  for (int q : a.initial) out.initial.push_back(cls[q]);
  for (int q : a.accepting) out.accepting.push_back(cls[q]);
  for (const auto& t : a.transitions)
    out.transitions.push_back({cls[t.from], t.letter, cls[t.to]});
  out.normalize();
  return out;
}

/// Drops transitions whose target is strictly simulation-dominated by a
/// sibling target under the same letter.
Nba drop_dominated_transitions(const Nba& a, const std::vector<std::vector<char>>& sim) {
  Nba out = a;
  out.transitions.clear();
  const auto succ = grouped_successors(a);
  for (int q = 0; q < a.states; ++q) {
    for (const auto& [letter, targets] : succ[q]) {
      for (int t : targets) {
        bool dominated = false;
        for (int u : targets)
          if (u != t && sim[t][u] && !sim[u][t]) {
            dominated = true;
            break;
          }
        if (!dominated) out.transitions.push_back({q, letter, t});
      }
    }
  }
  out.normalize();
  return out;
}

constexpr int kSimulationSizeCap = 400;

} // namespace

Nba reduce(const Nba& a, const Limits& limits) {
  limits.check_time("reduce");
  Nba r = prune(a);
  if (r.states > 1 && r.states <= kSimulationSizeCap) {
    r = quotient_by_equivalence(r, direct_simulation(r));
    r = drop_dominated_transitions(r, direct_simulation(r));
    r = prune(r);
  }
  return r;
}

bool is_deterministic(const Nba& a) {
  if (a.initial.size() > 1) return false;
  for (std::size_t i = 1; i < a.transitions.size(); ++i) {
    const auto& prev = a.transitions[i - 1];
    const auto& cur = a.transitions[i];
    if (prev.from == cur.from && prev.letter == cur.letter) return false;
  }
  return true;
}

Nba complement_deterministic(const Nba& a) {
  if (!is_deterministic(a)) throw std::invalid_argument("input is not deterministic");
  if (a.initial.empty()) return universal_nba(a.tracks);
  const int n = a.states;
  const std::uint32_t letters = a.letter_count();
  if (letters > (1u << 20)) throw ResourceLimit("complement over too many tracks");
  // Layout: originals 0..n-1, accepting-free copy n..2n-1, sink 2n.
  const int sink = 2 * n;
  Nba c;
  c.tracks = a.tracks;
  c.states = 2 * n + 1;
  c.initial = {a.initial[0]};
  const auto succ = grouped_successors(a);
  for (int q = 0; q < n; ++q) {
    std::size_t idx = 0;
    for (std::uint32_t l = 0; l < letters; ++l) {
      const bool has = idx < succ[q].size() && succ[q][idx].first == l;
      if (has) {
        const int to = succ[q][idx].second[0];
        ++idx;
        c.transitions.push_back({q, l, to});
        if (!a.is_accepting(to)) {
          c.transitions.push_back({q, l, n + to});
          c.transitions.push_back({n + q, l, n + to});
        }
      } else {
        c.transitions.push_back({q, l, sink});
        c.transitions.push_back({n + q, l, sink});
      }
    }
  }
  for (std::uint32_t l = 0; l < letters; ++l) c.transitions.push_back({sink, l, sink});
  for (int q = 0; q < n; ++q)
    if (!a.is_accepting(q)) c.accepting.push_back(n + q);
  c.accepting.push_back(sink);
  c.normalize();
  return c;
}

namespace {

/// Rank-based complement state: entry -1 for an absent automaton state; in
/// the subset phase 1 for present; in the ranking phase 2*rank plus an
/// obligation bit. A leading byte separates the phases.
using RankKey = std::vector<std::int16_t>;

struct RankComplementBuilder {
  const Nba& a;
  const Limits& limits;
  std::uint32_t letters;
  std::vector<std::vector<std::pair<std::uint32_t, std::vector<int>>>> succ;
  std::map<RankKey, int> ids;
  std::vector<RankKey> keys;
  std::queue<int> work;
  Nba out;

  explicit RankComplementBuilder(const Nba& automaton, const Limits& lim)
      : a(automaton), limits(lim), letters(automaton.letter_count()),
        succ(grouped_successors(automaton)) {
    out.tracks = a.tracks;
  }

  int intern(const RankKey& key) {
    auto [it, inserted] = ids.try_emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      keys.push_back(key);
      limits.check_states(keys.size(), "rank-based complementation");
      work.push(it->second);
    }
    return it->second;
  }

  const std::vector<int>* targets(int q, std::uint32_t letter) const {
    const auto& row = succ[q];
    const auto it =
        std::lower_bound(row.begin(), row.end(), letter,
                         [](const auto& r, std::uint32_t l) { return r.first < l; });
    if (it == row.end() || it->first != letter) return nullptr;
    return &it->second;
  }

  /// Enumerates tight rankings over dom (odd maximum, every odd below it
  /// present, accepting states even) bounded pointwise by `bound`, and emits
  /// one successor per ranking.
  void emit_tight_rankings(int from_id, std::uint32_t letter, const std::vector<int>& dom,
                           const std::vector<int>& bound, const std::vector<char>& oblig_img,
                           bool breakpoint) {
    const int d = static_cast<int>(dom.size());
    std::vector<int> value(d, 0);
    auto emit = [&]() {
      RankKey key(static_cast<std::size_t>(a.states) + 1, -1);
      key[0] = 2;
      bool oblig_empty = true;
      for (int i = 0; i < d; ++i) {
        const bool even = value[i] % 2 == 0;
        const bool in_oblig = even && (breakpoint || oblig_img[i]);
        if (in_oblig) oblig_empty = false;
        key[dom[i] + 1] = static_cast<std::int16_t>(2 * value[i] + (in_oblig ? 1 : 0));
      }
      const int to = intern(key);
      out.transitions.push_back({from_id, letter, to});
      if (oblig_empty) out.accepting.push_back(to);
    };
    if (d == 0) {
      emit();
      return;
    }
    // Choose the odd maximum r, then assign values <= min(bound, r) making
    // sure every odd value up to r occurs.
    int max_bound = 0;
    for (int b : bound) max_bound = std::max(max_bound, b);
    for (int r = 1; r <= max_bound; r += 2) {
      auto assign = [&](auto&& self, int i, std::uint32_t odd_seen) -> void {
        const int remaining = d - i;
        const int needed = (r + 1) / 2 - static_cast<int>(std::popcount(odd_seen));
        if (needed > remaining) return;
        if (i == d) {
          emit();
          return;
        }
        const int q = dom[i];
        const int cap = std::min(bound[i], r);
        for (int v = 0; v <= cap; ++v) {
          if (v % 2 == 1 && a.is_accepting(q)) continue;
          value[i] = v;
          self(self, i + 1, v % 2 == 1 ? odd_seen | (1u << (v / 2)) : odd_seen);
        }
      };
      assign(assign, 0, 0);
    }
  }

  void expand(int id) {
    const RankKey key = keys[id];
    const bool phase1 = key[0] == 1;
    std::vector<int> dom;
    for (int q = 0; q < a.states; ++q)
      if (key[q + 1] >= 0) dom.push_back(q);
    for (std::uint32_t l = 0; l < letters; ++l) {
      limits.check_time("rank-based complementation");
      // Successor domain and rank bounds.
      std::map<int, int> bound; // state -> min predecessor rank
      std::vector<char> from_oblig(a.states, 0);
      for (int q : dom) {
        const auto* ts = targets(q, l);
        if (!ts) continue;
        const int rank = phase1 ? 0 : key[q + 1] / 2;
        const bool in_oblig = !phase1 && key[q + 1] % 2 == 1;
        for (int t : *ts) {
          auto [it, inserted] = bound.try_emplace(t, rank);
          if (!inserted) it->second = std::min(it->second, rank);
          if (in_oblig) from_oblig[t] = 1;
        }
      }
      std::vector<int> dom2;
      dom2.reserve(bound.size());
      for (const auto& [q, _] : bound) dom2.push_back(q);
      if (phase1) {
        // Subset successor.
        RankKey skey(static_cast<std::size_t>(a.states) + 1, -1);
        skey[0] = 1;
        for (int q : dom2) skey[q + 1] = 1;
        out.transitions.push_back({id, l, intern(skey)});
        // Guessed switch into the ranking phase: any tight ranking over the
        // successor domain, obligations reset.
        std::vector<int> caps(dom2.size(), 2 * static_cast<int>(dom2.size()) - 1);
        emit_tight_rankings(id, l, dom2, caps, std::vector<char>(dom2.size(), 0), true);
      } else {
        bool oblig_now = false;
        for (int q : dom)
          if (key[q + 1] % 2 == 1) oblig_now = true;
        std::vector<int> caps(dom2.size());
        std::vector<char> oblig_img(dom2.size(), 0);
        for (std::size_t i = 0; i < dom2.size(); ++i) {
          caps[i] = bound[dom2[i]];
          oblig_img[i] = from_oblig[dom2[i]];
        }
        emit_tight_rankings(id, l, dom2, caps, oblig_img, !oblig_now);
      }
    }
  }

  Nba build() {
    RankKey start(static_cast<std::size_t>(a.states) + 1, -1);
    start[0] = 1;
    for (int q : a.initial) start[q + 1] = 1;
    out.initial = {intern(start)};
    while (!work.empty()) {
      const int id = work.front();
      work.pop();
      expand(id);
    }
    out.states = static_cast<int>(keys.size());
    out.normalize();
    return out;
  }
};

} // namespace

Nba complement_rank(const Nba& a, const Limits& limits) {
  if (a.letter_count() > (1u << 16))
    throw ResourceLimit("complement over too many tracks");
  RankComplementBuilder builder(a, limits);
  return builder.build();
}

namespace {

/// Marks states lying in accepting strongly connected components (cyclic,
/// containing an accepting state).
std::vector<char> accepting_component_states(const Nba& a) {
  std::vector<int> scc;
  const int nscc = strongly_connected_components(a, scc);
  std::vector<char> cyclic(nscc, 0), has_acc(nscc, 0);
  for (const auto& t : a.transitions)
    if (scc[t.from] == scc[t.to]) cyclic[scc[t.from]] = 1;
  for (int q : a.accepting) has_acc[scc[q]] = 1;
  std::vector<char> out(a.states, 0);
  for (int q = 0; q < a.states; ++q) out[q] = cyclic[scc[q]] && has_acc[scc[q]];
  return out;
}

} // namespace

bool is_inherently_weak(const Nba& a) {
  std::vector<int> scc;
  const int nscc = strongly_connected_components(a, scc);
  std::vector<char> cyclic(nscc, 0), has_acc(nscc, 0);
  for (const auto& t : a.transitions)
    if (scc[t.from] == scc[t.to]) cyclic[scc[t.from]] = 1;
  for (int q : a.accepting) has_acc[scc[q]] = 1;
  // A component with accepting states must lose all its cycles when the
  // accepting states are removed; checked by topological elimination.
  for (int c = 0; c < nscc; ++c) {
    if (!cyclic[c] || !has_acc[c]) continue;
    std::vector<int> indegree(a.states, 0);
    auto inside = [&](int q) { return scc[q] == c && !a.is_accepting(q); };
    for (const auto& t : a.transitions)
      if (inside(t.from) && inside(t.to)) ++indegree[t.to];
    std::queue<int> ready;
    int nodes = 0;
    for (int q = 0; q < a.states; ++q)
      if (inside(q)) {
        ++nodes;
        if (indegree[q] == 0) ready.push(q);
      }
    int processed = 0;
    const auto by_src = a.by_source();
    while (!ready.empty()) {
      const int q = ready.front();
      ready.pop();
      ++processed;
      for (const auto& t : by_src[q])
        if (inside(t.to) && --indegree[t.to] == 0) ready.push(t.to);
    }
    if (processed < nodes) return false; // accepting-free cycle survives
  }
  return true;
}

Nba complement_weak(const Nba& a, const Limits& limits) {
  if (a.letter_count() > (1u << 16))
    throw ResourceLimit("complement over too many tracks");
  // Read as co-Buchi: a run is accepting iff it visits `bad` finitely.
  std::vector<char> good = accepting_component_states(a);
  const auto succ = grouped_successors(a);
  const std::uint32_t letters = a.letter_count();
  // Deterministic breakpoint construction over (subset, obligation) pairs;
  // obligation empty is the accepting condition of the complement.
  using Key = std::vector<std::int8_t>; // 0 absent, 1 in subset, 2 also in obligation
  std::map<Key, int> ids;
  std::vector<Key> keys;
  std::queue<int> work;
  Nba out;
  out.tracks = a.tracks;
  auto intern = [&](const Key& key) {
    auto [it, inserted] = ids.try_emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      keys.push_back(key);
      limits.check_states(keys.size(), "weak complementation");
      work.push(it->second);
      bool oblig_empty = true;
      for (std::int8_t v : key) oblig_empty &= v != 2;
      if (oblig_empty) out.accepting.push_back(it->second);
    }
    return it->second;
  };
  Key start(a.states, 0);
  for (int q : a.initial) start[q] = good[q] ? 2 : 1;
  // The first obligation set is seeded at the first breakpoint instead.
  for (auto& v : start)
    if (v == 2) v = 1;
  out.initial = {intern(start)};
  while (!work.empty()) {
    const int id = work.front();
    work.pop();
    limits.check_time("weak complementation");
    const Key key = keys[id];
    bool oblig_empty = true;
    for (std::int8_t v : key) oblig_empty &= v != 2;
    for (std::uint32_t l = 0; l < letters; ++l) {
      Key next(a.states, 0);
      for (int q = 0; q < a.states; ++q) {
        if (key[q] == 0) continue;
        const auto& row = succ[q];
        const auto it = std::lower_bound(
            row.begin(), row.end(), l,
            [](const auto& r, std::uint32_t letter) { return r.first < letter; });
        if (it == row.end() || it->first != l) continue;
        for (int to : it->second) {
          next[to] = std::max<std::int8_t>(next[to], 1);
          if (key[q] == 2 && good[to]) next[to] = 2;
        }
      }
      if (oblig_empty)
        for (int q = 0; q < a.states; ++q)
          if (next[q] == 1 && good[q]) next[q] = 2;
      out.transitions.push_back({id, l, intern(next)});
    }
  }
  out.states = static_cast<int>(keys.size());
  out.normalize();
  return out;
}

Nba complement(const Nba& a, const Limits& limits) {
  const Nba r = reduce(a, limits);
  Nba c;
  if (is_inherently_weak(r)) c = complement_weak(r, limits);
  else if (is_deterministic(r)) c = complement_deterministic(r);
  else c = complement_rank(r, limits);
  return reduce(c, limits);
}

namespace {

Nba intersect_impl(const Nba& a, const Nba& b, const Limits& limits,
                   std::vector<std::array<int, 3>>* decode) {
  if (a.tracks != b.tracks) throw std::invalid_argument("track mismatch in product");
  const auto sa = grouped_successors(a);
  const auto sb = grouped_successors(b);
  std::map<std::array<int, 3>, int> ids;
  std::vector<std::array<int, 3>> keys;
  std::queue<int> work;
  Nba out;
  out.tracks = a.tracks;
  auto intern = [&](const std::array<int, 3>& key) {
    auto [it, inserted] = ids.try_emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      keys.push_back(key);
      limits.check_states(keys.size(), "product");
      work.push(it->second);
    }
    return it->second;
  };
  for (int ia : a.initial)
    for (int ib : b.initial) out.initial.push_back(intern({ia, ib, 0}));
  while (!work.empty()) {
    const int id = work.front();
    work.pop();
    limits.check_time("product");
    const auto [qa, qb, phase] = keys[id];
    const int next_phase = phase == 0 ? (a.is_accepting(qa) ? 1 : 0)
                                      : (b.is_accepting(qb) ? 0 : 1);
    if (phase == 1 && b.is_accepting(qb)) out.accepting.push_back(id);
    // Merge-join the two sorted letter lists.
    std::size_t i = 0, j = 0;
    const auto& ra = sa[qa];
    const auto& rb = sb[qb];
    while (i < ra.size() && j < rb.size()) {
      if (ra[i].first < rb[j].first) ++i;
      else if (rb[j].first < ra[i].first) ++j;
      else {
        for (int ta : ra[i].second)
          for (int tb : rb[j].second)
            out.transitions.push_back({id, ra[i].first, intern({ta, tb, next_phase})});
        ++i;
        ++j;
      }
    }
  }
  out.states = static_cast<int>(keys.size());
  out.normalize();
  if (decode) *decode = std::move(keys);
  return out;
}

} // namespace

Nba intersect(const Nba& a, const Nba& b, const Limits& limits) {
  return intersect_impl(a, b, limits, nullptr);
}

Nba unite(const Nba& a, const Nba& b) {
  if (a.tracks != b.tracks) throw std::invalid_argument("track mismatch in union");
  Nba out;
  out.tracks = a.tracks;
  out.states = a.states + b.states;
  out.initial = a.initial;
  out.accepting = a.accepting;
  out.transitions = a.transitions;
  for (int q : b.initial) out.initial.push_back(q + a.states);
  for (int q : b.accepting) out.accepting.push_back(q + a.states);
  for (const auto& t : b.transitions)
    out.transitions.push_back({t.from + a.states, t.letter, t.to + a.states});
  out.normalize();
  return out;
}

Nba project(const Nba& a, const std::string& track) {
  const auto it = std::find(a.tracks.begin(), a.tracks.end(), track);
  if (it == a.tracks.end()) throw std::invalid_argument("unknown track: " + track);
  const std::uint32_t k = static_cast<std::uint32_t>(it - a.tracks.begin());
  Nba out;
  out.tracks = a.tracks;
  out.tracks.erase(out.tracks.begin() + k);
  out.states = a.states;
  out.initial = a.initial;
  out.accepting = a.accepting;
  const std::uint32_t low = (1u << k) - 1;
  for (const auto& t : a.transitions)
    out.transitions.push_back({t.from, (t.letter & low) | ((t.letter >> (k + 1)) << k), t.to});
  out.normalize();
  return out;
}

Nba cylindrify(const Nba& a, const std::string& track) {
  if (std::find(a.tracks.begin(), a.tracks.end(), track) != a.tracks.end())
    throw std::invalid_argument("duplicate track: " + track);
  const std::uint32_t k = static_cast<std::uint32_t>(
      std::lower_bound(a.tracks.begin(), a.tracks.end(), track) - a.tracks.begin());
  Nba out;
  out.tracks = a.tracks;
  out.tracks.insert(out.tracks.begin() + k, track);
  out.states = a.states;
  out.initial = a.initial;
  out.accepting = a.accepting;
  const std::uint32_t low = (1u << k) - 1;
  for (const auto& t : a.transitions) {
    const std::uint32_t spread = (t.letter & low) | ((t.letter >> k) << (k + 1));
    out.transitions.push_back({t.from, spread, t.to});
    out.transitions.push_back({t.from, spread | (1u << k), t.to});
  }
  out.normalize();
  return out;
}

Nba retrack(const Nba& a, const std::vector<std::string>& target) {
  if (a.tracks == target) return a;
  std::vector<std::uint32_t> pos(a.tracks.size());
  std::uint32_t used_mask = 0;
  for (std::size_t k = 0; k < a.tracks.size(); ++k) {
    const auto it = std::find(target.begin(), target.end(), a.tracks[k]);
    if (it == target.end())
      throw std::invalid_argument("target track list misses track: " + a.tracks[k]);
    pos[k] = static_cast<std::uint32_t>(it - target.begin());
    used_mask |= 1u << pos[k];
  }
  const std::uint32_t full_mask =
      target.size() >= 32 ? 0xffffffffu : (1u << target.size()) - 1;
  const std::uint32_t missing = full_mask & ~used_mask;
  if (std::popcount(missing) > 16) throw ResourceLimit("retrack adds too many tracks");
  Nba out;
  out.tracks = target;
  out.states = a.states;
  out.initial = a.initial;
  out.accepting = a.accepting;
  for (const auto& t : a.transitions) {
    std::uint32_t base = 0;
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (t.letter & (1u << k)) base |= 1u << pos[k];
    // Iterate all sub-masks of the missing bits, including zero.
    std::uint32_t sub = missing;
    while (true) {
      out.transitions.push_back({t.from, base | sub, t.to});
      if (sub == 0) break;
      sub = (sub - 1) & missing;
    }
  }
  out.normalize();
  return out;
}

std::pair<Nba, Nba> align_tracks(const Nba& a, const Nba& b) {
  if (a.tracks == b.tracks) return {a, b};
  std::vector<std::string> target = a.tracks;
  target.insert(target.end(), b.tracks.begin(), b.tracks.end());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  return {retrack(a, target), retrack(b, target)};
}

namespace {

struct BfsTree {
  std::vector<int> dist;
  std::vector<int> parent;
  std::vector<std::uint32_t> parent_letter;
};

BfsTree bfs_from(const Nba& a, const std::vector<int>& sources) {
  BfsTree tree;
  tree.dist.assign(a.states, -1);
  tree.parent.assign(a.states, -1);
  tree.parent_letter.assign(a.states, 0);
  const auto by_src = a.by_source();
  std::queue<int> queue;
  for (int s : sources)
    if (tree.dist[s] == -1) {
      tree.dist[s] = 0;
      queue.push(s);
    }
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop();
    for (const auto& t : by_src[s]) {
      if (tree.dist[t.to] != -1) continue;
      tree.dist[t.to] = tree.dist[s] + 1;
      tree.parent[t.to] = s;
      tree.parent_letter[t.to] = t.letter;
      queue.push(t.to);
    }
  }
  return tree;
}

} // namespace

std::optional<EmptinessWitness> find_accepting_lasso(const Nba& a) {
  if (a.states == 0 || a.initial.empty()) return std::nullopt;
  const auto reach = reachable_states(a);
  std::vector<int> scc;
  const int nscc = strongly_connected_components(a, scc);
  std::vector<char> cyclic(nscc, 0);
  for (const auto& t : a.transitions)
    if (scc[t.from] == scc[t.to]) cyclic[scc[t.from]] = 1;
  const BfsTree from_init = bfs_from(a, a.initial);
  int best = -1;
  for (int q : a.accepting) {
    if (!reach[q] || !cyclic[scc[q]]) continue;
    if (best == -1 || from_init.dist[q] < from_init.dist[best]) best = q;
  }
  if (best == -1) return std::nullopt;

  // Stem: shortest path from the initial set to the chosen accepting state.
  std::vector<int> stem_states;
  std::vector<std::uint32_t> stem_letters;
  for (int s = best; from_init.parent[s] != -1; s = from_init.parent[s]) {
    stem_states.push_back(from_init.parent[s]);
    stem_letters.push_back(from_init.parent_letter[s]);
  }
  std::reverse(stem_states.begin(), stem_states.end());
  std::reverse(stem_letters.begin(), stem_letters.end());

  // Loop: shortest positive-length cycle through the accepting state.
  const BfsTree from_best = bfs_from(a, {best});
  int back_from = -1;
  std::uint32_t back_letter = 0;
  int best_len = -1;
  for (const auto& t : a.transitions) {
    if (t.to != best || from_best.dist[t.from] == -1) continue;
    const int len = from_best.dist[t.from] + 1;
    if (best_len == -1 || len < best_len) {
      best_len = len;
      back_from = t.from;
      back_letter = t.letter;
    }
  }
  std::vector<int> loop_states;
  std::vector<std::uint32_t> loop_letters;
  for (int s = back_from; from_best.parent[s] != -1; s = from_best.parent[s]) {
    loop_states.push_back(from_best.parent[s]);
    loop_letters.push_back(from_best.parent_letter[s]);
  }
  std::reverse(loop_states.begin(), loop_states.end());
  std::reverse(loop_letters.begin(), loop_letters.end());
  loop_states.push_back(back_from);
  loop_letters.push_back(back_letter);

  EmptinessWitness w;
  w.run.stem_states = std::move(stem_states);
  w.run.loop_states = std::move(loop_states);
  w.run.accepting_state = best;
  w.word = LassoWord(static_cast<int>(a.tracks.size()), std::move(stem_letters),
                     std::move(loop_letters));
  return w;
}

bool accepts(const Nba& a, const LassoWord& w) {
  if (w.width != static_cast<int>(a.tracks.size()))
    throw std::invalid_argument("word width does not match track count");
  return find_accepting_lasso(intersect(a, word_automaton(w, a.tracks))).has_value();
}

std::optional<RunWitness> accepting_run(const Nba& a, const LassoWord& w) {
  if (w.width != static_cast<int>(a.tracks.size()))
    throw std::invalid_argument("word width does not match track count");
  std::vector<std::array<int, 3>> decode;
  const Nba product = intersect_impl(a, word_automaton(w, a.tracks), Limits{}, &decode);
  const auto witness = find_accepting_lasso(product);
  if (!witness) return std::nullopt;
  RunWitness run;
  for (int s : witness->run.stem_states) run.stem_states.push_back(decode[s][0]);
  for (int s : witness->run.loop_states) run.loop_states.push_back(decode[s][0]);
  run.accepting_state = -1;
  for (int s : run.loop_states)
    if (a.is_accepting(s)) {
      run.accepting_state = s;
      break;
    }
  return run;
}

Nba single_initial(const Nba& a) {
  if (a.initial.size() == 1) return a;
  Nba out = a;
  const int fresh = a.states;
  out.states = a.states + 1;
  for (const auto& t : a.transitions)
    if (a.is_initial(t.from)) out.transitions.push_back({fresh, t.letter, t.to});
  out.initial = {fresh};
  out.normalize();
  return out;
}

} // namespace pomega
