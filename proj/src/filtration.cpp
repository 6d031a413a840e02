#include "pomega/filtration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pomega {

namespace {

std::uint32_t upset_of_node(const LassoFrame& fr, int x) { return fr.leq[x]; }

/// Lexicographically smallest among the shortest positive-length paths from
/// one class to another along the image relation; returns the path without
/// its first element.
std::vector<int> smallest_step_path(const std::vector<std::uint32_t>& rel, int from, int to,
                                    int n) {
  // Distances to the target.
  std::vector<int> dist(n, -1);
  dist[to] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((rel[y] >> z) & 1 && dist[z] != -1) {
          const int cand = dist[z] + 1;
          if (dist[y] == -1 || cand < dist[y]) {
            dist[y] = cand;
            changed = true;
          }
        }
  }
  // First step: smallest successor that still reaches the target; length
  // must be positive, so the first hop is taken before distances apply.
  int best_len = -1;
  for (int z = 0; z < n; ++z)
    if ((rel[from] >> z) & 1 && dist[z] != -1)
      if (best_len == -1 || dist[z] + 1 < best_len) best_len = dist[z] + 1;
  if (best_len == -1)
    throw std::logic_error("no schedule path between classes; filtration invariant broken");
  std::vector<int> path;
  int cur = from;
  int remaining = best_len;
  while (remaining > 0) {
    for (int z = 0; z < n; ++z) {
      if (((rel[cur] >> z) & 1) && dist[z] == remaining - 1) {
        path.push_back(z);
        cur = z;
        break;
      }
    }
    --remaining;
  }
  return path;
}

} // namespace

FiltrationResult filtrate(const LassoFrame& fr, const FilterableSet& gamma) {
  const auto report = check_frame(fr);
  if (!report.ok()) {
    std::string why;
    for (const auto& item : report.items)
      if (!item.pass) why += (why.empty() ? "" : "; ") + item.condition;
    throw std::invalid_argument("frame fails the space conditions: " + why);
  }
  if (!is_filterable(gamma))
    throw std::invalid_argument("closure set is not filterable");
  for (const auto& s : gamma)
    for (const auto& v : nnf_vars(s))
      if (!fr.valuation.count(v))
        throw std::out_of_range("frame valuation misses variable: " + v);

  FiltrationResult res;
  const int m = fr.size;

  // Quotient by agreement on every closure term.
  std::vector<std::uint32_t> term_values;
  term_values.reserve(gamma.size());
  for (const auto& s : gamma) term_values.push_back(eval_on_frame(s, fr));
  std::vector<int> raw_class(m, -1);
  std::vector<std::uint32_t> raw_masks;
  for (int x = 0; x < m; ++x) {
    if (raw_class[x] != -1) continue;
    const int id = static_cast<int>(raw_masks.size());
    std::uint32_t mask = 1u << x;
    raw_class[x] = id;
    for (int y = x + 1; y < m; ++y) {
      if (raw_class[y] != -1) continue;
      bool same = true;
      for (const auto& tv : term_values)
        if (((tv >> x) & 1) != ((tv >> y) & 1)) {
          same = false;
          break;
        }
      if (same) {
        raw_class[y] = id;
        mask |= 1u << y;
      }
    }
    raw_masks.push_back(mask);
  }
  const int n = static_cast<int>(raw_masks.size());
  res.class_count = n;

  // Image relation of the successor, its reflexive-transitive closure, and
  // the linear preorder defined from the frame order.
  std::vector<std::uint32_t> rel_f(n, 0), leq_y(n, 0), preceq(n, 0);
  for (int x = 0; x < m; ++x) rel_f[raw_class[x]] |= 1u << raw_class[fr.successor(x)];
  for (int y = 0; y < n; ++y) leq_y[y] = 1u << y;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < n; ++y) {
      std::uint32_t acc = leq_y[y];
      for (int z = 0; z < n; ++z)
        if ((leq_y[y] >> z) & 1) acc |= rel_f[z];
      if (acc != leq_y[y]) {
        leq_y[y] = acc;
        changed = true;
      }
    }
  }
  for (int y = 0; y < n; ++y) {
    for (int z = 0; z < n; ++z) {
      bool all = true;
      for (int x = 0; x < m && all; ++x) {
        if (raw_class[x] != y) continue;
        if (!(upset_of_node(fr, x) & raw_masks[z])) all = false;
      }
      if (all) preceq[y] |= 1u << z;
    }
  }

  // Balloon enumeration: sort classes by the linear preorder, equivalence
  // ties by class id; the final equivalence class is the cluster.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto strictly_before = [&preceq](int y, int z) {
    return ((preceq[y] >> z) & 1) && !((preceq[z] >> y) & 1);
  };
  std::sort(order.begin(), order.end(), [&](int y, int z) {
    if (strictly_before(y, z)) return true;
    if (strictly_before(z, y)) return false;
    return y < z;
  });
  auto equivalent = [&preceq](int y, int z) {
    return ((preceq[y] >> z) & 1) && ((preceq[z] >> y) & 1);
  };
  int beta = 1;
  while (beta < n && equivalent(order[n - 1 - beta], order[n - 1])) ++beta;
  res.beta = beta;
  res.alpha = n - beta;

  // Re-index everything by balloon position.
  std::vector<int> position_of(n);
  for (int i = 0; i < n; ++i) position_of[order[i]] = i;
  res.classes.resize(n);
  res.rel_f.assign(n, 0);
  res.leq_y.assign(n, 0);
  res.preceq.assign(n, 0);
  for (int i = 0; i < n; ++i) res.classes[i] = raw_masks[order[i]];
  res.node_class.resize(m);
  for (int x = 0; x < m; ++x) res.node_class[x] = position_of[raw_class[x]];
  auto remap_rel = [&](const std::vector<std::uint32_t>& src, std::vector<std::uint32_t>& dst) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((src[order[y]] >> order[z]) & 1) dst[y] |= 1u << z;
  };
  remap_rel(rel_f, res.rel_f);
  remap_rel(leq_y, res.leq_y);
  remap_rel(preceq, res.preceq);

  // Schedule: start at the basepoint class and walk to each next class in
  // balloon order (wrapping inside the cluster), always along the
  // lexicographically smallest shortest positive-length path.
  if (res.node_class[0] != 0)
    throw std::logic_error("basepoint class is not the balloon minimum");
  std::vector<int> sigma{0};
  res.milestones.assign(n, 0);
  res.milestones[0] = 0;
  for (int i = 1; i <= n; ++i) {
    const int target = i < n ? i : res.alpha;
    const auto path = smallest_step_path(res.rel_f, sigma.back(), target, n);
    sigma.insert(sigma.end(), path.begin(), path.end());
    if (i < n) res.milestones[i] = sigma.size() - 1;
  }
  const std::uint64_t loop_from = res.milestones[res.alpha];
  res.sigma_stem.assign(sigma.begin(), sigma.begin() + loop_from);
  res.sigma_loop.assign(sigma.begin() + loop_from, sigma.end() - 1);

  // Valuation over the schedule, one ultimately periodic set per variable.
  std::set<std::string> vars;
  for (const auto& s : gamma) {
    const auto vs = nnf_vars(s);
    vars.insert(vs.begin(), vs.end());
  }
  for (const auto& v : vars) {
    const std::uint32_t nodes = fr.valuation.at(v);
    std::uint32_t class_mask = 0;
    for (int x = 0; x < m; ++x)
      if ((nodes >> x) & 1) class_mask |= 1u << res.node_class[x];
    std::vector<bool> stem(res.sigma_stem.size()), loop(res.sigma_loop.size());
    for (std::size_t i = 0; i < stem.size(); ++i)
      stem[i] = (class_mask >> res.sigma_stem[i]) & 1;
    for (std::size_t j = 0; j < loop.size(); ++j)
      loop[j] = (class_mask >> res.sigma_loop[j]) & 1;
    res.p_bar[v] = UpSet(std::move(stem), std::move(loop));
  }

  res.node_positions.resize(m);
  for (int x = 0; x < m; ++x) res.node_positions[x] = res.milestones[res.node_class[x]];
  return res;
}

StarReport verify_star(const FiltrationResult& res, const LassoFrame& fr,
                       const FilterableSet& gamma) {
  return verify_star(res, fr, gamma, res.p_bar);
}

StarReport verify_star(const FiltrationResult& res, const LassoFrame& fr,
                       const FilterableSet& gamma, const Valuation& p_bar) {
  StarReport report;
  for (const auto& s : gamma) {
    const std::uint32_t on_frame = eval_on_frame(s, fr);
    const UpSet value = eval_nnf(s, p_bar);
    for (int x = 0; x < fr.size; ++x) {
      if (!((on_frame >> x) & 1)) continue;
      if (!value.contains(res.node_positions[x])) {
        report.ok = false;
        report.violations.push_back({x, print_nnf(s), res.node_positions[x]});
      }
    }
  }
  return report;
}

std::vector<std::string> check_filtration_invariants(const FiltrationResult& res,
                                                     const LassoFrame& fr) {
  std::vector<std::string> out;
  auto fail = [&out](const std::string& msg) { out.push_back(msg); };
  const int n = res.class_count;
  const int m = fr.size;

  // Successor steps descend to the quotient.
  for (int x = 0; x < m; ++x)
    if (!res.f_step(res.node_class[x], res.node_class[fr.successor(x)]))
      fail("quotient misses a successor step at node " + std::to_string(x));
  // The frame order descends to the closure of the image relation.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (fr.le(x, y) &&
          !((res.leq_y[res.node_class[x]] >> res.node_class[y]) & 1))
        fail("quotient order misses a pair at nodes " + std::to_string(x) + "," +
             std::to_string(y));
  // The class preorder is a linear preorder below the quotient order.
  for (int y = 0; y < n; ++y)
    if (!((res.preceq[y] >> y) & 1)) fail("class preorder not reflexive");
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      if (((res.preceq[y] >> z) & 1) && (res.preceq[z] & ~res.preceq[y]))
        fail("class preorder not transitive");
      if (!((res.preceq[y] >> z) & 1) && !((res.preceq[z] >> y) & 1))
        fail("class preorder not total");
      if (((res.preceq[y] >> z) & 1) && !((res.leq_y[y] >> z) & 1))
        fail("class preorder not below the quotient order");
    }
  // Balloon shape: strict steps along the stem, one cluster at the end.
  for (int i = 0; i + 1 < n; ++i) {
    const bool fwd = (res.preceq[i] >> (i + 1)) & 1;
    const bool bwd = (res.preceq[i + 1] >> i) & 1;
    if (i + 1 < res.alpha ? !(fwd && !bwd) : false)
      fail("balloon stem not strictly increasing at " + std::to_string(i));
    if (i >= res.alpha && !(fwd && bwd)) fail("balloon cluster not an equivalence class");
    if (i + 1 == res.alpha && !(fwd && !bwd))
      fail("balloon stem does not precede the cluster strictly");
  }
  // Basepoint isolation.
  if (res.classes[res.node_class[0]] != 1u) fail("basepoint class is not a singleton");
  for (int y = 0; y < n; ++y) {
    if (!((res.preceq[res.node_class[0]] >> y) & 1))
      fail("basepoint class not a preorder minimum");
    if (res.f_step(y, res.node_class[0])) fail("image relation re-enters the basepoint");
  }
  // Schedule properties over the stem plus two periods.
  const std::uint64_t horizon = res.sigma_stem.size() + 2 * res.sigma_loop.size();
  for (std::uint64_t t = 0; t + 1 < horizon; ++t)
    if (!res.f_step(res.sigma_at(t), res.sigma_at(t + 1)))
      fail("schedule breaks the image relation at instant " + std::to_string(t));
  for (int i = 0; i < n; ++i)
    if (res.sigma_at(res.milestones[i]) != i)
      fail("milestone misses its class: " + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    if (!(res.milestones[i] < res.milestones[i + 1])) fail("milestones not increasing");
  if (res.sigma_at(0) != res.node_class[0]) fail("schedule does not start at the basepoint");
  return out;
}

Prop35Report verify_prop35(const LassoFrame& fr) {
  if (fr.size > 12)
    throw std::invalid_argument("prop-suite check capped at 12 nodes");
  const auto frame_check = check_frame(fr);
  if (!frame_check.ok())
    throw std::invalid_argument("frame fails the space conditions");
  Prop35Report report;
  const std::uint32_t full = fr.full();
  auto down = [&](std::uint32_t k) {
    std::uint32_t out = 0;
    for (int x = 0; x < fr.size; ++x)
      if (fr.leq[x] & k) out |= 1u << x;
    return out;
  };
  auto box = [&](std::uint32_t k) { return full & ~down(full & ~k); };
  for (std::uint32_t a = 0; a <= full && report.ok(); ++a) {
    // Dum: G(G(a -> G a) -> a) & F G a <= a.
    const std::uint32_t ga = box(a);
    const std::uint32_t dum_lhs =
        box((full & ~box((full & ~a) | ga)) | a) & down(ga);
    if (dum_lhs & ~a) {
      report.dum = false;
      report.detail = "Dum fails for a=" + std::to_string(a);
      break;
    }
    for (std::uint32_t b = 0; b <= full; ++b) {
      // Con: G(G a -> b) | G(G b -> a) = 1.
      const std::uint32_t con =
          box((full & ~box(a)) | b) | box((full & ~box(b)) | a);
      if (con != full) {
        report.con = false;
        report.detail = "Con fails for a=" + std::to_string(a) + ", b=" + std::to_string(b);
        break;
      }
      if (b == full) break;
    }
    if (a == full) break;
  }
  for (int x = 0; x < fr.size && report.linear; ++x)
    for (int y = 0; y < fr.size; ++y)
      if (!fr.le(x, y) && !fr.le(y, x)) {
        report.linear = false;
        report.detail = "order not linear at " + std::to_string(x) + "," + std::to_string(y);
        break;
      }
  return report;
}

} // namespace pomega
