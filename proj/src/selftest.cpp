#include "pomega/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <queue>
#include <sstream>

#include "pomega/companion.hpp"
#include "pomega/compile.hpp"
#include "pomega/decide.hpp"
#include "pomega/equation.hpp"
#include "pomega/filtration.hpp"
#include "pomega/semantics.hpp"
#include "pomega/translate.hpp"

namespace pomega::selftest {

int pick(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

UpSet random_upset(Rng& rng, int max_stem, int max_loop) {
  std::vector<bool> stem(pick(rng, 0, max_stem)), loop(pick(rng, 1, max_loop));
  for (auto&& b : stem) b = rng() & 1;
  for (auto&& b : loop) b = rng() & 1;
  return UpSet(std::move(stem), std::move(loop));
}

Valuation random_valuation(Rng& rng, const std::vector<std::string>& vars, int max_stem,
                           int max_loop) {
  Valuation v;
  for (const auto& name : vars) v[name] = random_upset(rng, max_stem, max_loop);
  return v;
}

LassoWord random_word(Rng& rng, int width, int max_stem, int max_loop) {
  const std::uint32_t letters = 1u << width;
  std::vector<std::uint32_t> stem(pick(rng, 0, max_stem)), loop(pick(rng, 1, max_loop));
  for (auto& c : stem) c = static_cast<std::uint32_t>(rng() % letters);
  for (auto& c : loop) c = static_cast<std::uint32_t>(rng() % letters);
  return LassoWord(width, std::move(stem), std::move(loop));
}

Nba random_nba(Rng& rng, int max_states, int max_tracks) {
  Nba a;
  a.states = pick(rng, 1, max_states);
  const int tracks = pick(rng, 1, max_tracks);
  for (int k = 0; k < tracks; ++k) a.tracks.push_back("p" + std::to_string(k));
  const std::uint32_t letters = a.letter_count();
  a.initial.push_back(pick(rng, 0, a.states - 1));
  if (rng() % 3 == 0) a.initial.push_back(pick(rng, 0, a.states - 1));
  for (int q = 0; q < a.states; ++q)
    if (rng() % 2) a.accepting.push_back(q);
  const int edges = pick(rng, 1, a.states * static_cast<int>(letters) + 1);
  for (int e = 0; e < edges; ++e)
    a.transitions.push_back({pick(rng, 0, a.states - 1),
                             static_cast<std::uint32_t>(rng() % letters),
                             pick(rng, 0, a.states - 1)});
  a.normalize();
  return a;
}

TermPtr random_term(Rng& rng, const std::vector<std::string>& vars, int depth) {
  const int leaf_choices = static_cast<int>(vars.size()) + 2;
  if (depth == 0) {
    const int c = pick(rng, 0, leaf_choices - 1);
    if (c == 0) return bottom();
    if (c == 1) return init();
    return var(vars[c - 2]);
  }
  switch (pick(rng, 0, 5)) {
    case 0: return join(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
    case 1: return meet(random_term(rng, vars, depth - 1), random_term(rng, vars, depth - 1));
    case 2: return cmpl(random_term(rng, vars, depth - 1));
    case 3: return next(random_term(rng, vars, depth - 1));
    case 4: return diamond(random_term(rng, vars, depth - 1));
    default: return random_term(rng, vars, 0);
  }
}

FoPtr random_qf_formula(Rng& rng, const std::vector<std::string>& vars, int depth) {
  if (depth == 0)
    return fo_eq(random_term(rng, vars, pick(rng, 0, 2)), random_term(rng, vars, pick(rng, 0, 2)));
  switch (pick(rng, 0, 2)) {
    case 0:
      return fo_or(random_qf_formula(rng, vars, depth - 1),
                   random_qf_formula(rng, vars, depth - 1));
    case 1: return fo_not(random_qf_formula(rng, vars, depth - 1));
    default: return random_qf_formula(rng, vars, 0);
  }
}

S1sPtr random_kernel_formula(Rng& rng, const std::vector<std::string>& set_vars, int depth) {
  auto atom = [&]() -> S1sPtr {
    const auto& p = set_vars[pick(rng, 0, static_cast<int>(set_vars.size()) - 1)];
    const auto& q = set_vars[pick(rng, 0, static_cast<int>(set_vars.size()) - 1)];
    return rng() % 2 ? s1s_subset(p, q) : s1s_succ(p, q);
  };
  if (depth == 0) return atom();
  switch (pick(rng, 0, 2)) {
    case 0:
      return s1s_or(random_kernel_formula(rng, set_vars, depth - 1),
                    random_kernel_formula(rng, set_vars, depth - 1));
    case 1: return s1s_not(random_kernel_formula(rng, set_vars, depth - 1));
    default: return atom();
  }
}

NnfPtr random_nnf_term(Rng& rng, const std::vector<std::string>& vars, int depth) {
  auto literal = [&]() -> NnfPtr {
    const bool negated = rng() % 2;
    switch (pick(rng, 0, static_cast<int>(vars.size()) + 1)) {
      case 0: return nnf_lit(NnfTerm::Base::Bottom, negated);
      case 1: return nnf_lit(NnfTerm::Base::Init, negated);
      default:
        return nnf_lit(NnfTerm::Base::Var, negated,
                       vars[pick(rng, 0, static_cast<int>(vars.size()) - 1)]);
    }
  };
  if (depth == 0) return literal();
  switch (pick(rng, 0, 5)) {
    case 0:
      return nnf_union(random_nnf_term(rng, vars, depth - 1),
                       random_nnf_term(rng, vars, depth - 1));
    case 1:
      return nnf_inter(random_nnf_term(rng, vars, depth - 1),
                       random_nnf_term(rng, vars, depth - 1));
    case 2: return nnf_next(random_nnf_term(rng, vars, depth - 1));
    case 3: return nnf_diamond(random_nnf_term(rng, vars, depth - 1));
    case 4: return nnf_box(random_nnf_term(rng, vars, depth - 1));
    default: return literal();
  }
}

LassoFrame random_frame(Rng& rng, int max_nodes, const std::vector<std::string>& vars) {
  const int m = pick(rng, 2, max_nodes);
  LassoFrame fr = LassoFrame::lasso(m, pick(rng, 1, m - 1));
  for (const auto& v : vars)
    fr.valuation[v] = static_cast<std::uint32_t>(rng()) & fr.full();
  return fr;
}

bool brute_accepts(const Nba& a, const LassoWord& w) {
  const int stem_len = static_cast<int>(w.stem.size());
  const int period = stem_len + static_cast<int>(w.loop.size());
  auto next_pos = [&](int p) { return p + 1 < period ? p + 1 : stem_len; };
  const auto succ = a.by_source();
  auto explore = [&](std::vector<char>& seen, std::queue<std::pair<int, int>>& frontier,
                     int target_state, int target_pos) -> bool {
    while (!frontier.empty()) {
      const auto [state, pos] = frontier.front();
      frontier.pop();
      for (const auto& t : succ[state]) {
        if (t.letter != w.at(pos)) continue;
        const int np = next_pos(pos);
        if (t.to == target_state && np == target_pos) return true;
        if (!seen[static_cast<std::size_t>(t.to) * period + np]) {
          seen[static_cast<std::size_t>(t.to) * period + np] = 1;
          frontier.push({t.to, np});
        }
      }
    }
    return false;
  };
  std::vector<char> seen(static_cast<std::size_t>(a.states) * period, 0);
  std::queue<std::pair<int, int>> frontier;
  for (int q : a.initial)
    if (!seen[static_cast<std::size_t>(q) * period]) {
      seen[static_cast<std::size_t>(q) * period] = 1;
      frontier.push({q, 0});
    }
  explore(seen, frontier, -1, -1);
  for (int f : a.accepting) {
    for (int pos = stem_len; pos < period; ++pos) {
      if (!seen[static_cast<std::size_t>(f) * period + pos]) continue;
      std::vector<char> seen2(static_cast<std::size_t>(a.states) * period, 0);
      std::queue<std::pair<int, int>> frontier2;
      frontier2.push({f, pos});
      if (explore(seen2, frontier2, f, pos)) return true;
    }
  }
  return false;
}

std::optional<LassoWord> brute_find_word(const Nba& a, int max_stem, int max_loop) {
  const int width = static_cast<int>(a.tracks.size());
  const std::uint64_t letters = a.letter_count();
  for (int stem_len = 0; stem_len <= max_stem; ++stem_len) {
    for (int loop_len = 1; loop_len <= max_loop; ++loop_len) {
      std::vector<std::uint32_t> stem(stem_len), loop(loop_len);
      std::function<bool(int)> fill = [&](int slot) -> bool {
        if (slot == stem_len + loop_len) {
          const LassoWord w(width, stem, loop);
          return brute_accepts(a, w);
        }
        for (std::uint64_t c = 0; c < letters; ++c) {
          if (slot < stem_len) stem[slot] = static_cast<std::uint32_t>(c);
          else loop[slot - stem_len] = static_cast<std::uint32_t>(c);
          if (fill(slot + 1)) return true;
        }
        return false;
      };
      if (fill(0)) {
        LassoWord w(width, stem, loop);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool BatteryResult::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Battery {
  std::uint64_t seed;
  const Limits& limits;
  BatteryResult result;

  Rng rng_for(int criterion) const { return Rng(seed * 1000003u + criterion); }

  void run(int index, const std::string& name, const std::function<std::string()>& body) {
    CriterionResult cr{index, name, false, "", 0.0};
    const auto start = Clock::now();
    try {
      cr.detail = body();
      cr.pass = cr.detail.empty();
    } catch (const ResourceLimit& e) {
      cr.detail = std::string("resource cap: ") + e.what();
    } catch (const std::exception& e) {
      cr.detail = std::string("error: ") + e.what();
    }
    cr.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.criteria.push_back(std::move(cr));
  }
};

const std::vector<std::string>& axiom_sentences() {
  static const std::vector<std::string> sentences = {
      "forall a. F a = a | X F a",
      "forall a. (X a & a = X a) => (F a & a = F a)",
      "forall a. a != 0 => (I & F a = I)",
      "X I = 0",
  };
  return sentences;
}

const std::vector<std::string>& law_sentences() {
  static const std::vector<std::string> sentences = {
      "forall a. forall b. G (G a -> b) | G (G b -> a) = 1",
      "forall a. (G (G (a -> G a) -> a) & F G a -> a) = 1",
      "forall a. (a & I = a && a != 0) => a = I",
  };
  return sentences;
}

std::string check_valid_suite(const std::vector<std::string>& sentences, double budget,
                              const Limits& limits, bool want_transfer) {
  for (const auto& text : sentences) {
    const Verdict v = t_validity(parse_fo(text), limits);
    if (v.status != Status::Valid) return "not valid: " + text;
    if (v.elapsed_seconds > budget)
      return "over budget (" + std::to_string(v.elapsed_seconds) + "s): " + text;
    if (want_transfer && !v.transfers_to_all_algebras)
      return "verdict does not transfer: " + text;
  }
  return "";
}

} // namespace

BatteryResult run_acceptance(std::uint64_t seed, const Limits& limits) {
  Battery battery{seed, limits, {}};
  const auto start = Clock::now();

  battery.run(1, "axiom suite valid", [&] {
    return check_valid_suite(axiom_sentences(), 10.0, limits, true);
  });

  battery.run(2, "derived laws valid (Con, Dum, atom)", [&] {
    return check_valid_suite(law_sentences(), 30.0, limits, true);
  });

  battery.run(3, "negative control with confirmed countermodel", [&] {
    const Verdict v = is_valid(parse_fo("forall a. F a = a"), limits);
    if (v.status != Status::Invalid) return std::string("expected invalid");
    if (!v.witness) return std::string("missing countermodel");
    if (eval_qf(parse_fo("F a = a"), *v.witness))
      return std::string("countermodel does not falsify the matrix");
    return std::string();
  });

  // Criteria 4 and 5 share one stream of random automata.
  std::vector<Nba> automata;
  {
    Rng rng = battery.rng_for(4);
    for (int i = 0; i < 200; ++i) automata.push_back(random_nba(rng, 4, 2));
  }

  battery.run(4, "complement agreement on 200 automata x 50 words", [&] {
    Rng rng = battery.rng_for(40);
    for (std::size_t i = 0; i < automata.size(); ++i) {
      const Nba& a = automata[i];
      const Nba c = complement(a, limits);
      for (int k = 0; k < 50; ++k) {
        const LassoWord w = random_word(rng, static_cast<int>(a.tracks.size()), 3, 3);
        if (accepts(a, w) == accepts(c, w))
          return "violation at automaton " + std::to_string(i) + ", word " +
                 std::to_string(k);
      }
    }
    return std::string();
  });

  battery.run(5, "emptiness matches brute-force enumeration", [&] {
    int checked = 0;
    for (std::size_t i = 0; i < automata.size(); ++i) {
      const Nba& a = automata[i];
      if (a.states > 3) continue;
      ++checked;
      const auto witness = find_accepting_lasso(a);
      const auto brute = brute_find_word(a, 3, 3);
      if (witness.has_value() != brute.has_value())
        return "disagreement at automaton " + std::to_string(i);
      if (witness && !brute_accepts(a, witness->word))
        return "witness rejected by brute force at automaton " + std::to_string(i);
    }
    if (checked == 0) return std::string("no small automata generated");
    return std::string();
  });

  battery.run(6, "compiler agrees with kernel evaluation", [&] {
    Rng rng = battery.rng_for(6);
    const std::vector<std::string> set_vars = {"P", "Q", "R"};
    for (int i = 0; i < 300; ++i) {
      const S1sPtr psi = random_kernel_formula(rng, set_vars, pick(rng, 1, 4));
      const Nba a = compile_s1s(psi, limits);
      for (int k = 0; k < 100; ++k) {
        const Valuation v = random_valuation(rng, set_vars, 3, 3);
        Valuation restricted;
        for (const auto& name : a.tracks) restricted[name] = v.at(name);
        const bool by_automaton = accepts(a, encode_word(restricted, a.tracks));
        if (by_automaton != eval_s1s_kernel(psi, v))
          return "disagreement at formula " + std::to_string(i) + ", valuation " +
                 std::to_string(k);
      }
    }
    return std::string();
  });

  battery.run(7, "companion battery", [&] {
    const std::vector<std::string> formulas = {
        "forall a. F a = a | X F a",
        "exists a. a != 0 && F a = a",
        "forall a. forall b. G (G a -> b) | G (G b -> a) = 1",
        "a | b = b",
        "F a = a",
        "X I = 0",
        "I != 0",
        "F I = 1",
        "a & I = a",
        "forall a. F F a = F a",
        "X a = a",
        "exists b. b != 0 && b & a = b",
    };
    Rng rng = battery.rng_for(7);
    for (const auto& text : formulas) {
      const FoPtr f = parse_fo(text);
      const auto comp = existential_companion(f, limits);
      if (!fo_is_existential(comp.formula)) return "companion not existential: " + text;
      const Verdict v = are_equivalent(f, comp.formula, limits);
      if (v.status != Status::Equivalent) return "companion not equivalent: " + text;
      // Pointwise agreement on random valuations.
      std::set<std::string> names = fo_free_vars(f);
      TranslationEnv env = TranslationEnv::for_variables(names);
      const S1sPtr sf = translate_fo(f, env);
      const S1sPtr sg = translate_fo(comp.formula, env);
      auto [af, ag] = align_tracks(compile_s1s(sf, limits), compile_s1s(sg, limits));
      std::vector<std::string> name_list(names.begin(), names.end());
      for (int k = 0; k < 100; ++k) {
        Valuation v0 = random_valuation(rng, name_list, 3, 3);
        Valuation on_sets;
        for (const auto& [alg, value] : v0) on_sets[env.set_name(alg)] = value;
        const LassoWord w = encode_word(on_sets, af.tracks);
        if (accepts(af, w) != accepts(ag, w))
          return "pointwise disagreement: " + text + " at valuation " + std::to_string(k);
      }
    }
    return std::string();
  });

  battery.run(8, "normalization preserves semantics", [&] {
    Rng rng = battery.rng_for(8);
    const std::vector<std::string> vars = {"a", "b", "c"};
    for (int i = 0; i < 500; ++i) {
      const TermPtr t = random_term(rng, vars, pick(rng, 0, 5));
      const Valuation v = random_valuation(rng, vars, 3, 3);
      const NnfPtr n = nnf(t);
      const UpSet direct = eval_term(t, v);
      if (eval_nnf(n, v) != direct || eval_term(nnf_to_term(n), v) != direct)
        return "nnf changed semantics at case " + std::to_string(i);
    }
    for (int i = 0; i < 500; ++i) {
      const FoPtr f = random_qf_formula(rng, vars, pick(rng, 0, 3));
      const Valuation v = random_valuation(rng, vars, 3, 3);
      if (eval_qf(f, v) != eval_term(qf_to_equation(f), v).is_all())
        return "equation form changed semantics at case " + std::to_string(i);
    }
    return std::string();
  });

  battery.run(9, "filtration property and invariants", [&] {
    Rng rng = battery.rng_for(9);
    const std::vector<std::string> vars = {"a", "b"};
    for (int i = 0; i < 200; ++i) {
      const LassoFrame fr = random_frame(rng, 8, vars);
      const NnfPtr seed_term = random_nnf_term(rng, vars, pick(rng, 0, 3));
      const FilterableSet gamma = filterable_closure(seed_term);
      const FiltrationResult res = filtrate(fr, gamma);
      const StarReport star = verify_star(res, fr, gamma);
      if (!star.ok) return "star property violated at case " + std::to_string(i);
      const auto violations = check_filtration_invariants(res, fr);
      if (!violations.empty())
        return "invariant violated at case " + std::to_string(i) + ": " + violations[0];
    }
    return std::string();
  });

  battery.run(10, "valid sentences hold on finite frames", [&] {
    Rng rng = battery.rng_for(10);
    std::vector<std::string> sentences = axiom_sentences();
    for (const auto& s : law_sentences()) sentences.push_back(s);
    for (const auto& text : sentences) {
      FoPtr matrix;
      if (!fo_is_universal(parse_fo(text), &matrix))
        return "sentence not universal: " + text;
      const TermPtr t = qf_to_equation(matrix);
      std::vector<std::string> vars(fo_free_vars(matrix).begin(),
                                    fo_free_vars(matrix).end());
      for (int i = 0; i < 50; ++i) {
        LassoFrame fr = random_frame(rng, 8, {});
        const bool exhaustive = fr.size <= 4;
        const int samples =
            exhaustive ? 1 << (fr.size * static_cast<int>(vars.size())) : 64;
        for (int k = 0; k < samples; ++k) {
          for (std::size_t j = 0; j < vars.size(); ++j) {
            const std::uint32_t mask =
                exhaustive ? (static_cast<std::uint32_t>(k) >> (j * fr.size)) & fr.full()
                           : static_cast<std::uint32_t>(rng()) & fr.full();
            fr.valuation[vars[j]] = mask;
          }
          if (eval_on_frame(t, fr) != fr.full())
            return "sentence fails on a frame: " + text;
        }
      }
    }
    return std::string();
  });

  battery.result.total_seconds = std::chrono::duration<double>(Clock::now() - start).count();

  // Criterion 11: overall runtime budget and distinct resource reporting.
  {
    CriterionResult cr{11, "battery under 10 minutes, no resource aborts", false, "", 0.0};
    if (battery.result.total_seconds >= 600.0) {
      cr.detail = "battery took " + std::to_string(battery.result.total_seconds) + "s";
    } else {
      for (const auto& c : battery.result.criteria)
        if (!c.pass && c.detail.rfind("resource cap:", 0) == 0)
          cr.detail = "criterion " + std::to_string(c.index) + " hit a resource cap";
      cr.pass = cr.detail.empty();
    }
    if (!cr.pass && cr.detail.empty()) cr.detail = "unknown";
    battery.result.criteria.push_back(std::move(cr));
  }
  return battery.result;
}

bool print_battery(const BatteryResult& battery, std::ostream& out) {
  for (const auto& c : battery.criteria) {
    std::ostringstream line;
    line << "criterion " << c.index << " [" << c.name << "]: "
         << (c.pass ? "PASS" : "FAIL");
    if (!c.pass) line << " - " << c.detail;
    out << line.str() << "\n";
  }
  out << "battery: " << (battery.all_pass() ? "PASS" : "FAIL") << " ("
      << battery.total_seconds << "s)\n";
  return battery.all_pass();
}

} // namespace pomega::selftest
