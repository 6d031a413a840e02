#include "pomega/translate.hpp"

#include <cctype>
#include <stdexcept>

namespace pomega {

TranslationEnv TranslationEnv::for_variables(const std::set<std::string>& alg_vars) {
  TranslationEnv env;
  for (const auto& v : alg_vars) env.set_name(v);
  return env;
}

std::string TranslationEnv::set_name(const std::string& alg_var) {
  auto it = to_set_.find(alg_var);
  if (it != to_set_.end()) return it->second;
  std::string base = alg_var;
  base[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(base[0])));
  std::string cand = base;
  for (int k = 2; used_.count(cand) || cand == "S"; ++k) cand = base + std::to_string(k);
  used_.insert(cand);
  to_set_[alg_var] = cand;
  to_alg_[cand] = alg_var;
  return cand;
}

const std::string& TranslationEnv::algebra_name(const std::string& set_var) const {
  auto it = to_alg_.find(set_var);
  if (it == to_alg_.end())
    throw std::out_of_range("no algebra variable for set variable " + set_var);
  return it->second;
}

bool TranslationEnv::has_algebra_name(const std::string& set_var) const {
  return to_alg_.count(set_var) != 0;
}

std::string TranslationEnv::fresh_position() {
  static const char* kFirst[] = {"x", "y", "z"};
  const int n = positions_++;
  if (n < 3) return kFirst[n];
  return "x" + std::to_string(n - 1);
}

S1sPtr translate_term(const TermPtr& t, const std::string& position, TranslationEnv& env) {
  switch (t->kind) {
    case Term::Kind::Var: return s1s_mem(position, env.set_name(t->name));
    case Term::Kind::Bottom: return s1s_not(s1s_eqset(position, position));
    case Term::Kind::Init: {
      const std::string z = env.fresh_position();
      return s1s_forall1(z, s1s_le(position, z));
    }
    case Term::Kind::Union:
      return s1s_or(translate_term(t->lhs, position, env),
                    translate_term(t->rhs, position, env));
    case Term::Kind::Complement: return s1s_not(translate_term(t->lhs, position, env));
    case Term::Kind::Diamond: {
      const std::string y = env.fresh_position();
      return s1s_exists1(y, s1s_and(s1s_le(position, y), translate_term(t->lhs, y, env)));
    }
    case Term::Kind::Next: {
      const std::string y = env.fresh_position();
      return s1s_exists1(y,
                         s1s_and(s1s_succ_ind(position, y), translate_term(t->lhs, y, env)));
    }
  }
  return nullptr;
}

namespace {

S1sPtr translate_rec(const FoPtr& f, TranslationEnv& env) {
  switch (f->kind) {
    case FoFormula::Kind::Eq: {
      const std::string x = env.fresh_position();
      S1sPtr lhs = translate_term(f->lhs_term, x, env);
      S1sPtr rhs = translate_term(f->rhs_term, x, env);
      // for all x: lhs(x) <-> rhs(x)
      return s1s_forall1(
          x, s1s_and(s1s_or(s1s_not(lhs), rhs), s1s_or(s1s_not(rhs), lhs)));
    }
    case FoFormula::Kind::Or:
      return s1s_or(translate_rec(f->lhs, env), translate_rec(f->rhs, env));
    case FoFormula::Kind::Not: return s1s_not(translate_rec(f->lhs, env));
    case FoFormula::Kind::Exists:
      return s1s_exists2(env.set_name(f->binder), translate_rec(f->lhs, env));
  }
  return nullptr;
}

} // namespace

S1sPtr translate_fo(const FoPtr& f, TranslationEnv& env) {
  return translate_rec(fo_rectify(f), env);
}

Translation translate_fo(const FoPtr& f) {
  Translation out;
  out.env = TranslationEnv::for_variables(fo_free_vars(f));
  out.formula = translate_fo(f, out.env);
  return out;
}

} // namespace pomega
