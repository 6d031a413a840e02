#include "pomega/semantics.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace pomega {

namespace {

const UpSet& lookup(const Valuation& v, const std::string& name) {
  auto it = v.find(name);
  if (it == v.end()) throw std::out_of_range("unbound variable: " + name);
  return it->second;
}

/// The unique element of a singleton set, if the set is one.
std::optional<std::uint64_t> singleton_element(const UpSet& s) {
  if (s.is_infinite()) return std::nullopt;
  std::optional<std::uint64_t> found;
  for (std::size_t i = 0; i < s.stem().size(); ++i) {
    if (!s.stem()[i]) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

} // namespace

UpSet eval_term(const TermPtr& t, const Valuation& v) {
  switch (t->kind) {
    case Term::Kind::Var: return lookup(v, t->name);
    case Term::Kind::Bottom: return UpSet::empty();
    case Term::Kind::Init: return UpSet::initial();
    case Term::Kind::Union: return eval_term(t->lhs, v).join(eval_term(t->rhs, v));
    case Term::Kind::Complement: return eval_term(t->lhs, v).complement();
    case Term::Kind::Next: return eval_term(t->lhs, v).next();
    case Term::Kind::Diamond: return eval_term(t->lhs, v).eventually();
  }
  return UpSet::empty();
}

bool eval_qf(const FoPtr& f, const Valuation& v) {
  switch (f->kind) {
    case FoFormula::Kind::Eq: return eval_term(f->lhs_term, v) == eval_term(f->rhs_term, v);
    case FoFormula::Kind::Or: return eval_qf(f->lhs, v) || eval_qf(f->rhs, v);
    case FoFormula::Kind::Not: return !eval_qf(f->lhs, v);
    case FoFormula::Kind::Exists:
      throw std::invalid_argument("eval_qf requires a quantifier-free formula");
  }
  return false;
}

bool eval_s1s_kernel(const S1sPtr& f, const Valuation& v) {
  switch (f->kind) {
    case S1sFormula::Kind::Subset: return lookup(v, f->var1).subset_of(lookup(v, f->var2));
    case S1sFormula::Kind::Succ: {
      const UpSet& p = lookup(v, f->var1);
      const UpSet& q = lookup(v, f->var2);
      const std::uint64_t stem = std::max(p.stem().size(), q.stem().size());
      const std::uint64_t loop = std::lcm(p.loop().size(), q.loop().size());
      for (std::uint64_t n = 0; n < stem + 2 * loop; ++n)
        if (p.contains(n) && q.contains(n + 1)) return true;
      return false;
    }
    case S1sFormula::Kind::Or: return eval_s1s_kernel(f->lhs, v) || eval_s1s_kernel(f->rhs, v);
    case S1sFormula::Kind::And:
      return eval_s1s_kernel(f->lhs, v) && eval_s1s_kernel(f->rhs, v);
    case S1sFormula::Kind::Not: return !eval_s1s_kernel(f->lhs, v);
    case S1sFormula::Kind::Sing: return singleton_element(lookup(v, f->var1)).has_value();
    case S1sFormula::Kind::Mem: return lookup(v, f->var1).subset_of(lookup(v, f->var2));
    case S1sFormula::Kind::Le: {
      const auto x = singleton_element(lookup(v, f->var1));
      const auto y = singleton_element(lookup(v, f->var2));
      return x && y && *x <= *y;
    }
    case S1sFormula::Kind::SuccInd: {
      const auto x = singleton_element(lookup(v, f->var1));
      const auto y = singleton_element(lookup(v, f->var2));
      return x && y && *x + 1 == *y;
    }
    case S1sFormula::Kind::EqSet: return lookup(v, f->var1) == lookup(v, f->var2);
    case S1sFormula::Kind::True: return true;
    case S1sFormula::Kind::False: return false;
    case S1sFormula::Kind::Exists2:
    case S1sFormula::Kind::Exists1:
      throw std::invalid_argument("eval_s1s_kernel requires a quantifier-free formula");
  }
  return false;
}

} // namespace pomega
