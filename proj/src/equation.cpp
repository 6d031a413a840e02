#include "pomega/equation.hpp"

#include <stdexcept>

namespace pomega {

namespace {

using Clause = std::vector<FoLiteral>;

std::vector<Clause> dnf_rec(const FoPtr& f, bool positive) {
  switch (f->kind) {
    case FoFormula::Kind::Eq:
      return {{FoLiteral{f->lhs_term, f->rhs_term, !positive}}};
    case FoFormula::Kind::Not: return dnf_rec(f->lhs, !positive);
    case FoFormula::Kind::Or: {
      std::vector<Clause> l = dnf_rec(f->lhs, positive);
      std::vector<Clause> r = dnf_rec(f->rhs, positive);
      if (positive) {
        l.insert(l.end(), r.begin(), r.end());
        return l;
      }
      // Negated disjunction: conjunction, so take the clause-wise product.
      std::vector<Clause> out;
      out.reserve(l.size() * r.size());
      for (const auto& cl : l)
        for (const auto& cr : r) {
          Clause c = cl;
          c.insert(c.end(), cr.begin(), cr.end());
          out.push_back(std::move(c));
        }
      return out;
    }
    case FoFormula::Kind::Exists:
      throw std::invalid_argument("fo_dnf requires a quantifier-free formula");
  }
  return {};
}

} // namespace

std::vector<std::vector<FoLiteral>> fo_dnf(const FoPtr& f) { return dnf_rec(f, true); }

TermPtr qf_to_equation(const FoPtr& f) {
  const auto dnf = fo_dnf(f);
  std::vector<TermPtr> boxed;
  boxed.reserve(dnf.size());
  for (const auto& clause : dnf) {
    std::vector<TermPtr> parts;
    parts.reserve(clause.size());
    for (const auto& lit : clause)
      if (lit.negated)
        parts.push_back(implies(init(), diamond(cmpl(iff(lit.lhs, lit.rhs)))));
    for (const auto& lit : clause)
      if (!lit.negated) parts.push_back(iff(lit.lhs, lit.rhs));
    boxed.push_back(box(meet_all(parts)));
  }
  return implies(init(), join_all(boxed));
}

} // namespace pomega
