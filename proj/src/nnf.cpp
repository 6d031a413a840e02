#include "pomega/nnf.hpp"

namespace pomega {

namespace {

NnfPtr node(NnfTerm::Kind kind, NnfPtr lhs = nullptr, NnfPtr rhs = nullptr) {
  auto t = std::make_shared<NnfTerm>();
  t->kind = kind;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

} // namespace

NnfPtr nnf_lit(NnfTerm::Base base, bool negated, std::string name) {
  auto t = std::make_shared<NnfTerm>();
  t->kind = NnfTerm::Kind::Lit;
  t->base = base;
  t->negated = negated;
  t->name = std::move(name);
  return t;
}

NnfPtr nnf_union(NnfPtr a, NnfPtr b) {
  return node(NnfTerm::Kind::Union, std::move(a), std::move(b));
}
NnfPtr nnf_inter(NnfPtr a, NnfPtr b) {
  return node(NnfTerm::Kind::Inter, std::move(a), std::move(b));
}
NnfPtr nnf_next(NnfPtr a) { return node(NnfTerm::Kind::Next, std::move(a)); }
NnfPtr nnf_diamond(NnfPtr a) { return node(NnfTerm::Kind::Diamond, std::move(a)); }
NnfPtr nnf_box(NnfPtr a) { return node(NnfTerm::Kind::Box, std::move(a)); }

int nnf_cmp(const NnfPtr& a, const NnfPtr& b) {
  if (a == b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == NnfTerm::Kind::Lit) {
    if (a->base != b->base) return a->base < b->base ? -1 : 1;
    if (a->negated != b->negated) return a->negated < b->negated ? -1 : 1;
    return a->name.compare(b->name);
  }
  if (int c = nnf_cmp(a->lhs, b->lhs)) return c;
  return nnf_cmp(a->rhs, b->rhs);
}

namespace {

NnfPtr nnf_rec(const TermPtr& t, bool positive) {
  switch (t->kind) {
    case Term::Kind::Var: return nnf_lit(NnfTerm::Base::Var, !positive, t->name);
    case Term::Kind::Bottom: return nnf_lit(NnfTerm::Base::Bottom, !positive);
    case Term::Kind::Init: return nnf_lit(NnfTerm::Base::Init, !positive);
    case Term::Kind::Complement: return nnf_rec(t->lhs, !positive);
    case Term::Kind::Union: {
      NnfPtr l = nnf_rec(t->lhs, positive);
      NnfPtr r = nnf_rec(t->rhs, positive);
      return positive ? nnf_union(std::move(l), std::move(r))
                      : nnf_inter(std::move(l), std::move(r));
    }
    case Term::Kind::Next: return nnf_next(nnf_rec(t->lhs, positive));
    case Term::Kind::Diamond: {
      NnfPtr c = nnf_rec(t->lhs, positive);
      return positive ? nnf_diamond(std::move(c)) : nnf_box(std::move(c));
    }
  }
  return nullptr;
}

} // namespace

NnfPtr nnf(const TermPtr& t) { return nnf_rec(t, true); }

TermPtr nnf_to_term(const NnfPtr& t) {
  switch (t->kind) {
    case NnfTerm::Kind::Lit: {
      TermPtr base;
      switch (t->base) {
        case NnfTerm::Base::Var: base = var(t->name); break;
        case NnfTerm::Base::Bottom: base = bottom(); break;
        case NnfTerm::Base::Init: base = init(); break;
      }
      return t->negated ? cmpl(base) : base;
    }
    case NnfTerm::Kind::Union: return join(nnf_to_term(t->lhs), nnf_to_term(t->rhs));
    case NnfTerm::Kind::Inter: return meet(nnf_to_term(t->lhs), nnf_to_term(t->rhs));
    case NnfTerm::Kind::Next: return next(nnf_to_term(t->lhs));
    case NnfTerm::Kind::Diamond: return diamond(nnf_to_term(t->lhs));
    case NnfTerm::Kind::Box: return box(nnf_to_term(t->lhs));
  }
  return nullptr;
}

std::string print_nnf(const NnfPtr& t) { return print_term(nnf_to_term(t)); }

UpSet eval_nnf(const NnfPtr& t, const Valuation& v) {
  switch (t->kind) {
    case NnfTerm::Kind::Lit: {
      UpSet base;
      switch (t->base) {
        case NnfTerm::Base::Var: {
          auto it = v.find(t->name);
          if (it == v.end()) throw std::out_of_range("unbound variable: " + t->name);
          base = it->second;
          break;
        }
        case NnfTerm::Base::Bottom: base = UpSet::empty(); break;
        case NnfTerm::Base::Init: base = UpSet::initial(); break;
      }
      return t->negated ? base.complement() : base;
    }
    case NnfTerm::Kind::Union: return eval_nnf(t->lhs, v).join(eval_nnf(t->rhs, v));
    case NnfTerm::Kind::Inter: return eval_nnf(t->lhs, v).meet(eval_nnf(t->rhs, v));
    case NnfTerm::Kind::Next: return eval_nnf(t->lhs, v).next();
    case NnfTerm::Kind::Diamond: return eval_nnf(t->lhs, v).eventually();
    case NnfTerm::Kind::Box:
      return eval_nnf(t->lhs, v).complement().eventually().complement();
  }
  return UpSet::empty();
}

std::set<std::string> nnf_vars(const NnfPtr& t) {
  std::set<std::string> out;
  auto walk = [&out](auto&& self, const NnfPtr& u) -> void {
    if (!u) return;
    if (u->kind == NnfTerm::Kind::Lit) {
      if (u->base == NnfTerm::Base::Var) out.insert(u->name);
      return;
    }
    self(self, u->lhs);
    self(self, u->rhs);
  };
  walk(walk, t);
  return out;
}

namespace {

void collect_subterms(const NnfPtr& t, FilterableSet& out) {
  if (!t || !out.insert(t).second) return;
  if (t->kind == NnfTerm::Kind::Lit) {
    if (t->negated) out.insert(nnf_lit(t->base, false, t->name));
    return;
  }
  collect_subterms(t->lhs, out);
  collect_subterms(t->rhs, out);
}

} // namespace

FilterableSet nnf_subterms(const NnfPtr& t) {
  FilterableSet out;
  collect_subterms(t, out);
  return out;
}

FilterableSet filterable_closure(const FilterableSet& base) {
  FilterableSet out;
  for (const auto& t : base) collect_subterms(t, out);
  FilterableSet extra;
  for (const auto& s : out) {
    if (s->kind == NnfTerm::Kind::Diamond || s->kind == NnfTerm::Kind::Box)
      extra.insert(nnf_next(s));
  }
  out.insert(extra.begin(), extra.end());
  out.insert(nnf_lit(NnfTerm::Base::Init, false));
  return out;
}

FilterableSet filterable_closure(const NnfPtr& t) {
  FilterableSet base;
  base.insert(t);
  return filterable_closure(base);
}

bool is_filterable(const FilterableSet& gamma) {
  if (!gamma.count(nnf_lit(NnfTerm::Base::Init, false))) return false;
  for (const auto& s : gamma) {
    for (const auto& sub : nnf_subterms(s))
      if (!gamma.count(sub)) return false;
    if (s->kind == NnfTerm::Kind::Diamond || s->kind == NnfTerm::Kind::Box)
      if (!gamma.count(nnf_next(s))) return false;
  }
  return true;
}

} // namespace pomega
