#include "pomega/fo.hpp"

#include <map>

#include "lexer.hpp"
#include "term_parser.hpp"

namespace pomega {

FoPtr fo_eq(TermPtr lhs, TermPtr rhs) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoFormula::Kind::Eq;
  f->lhs_term = std::move(lhs);
  f->rhs_term = std::move(rhs);
  return f;
}

FoPtr fo_or(FoPtr a, FoPtr b) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoFormula::Kind::Or;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FoPtr fo_not(FoPtr a) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoFormula::Kind::Not;
  f->lhs = std::move(a);
  return f;
}

FoPtr fo_exists(std::string binder, FoPtr body) {
  auto f = std::make_shared<FoFormula>();
  f->kind = FoFormula::Kind::Exists;
  f->binder = std::move(binder);
  f->lhs = std::move(body);
  return f;
}

FoPtr fo_neq(TermPtr lhs, TermPtr rhs) { return fo_not(fo_eq(std::move(lhs), std::move(rhs))); }
FoPtr fo_and(FoPtr a, FoPtr b) { return fo_not(fo_or(fo_not(std::move(a)), fo_not(std::move(b)))); }
FoPtr fo_implies(FoPtr a, FoPtr b) { return fo_or(fo_not(std::move(a)), std::move(b)); }
FoPtr fo_iff(FoPtr a, FoPtr b) { return fo_and(fo_implies(a, b), fo_implies(b, a)); }
FoPtr fo_forall(std::string binder, FoPtr body) {
  return fo_not(fo_exists(std::move(binder), fo_not(std::move(body))));
}

FoPtr fo_and_all(const std::vector<FoPtr>& fs) {
  if (fs.empty()) return fo_eq(top(), top());
  FoPtr acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = fo_and(acc, fs[i]);
  return acc;
}

bool fo_eq_ast(const FoPtr& a, const FoPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case FoFormula::Kind::Eq:
      return term_eq(a->lhs_term, b->lhs_term) && term_eq(a->rhs_term, b->rhs_term);
    case FoFormula::Kind::Or: return fo_eq_ast(a->lhs, b->lhs) && fo_eq_ast(a->rhs, b->rhs);
    case FoFormula::Kind::Not: return fo_eq_ast(a->lhs, b->lhs);
    case FoFormula::Kind::Exists:
      return a->binder == b->binder && fo_eq_ast(a->lhs, b->lhs);
  }
  return false;
}

std::set<std::string> fo_free_vars(const FoPtr& f) {
  std::set<std::string> out;
  auto walk = [&out](auto&& self, const FoPtr& g, std::set<std::string> bound) -> void {
    if (!g) return;
    switch (g->kind) {
      case FoFormula::Kind::Eq:
        for (const auto& v : free_vars(g->lhs_term))
          if (!bound.count(v)) out.insert(v);
        for (const auto& v : free_vars(g->rhs_term))
          if (!bound.count(v)) out.insert(v);
        return;
      case FoFormula::Kind::Or:
        self(self, g->lhs, bound);
        self(self, g->rhs, bound);
        return;
      case FoFormula::Kind::Not: self(self, g->lhs, bound); return;
      case FoFormula::Kind::Exists:
        bound.insert(g->binder);
        self(self, g->lhs, std::move(bound));
        return;
    }
  };
  walk(walk, f, {});
  return out;
}

bool fo_quantifier_free(const FoPtr& f) {
  if (!f) return true;
  if (f->kind == FoFormula::Kind::Exists) return false;
  return fo_quantifier_free(f->lhs) && fo_quantifier_free(f->rhs);
}

bool fo_is_universal(const FoPtr& f, FoPtr* matrix) {
  FoPtr cur = f;
  while (cur->kind == FoFormula::Kind::Not && cur->lhs->kind == FoFormula::Kind::Exists &&
         cur->lhs->lhs->kind == FoFormula::Kind::Not) {
    cur = cur->lhs->lhs->lhs;
  }
  if (!fo_quantifier_free(cur)) return false;
  if (matrix) *matrix = cur;
  return true;
}

bool fo_is_existential(const FoPtr& f) {
  FoPtr cur = f;
  while (cur->kind == FoFormula::Kind::Exists) cur = cur->lhs;
  return fo_quantifier_free(cur);
}

namespace {

TermPtr subst_term(const TermPtr& t, const std::map<std::string, std::string>& ren) {
  switch (t->kind) {
    case Term::Kind::Var: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : var(it->second);
    }
    case Term::Kind::Bottom:
    case Term::Kind::Init: return t;
    case Term::Kind::Union: return join(subst_term(t->lhs, ren), subst_term(t->rhs, ren));
    case Term::Kind::Complement: return cmpl(subst_term(t->lhs, ren));
    case Term::Kind::Next: return next(subst_term(t->lhs, ren));
    case Term::Kind::Diamond: return diamond(subst_term(t->lhs, ren));
  }
  return t;
}

FoPtr rectify_rec(const FoPtr& f, std::map<std::string, std::string> ren,
                  std::set<std::string>& used) {
  switch (f->kind) {
    case FoFormula::Kind::Eq:
      return fo_eq(subst_term(f->lhs_term, ren), subst_term(f->rhs_term, ren));
    case FoFormula::Kind::Or:
      return fo_or(rectify_rec(f->lhs, ren, used), rectify_rec(f->rhs, ren, used));
    case FoFormula::Kind::Not: return fo_not(rectify_rec(f->lhs, ren, used));
    case FoFormula::Kind::Exists: {
      std::string fresh = f->binder;
      for (int k = 2; used.count(fresh); ++k) fresh = f->binder + "_" + std::to_string(k);
      used.insert(fresh);
      ren[f->binder] = fresh;
      return fo_exists(fresh, rectify_rec(f->lhs, std::move(ren), used));
    }
  }
  return f;
}

} // namespace

FoPtr fo_rectify(const FoPtr& f) {
  std::set<std::string> used = fo_free_vars(f);
  return rectify_rec(f, {}, used);
}

namespace {

using detail::Lexer;
using detail::Token;

FoPtr parse_fo_bin(Lexer& lex, int level, const ParseOptions& opts);

FoPtr parse_fo_unary(Lexer& lex, const ParseOptions& opts) {
  const Token tok = lex.peek();
  if (tok.kind == Token::Kind::Sym && tok.text == "!") {
    lex.next();
    return fo_not(parse_fo_unary(lex, opts));
  }
  if (tok.kind == Token::Kind::Ident && (tok.text == "exists" || tok.text == "forall")) {
    lex.next();
    const Token name = lex.next();
    if (name.kind != Token::Kind::Ident)
      throw ParseError("expected a variable after '" + tok.text + "'", name.line, name.col);
    if (name.text == "I" || name.text == "X" || name.text == "F" || name.text == "G" ||
        name.text == "exists" || name.text == "forall")
      throw ParseError("reserved name cannot be bound: " + name.text, name.line, name.col);
    detail::check_name(name, opts);
    lex.expect_sym(".");
    FoPtr body = parse_fo_bin(lex, 0, opts);
    return tok.text == "exists" ? fo_exists(name.text, body) : fo_forall(name.text, body);
  }
  const bool starts_paren = tok.kind == Token::Kind::Sym && tok.text == "(";
  // Attempt an equation atom; a '(' may open either a term or a formula, so
  // fall back to the formula reading if the term reading does not pan out.
  const std::size_t mark = lex.save();
  try {
    TermPtr t = detail::parse_term_expr(lex, opts);
    if (lex.eat_sym("=")) return fo_eq(t, detail::parse_term_expr(lex, opts));
    if (lex.eat_sym("!=")) return fo_neq(t, detail::parse_term_expr(lex, opts));
    if (!starts_paren)
      throw ParseError("expected '=' or '!=' after term", lex.peek().line, lex.peek().col);
  } catch (const ParseError&) {
    if (!starts_paren) throw;
  }
  lex.restore(mark);
  lex.expect_sym("(");
  FoPtr f = parse_fo_bin(lex, 0, opts);
  lex.expect_sym(")");
  return f;
}

// Levels, low to high: <=> (right), => (right), || (left), && (left).
FoPtr parse_fo_bin(Lexer& lex, int level, const ParseOptions& opts) {
  if (level >= 4) return parse_fo_unary(lex, opts);
  FoPtr e = parse_fo_bin(lex, level + 1, opts);
  switch (level) {
    case 0:
      if (lex.eat_sym("<=>")) e = fo_iff(e, parse_fo_bin(lex, 0, opts));
      break;
    case 1:
      if (lex.eat_sym("=>")) e = fo_implies(e, parse_fo_bin(lex, 1, opts));
      break;
    case 2:
      while (lex.eat_sym("||")) e = fo_or(e, parse_fo_bin(lex, 3, opts));
      break;
    case 3:
      while (lex.eat_sym("&&")) e = fo_and(e, parse_fo_bin(lex, 4, opts));
      break;
  }
  return e;
}

// Printing precedences: atoms 5, ! 4, && 3, || 2, quantifiers 1.
void print_fo_rec(const FoPtr& f, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (f->kind) {
    case FoFormula::Kind::Eq:
      out += print_term(f->lhs_term);
      out += " = ";
      out += print_term(f->rhs_term);
      return;
    case FoFormula::Kind::Or:
      wrap(2, [&] {
        print_fo_rec(f->lhs, 2, out);
        out += " || ";
        print_fo_rec(f->rhs, 3, out);
      });
      return;
    case FoFormula::Kind::Exists:
      wrap(1, [&] {
        out += "exists ";
        out += f->binder;
        out += ". ";
        print_fo_rec(f->lhs, 1, out);
      });
      return;
    case FoFormula::Kind::Not: {
      const FoPtr& c = f->lhs;
      if (c->kind == FoFormula::Kind::Eq) {
        out += print_term(c->lhs_term);
        out += " != ";
        out += print_term(c->rhs_term);
        return;
      }
      if (c->kind == FoFormula::Kind::Exists && c->lhs->kind == FoFormula::Kind::Not) {
        wrap(1, [&] {
          out += "forall ";
          out += c->binder;
          out += ". ";
          print_fo_rec(c->lhs->lhs, 1, out);
        });
        return;
      }
      if (c->kind == FoFormula::Kind::Or && c->lhs->kind == FoFormula::Kind::Not &&
          c->rhs->kind == FoFormula::Kind::Not) {
        wrap(3, [&] {
          print_fo_rec(c->lhs->lhs, 3, out);
          out += " && ";
          print_fo_rec(c->rhs->lhs, 4, out);
        });
        return;
      }
      wrap(4, [&] {
        out += '!';
        print_fo_rec(c, 4, out);
      });
      return;
    }
  }
}

} // namespace

FoPtr parse_fo(const std::string& text, const ParseOptions& opts) {
  detail::Lexer lex(text);
  FoPtr f = parse_fo_bin(lex, 0, opts);
  lex.expect_end();
  return f;
}

std::string print_fo(const FoPtr& f) {
  std::string out;
  print_fo_rec(f, 0, out);
  return out;
}

} // namespace pomega
