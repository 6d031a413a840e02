#include "pomega/s1s.hpp"

#include <cctype>
#include <map>

#include "lexer.hpp"

namespace pomega {

namespace {

bool is_set_name(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

S1sPtr node(S1sFormula::Kind kind, std::string v1 = "", std::string v2 = "",
            S1sPtr lhs = nullptr, S1sPtr rhs = nullptr) {
  auto f = std::make_shared<S1sFormula>();
  f->kind = kind;
  f->var1 = std::move(v1);
  f->var2 = std::move(v2);
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

} // namespace

S1sPtr s1s_subset(std::string p, std::string q) {
  return node(S1sFormula::Kind::Subset, std::move(p), std::move(q));
}
S1sPtr s1s_succ(std::string p, std::string q) {
  return node(S1sFormula::Kind::Succ, std::move(p), std::move(q));
}
S1sPtr s1s_or(S1sPtr a, S1sPtr b) {
  return node(S1sFormula::Kind::Or, "", "", std::move(a), std::move(b));
}
S1sPtr s1s_and(S1sPtr a, S1sPtr b) {
  return node(S1sFormula::Kind::And, "", "", std::move(a), std::move(b));
}
S1sPtr s1s_not(S1sPtr a) { return node(S1sFormula::Kind::Not, "", "", std::move(a)); }
S1sPtr s1s_exists2(std::string binder, S1sPtr body) {
  return node(S1sFormula::Kind::Exists2, std::move(binder), "", std::move(body));
}
S1sPtr s1s_exists1(std::string binder, S1sPtr body) {
  return node(S1sFormula::Kind::Exists1, std::move(binder), "", std::move(body));
}
S1sPtr s1s_forall2(std::string binder, S1sPtr body) {
  return s1s_not(s1s_exists2(std::move(binder), s1s_not(std::move(body))));
}
S1sPtr s1s_forall1(std::string binder, S1sPtr body) {
  return s1s_not(s1s_exists1(std::move(binder), s1s_not(std::move(body))));
}
S1sPtr s1s_sing(std::string x) { return node(S1sFormula::Kind::Sing, std::move(x)); }
S1sPtr s1s_mem(std::string x, std::string p) {
  return node(S1sFormula::Kind::Mem, std::move(x), std::move(p));
}
S1sPtr s1s_le(std::string x, std::string y) {
  return node(S1sFormula::Kind::Le, std::move(x), std::move(y));
}
S1sPtr s1s_succ_ind(std::string x, std::string y) {
  return node(S1sFormula::Kind::SuccInd, std::move(x), std::move(y));
}
S1sPtr s1s_eqset(std::string a, std::string b) {
  return node(S1sFormula::Kind::EqSet, std::move(a), std::move(b));
}
S1sPtr s1s_true() { return node(S1sFormula::Kind::True); }
S1sPtr s1s_false() { return node(S1sFormula::Kind::False); }

bool s1s_eq_ast(const S1sPtr& a, const S1sPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  return a->var1 == b->var1 && a->var2 == b->var2 && s1s_eq_ast(a->lhs, b->lhs) &&
         s1s_eq_ast(a->rhs, b->rhs);
}

std::set<std::string> s1s_free_vars(const S1sPtr& f) {
  std::set<std::string> out;
  auto walk = [&out](auto&& self, const S1sPtr& g, std::set<std::string> bound) -> void {
    if (!g) return;
    switch (g->kind) {
      case S1sFormula::Kind::Exists2:
      case S1sFormula::Kind::Exists1: {
        bound.insert(g->var1);
        self(self, g->lhs, std::move(bound));
        return;
      }
      default: {
        if (!g->var1.empty() && !bound.count(g->var1)) out.insert(g->var1);
        if (!g->var2.empty() && !bound.count(g->var2)) out.insert(g->var2);
        self(self, g->lhs, bound);
        self(self, g->rhs, bound);
        return;
      }
    }
  };
  walk(walk, f, {});
  return out;
}

bool s1s_is_kernel(const S1sPtr& f) {
  if (!f) return true;
  switch (f->kind) {
    case S1sFormula::Kind::Subset:
    case S1sFormula::Kind::Succ:
    case S1sFormula::Kind::Or:
    case S1sFormula::Kind::Not:
    case S1sFormula::Kind::Exists2: return s1s_is_kernel(f->lhs) && s1s_is_kernel(f->rhs);
    default: return false;
  }
}

bool s1s_quantifier_free(const S1sPtr& f) {
  if (!f) return true;
  if (f->kind == S1sFormula::Kind::Exists2 || f->kind == S1sFormula::Kind::Exists1)
    return false;
  return s1s_quantifier_free(f->lhs) && s1s_quantifier_free(f->rhs);
}

namespace {

std::string fresh_like(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int k = 2;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

S1sPtr rectify_rec(const S1sPtr& f, std::map<std::string, std::string> ren,
                   std::set<std::string>& used) {
  auto lookup = [&ren](const std::string& v) {
    auto it = ren.find(v);
    return it == ren.end() ? v : it->second;
  };
  switch (f->kind) {
    case S1sFormula::Kind::Exists2:
    case S1sFormula::Kind::Exists1: {
      const std::string fresh = fresh_like(f->var1, used);
      used.insert(fresh);
      ren[f->var1] = fresh;
      return node(f->kind, fresh, "", rectify_rec(f->lhs, std::move(ren), used));
    }
    default: {
      S1sPtr l = f->lhs ? rectify_rec(f->lhs, ren, used) : nullptr;
      S1sPtr r = f->rhs ? rectify_rec(f->rhs, ren, used) : nullptr;
      return node(f->kind, f->var1.empty() ? "" : lookup(f->var1),
                  f->var2.empty() ? "" : lookup(f->var2), std::move(l), std::move(r));
    }
  }
}

} // namespace

S1sPtr s1s_rectify(const S1sPtr& f) {
  std::set<std::string> used = s1s_free_vars(f);
  return rectify_rec(f, {}, used);
}

namespace {

using detail::Lexer;
using detail::Token;

const char* const kReserved[] = {"sub", "in", "sing", "S", "ex1", "ex2", "all1", "all2"};

bool is_reserved(const std::string& s) {
  for (const char* r : kReserved)
    if (s == r) return true;
  return false;
}

std::string expect_var(Lexer& lex, const char* what) {
  const Token tok = lex.next();
  if (tok.kind != Token::Kind::Ident || is_reserved(tok.text))
    throw ParseError(std::string("expected ") + what + ", found '" + tok.text + "'",
                     tok.line, tok.col);
  if (tok.text[0] == '_')
    throw ParseError("names starting with '_' are reserved: " + tok.text, tok.line, tok.col);
  return tok.text;
}

std::string expect_set_var(Lexer& lex) {
  const Token tok = lex.peek();
  std::string v = expect_var(lex, "a set variable (capitalized)");
  if (!is_set_name(v))
    throw ParseError("expected a set variable (capitalized), found '" + v + "'", tok.line,
                     tok.col);
  return v;
}

std::string expect_ind_var(Lexer& lex) {
  const Token tok = lex.peek();
  std::string v = expect_var(lex, "an individual variable (lower-case)");
  if (is_set_name(v))
    throw ParseError("expected an individual variable (lower-case), found '" + v + "'",
                     tok.line, tok.col);
  return v;
}

S1sPtr parse_s1s_bin(Lexer& lex, int level);

S1sPtr parse_s1s_unary(Lexer& lex) {
  const Token tok = lex.peek();
  if (tok.kind == Token::Kind::Sym && tok.text == "!") {
    lex.next();
    return s1s_not(parse_s1s_unary(lex));
  }
  if (tok.kind == Token::Kind::Sym && tok.text == "(") {
    lex.next();
    S1sPtr f = parse_s1s_bin(lex, 0);
    lex.expect_sym(")");
    return f;
  }
  if (tok.kind != Token::Kind::Ident)
    throw ParseError("expected a formula, found '" + tok.text + "'", tok.line, tok.col);

  if (tok.text == "ex2" || tok.text == "all2") {
    lex.next();
    std::string binder = expect_set_var(lex);
    lex.expect_sym(".");
    S1sPtr body = parse_s1s_bin(lex, 0);
    return tok.text == "ex2" ? s1s_exists2(binder, body) : s1s_forall2(binder, body);
  }
  if (tok.text == "ex1" || tok.text == "all1") {
    lex.next();
    std::string binder = expect_ind_var(lex);
    lex.expect_sym(".");
    S1sPtr body = parse_s1s_bin(lex, 0);
    return tok.text == "ex1" ? s1s_exists1(binder, body) : s1s_forall1(binder, body);
  }
  if (tok.text == "sing") {
    lex.next();
    lex.expect_sym("(");
    std::string x = expect_ind_var(lex);
    lex.expect_sym(")");
    return s1s_sing(x);
  }
  if (tok.text == "S") {
    lex.next();
    lex.expect_sym("(");
    const Token first = lex.peek();
    std::string a = expect_var(lex, "a variable");
    lex.expect_sym(",");
    std::string b = expect_var(lex, "a variable");
    lex.expect_sym(")");
    if (is_set_name(a) != is_set_name(b))
      throw ParseError("S(_,_) arguments must both be set or both individual variables",
                       first.line, first.col);
    return is_set_name(a) ? s1s_succ(a, b) : s1s_succ_ind(a, b);
  }

  // Atom starting with a variable.
  const Token first = lex.peek();
  std::string a = expect_var(lex, "a variable");
  const Token op = lex.peek();
  if (op.kind == Token::Kind::Ident && op.text == "sub") {
    lex.next();
    if (!is_set_name(a))
      throw ParseError("'sub' expects set variables, found '" + a + "'", first.line,
                       first.col);
    return s1s_subset(a, expect_set_var(lex));
  }
  if (op.kind == Token::Kind::Ident && op.text == "in") {
    lex.next();
    if (is_set_name(a))
      throw ParseError("'in' expects an individual variable on the left, found '" + a + "'",
                       first.line, first.col);
    return s1s_mem(a, expect_set_var(lex));
  }
  if (op.kind == Token::Kind::Sym && op.text == "<=") {
    lex.next();
    if (is_set_name(a))
      throw ParseError("'<=' expects individual variables, found '" + a + "'", first.line,
                       first.col);
    return s1s_le(a, expect_ind_var(lex));
  }
  if (op.kind == Token::Kind::Sym && op.text == "==") {
    lex.next();
    const Token second = lex.peek();
    std::string b = expect_var(lex, "a variable");
    if (is_set_name(a) != is_set_name(b))
      throw ParseError("'==' expects variables of the same sort", second.line, second.col);
    return s1s_eqset(a, b);
  }
  throw ParseError("expected 'sub', 'in', '<=' or '==' after variable '" + a + "'", op.line,
                   op.col);
}

// Levels, low to high: || (left), && (left).
S1sPtr parse_s1s_bin(Lexer& lex, int level) {
  if (level >= 2) return parse_s1s_unary(lex);
  S1sPtr e = parse_s1s_bin(lex, level + 1);
  if (level == 0) {
    while (lex.eat_sym("||")) e = s1s_or(e, parse_s1s_bin(lex, 1));
  } else {
    while (lex.eat_sym("&&")) e = s1s_and(e, parse_s1s_bin(lex, 2));
  }
  return e;
}

// Printing precedences: atoms 5, ! 4, && 3, || 2, quantifiers 1.
void print_s1s_rec(const S1sPtr& f, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (f->kind) {
    case S1sFormula::Kind::Subset: out += f->var1 + " sub " + f->var2; return;
    case S1sFormula::Kind::Succ:
    case S1sFormula::Kind::SuccInd: out += "S(" + f->var1 + ", " + f->var2 + ")"; return;
    case S1sFormula::Kind::Sing: out += "sing(" + f->var1 + ")"; return;
    case S1sFormula::Kind::Mem: out += f->var1 + " in " + f->var2; return;
    case S1sFormula::Kind::Le: out += f->var1 + " <= " + f->var2; return;
    case S1sFormula::Kind::EqSet: out += f->var1 + " == " + f->var2; return;
    case S1sFormula::Kind::True: out += "true"; return;
    case S1sFormula::Kind::False: out += "false"; return;
    case S1sFormula::Kind::Or:
      wrap(2, [&] {
        print_s1s_rec(f->lhs, 2, out);
        out += " || ";
        print_s1s_rec(f->rhs, 3, out);
      });
      return;
    case S1sFormula::Kind::And:
      wrap(3, [&] {
        print_s1s_rec(f->lhs, 3, out);
        out += " && ";
        print_s1s_rec(f->rhs, 4, out);
      });
      return;
    case S1sFormula::Kind::Exists2:
    case S1sFormula::Kind::Exists1:
      wrap(1, [&] {
        out += f->kind == S1sFormula::Kind::Exists2 ? "ex2 " : "ex1 ";
        out += f->var1;
        out += ". ";
        print_s1s_rec(f->lhs, 1, out);
      });
      return;
    case S1sFormula::Kind::Not: {
      const S1sPtr& c = f->lhs;
      if ((c->kind == S1sFormula::Kind::Exists2 || c->kind == S1sFormula::Kind::Exists1) &&
          c->lhs->kind == S1sFormula::Kind::Not) {
        wrap(1, [&] {
          out += c->kind == S1sFormula::Kind::Exists2 ? "all2 " : "all1 ";
          out += c->var1;
          out += ". ";
          print_s1s_rec(c->lhs->lhs, 1, out);
        });
        return;
      }
      wrap(4, [&] {
        out += '!';
        print_s1s_rec(c, 4, out);
      });
      return;
    }
  }
}

} // namespace

S1sPtr parse_s1s(const std::string& text) {
  detail::Lexer lex(text);
  S1sPtr f = parse_s1s_bin(lex, 0);
  lex.expect_end();
  return s1s_rectify(f);
}

std::string print_s1s(const S1sPtr& f) {
  std::string out;
  print_s1s_rec(f, 0, out);
  return out;
}

} // namespace pomega
