#include "pomega/term.hpp"

#include "lexer.hpp"
#include "term_parser.hpp"

namespace pomega {

namespace {

TermPtr make(Term::Kind kind, std::string name, TermPtr lhs, TermPtr rhs) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->name = std::move(name);
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

} // namespace

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Var: return a.name == b.name;
    case Term::Kind::Bottom:
    case Term::Kind::Init: return true;
    case Term::Kind::Union: return term_eq(a.lhs, b.lhs) && term_eq(a.rhs, b.rhs);
    case Term::Kind::Complement:
    case Term::Kind::Next:
    case Term::Kind::Diamond: return term_eq(a.lhs, b.lhs);
  }
  return false;
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

TermPtr var(std::string name) { return make(Term::Kind::Var, std::move(name), nullptr, nullptr); }
TermPtr bottom() { return make(Term::Kind::Bottom, "", nullptr, nullptr); }
TermPtr init() { return make(Term::Kind::Init, "", nullptr, nullptr); }
TermPtr join(TermPtr a, TermPtr b) {
  return make(Term::Kind::Union, "", std::move(a), std::move(b));
}
TermPtr cmpl(TermPtr a) { return make(Term::Kind::Complement, "", std::move(a), nullptr); }
TermPtr next(TermPtr a) { return make(Term::Kind::Next, "", std::move(a), nullptr); }
TermPtr diamond(TermPtr a) { return make(Term::Kind::Diamond, "", std::move(a), nullptr); }

TermPtr top() { return cmpl(bottom()); }
TermPtr meet(TermPtr a, TermPtr b) { return cmpl(join(cmpl(std::move(a)), cmpl(std::move(b)))); }
TermPtr box(TermPtr a) { return cmpl(diamond(cmpl(std::move(a)))); }
TermPtr implies(TermPtr a, TermPtr b) { return join(cmpl(std::move(a)), std::move(b)); }
TermPtr iff(TermPtr a, TermPtr b) { return meet(implies(a, b), implies(b, a)); }

TermPtr meet_all(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return top();
  TermPtr acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = meet(acc, ts[i]);
  return acc;
}

TermPtr join_all(const std::vector<TermPtr>& ts) {
  if (ts.empty()) return bottom();
  TermPtr acc = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) acc = join(acc, ts[i]);
  return acc;
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  auto walk = [&out](auto&& self, const TermPtr& u) -> void {
    if (!u) return;
    if (u->kind == Term::Kind::Var) out.insert(u->name);
    self(self, u->lhs);
    self(self, u->rhs);
  };
  walk(walk, t);
  return out;
}

namespace detail {

void check_name(const Token& tok, const ParseOptions& opts) {
  if (!opts.allow_internal && !tok.text.empty() && tok.text[0] == '_')
    throw ParseError("names starting with '_' are reserved: " + tok.text, tok.line, tok.col);
}

namespace {

TermPtr parse_term_unary(Lexer& lex, const ParseOptions& opts) {
  const Token tok = lex.peek();
  if (tok.kind == Token::Kind::Sym && tok.text == "~") {
    lex.next();
    return cmpl(parse_term_unary(lex, opts));
  }
  if (tok.kind == Token::Kind::Sym && tok.text == "(") {
    lex.next();
    TermPtr t = parse_term_expr(lex, opts);
    lex.expect_sym(")");
    return t;
  }
  if (tok.kind == Token::Kind::Number) {
    lex.next();
    if (tok.text == "0") return bottom();
    if (tok.text == "1") return top();
    throw ParseError("the only numeric terms are 0 and 1, found " + tok.text, tok.line,
                     tok.col);
  }
  if (tok.kind == Token::Kind::Ident) {
    lex.next();
    if (tok.text == "I") return init();
    if (tok.text == "X") return next(parse_term_unary(lex, opts));
    if (tok.text == "F") return diamond(parse_term_unary(lex, opts));
    if (tok.text == "G") return box(parse_term_unary(lex, opts));
    check_name(tok, opts);
    return var(tok.text);
  }
  throw ParseError("expected a term, found '" + tok.text + "'", tok.line, tok.col);
}

// Levels, low to high: <-> (right), -> (right), | (left), & (left).
TermPtr parse_term_bin(Lexer& lex, int level, const ParseOptions& opts) {
  if (level >= 4) return parse_term_unary(lex, opts);
  TermPtr e = parse_term_bin(lex, level + 1, opts);
  switch (level) {
    case 0:
      if (lex.eat_sym("<->")) e = iff(e, parse_term_bin(lex, 0, opts));
      break;
    case 1:
      if (lex.eat_sym("->")) e = implies(e, parse_term_bin(lex, 1, opts));
      break;
    case 2:
      while (lex.eat_sym("|")) e = join(e, parse_term_bin(lex, 3, opts));
      break;
    case 3:
      while (lex.eat_sym("&")) e = meet(e, parse_term_bin(lex, 4, opts));
      break;
  }
  return e;
}

} // namespace

TermPtr parse_term_expr(Lexer& lex, const ParseOptions& opts) {
  return parse_term_bin(lex, 0, opts);
}

} // namespace detail

TermPtr parse_term(const std::string& text, const ParseOptions& opts) {
  detail::Lexer lex(text);
  TermPtr t = detail::parse_term_expr(lex, opts);
  lex.expect_end();
  return t;
}

namespace {

// Precedence levels for printing: atoms 5, prefix 4, & 3, | 2.
void print_rec(const TermPtr& t, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (t->kind) {
    case Term::Kind::Var: out += t->name; return;
    case Term::Kind::Bottom: out += '0'; return;
    case Term::Kind::Init: out += 'I'; return;
    case Term::Kind::Next:
      wrap(4, [&] {
        out += "X ";
        print_rec(t->lhs, 4, out);
      });
      return;
    case Term::Kind::Diamond:
      wrap(4, [&] {
        out += "F ";
        print_rec(t->lhs, 4, out);
      });
      return;
    case Term::Kind::Union:
      wrap(2, [&] {
        print_rec(t->lhs, 2, out);
        out += " | ";
        print_rec(t->rhs, 3, out);
      });
      return;
    case Term::Kind::Complement: {
      const TermPtr& c = t->lhs;
      if (c->kind == Term::Kind::Bottom) {
        out += '1';
        return;
      }
      if (c->kind == Term::Kind::Diamond && c->lhs->kind == Term::Kind::Complement) {
        wrap(4, [&] {
          out += "G ";
          print_rec(c->lhs->lhs, 4, out);
        });
        return;
      }
      if (c->kind == Term::Kind::Union && c->lhs->kind == Term::Kind::Complement &&
          c->rhs->kind == Term::Kind::Complement) {
        wrap(3, [&] {
          print_rec(c->lhs->lhs, 3, out);
          out += " & ";
          print_rec(c->rhs->lhs, 4, out);
        });
        return;
      }
      wrap(4, [&] {
        out += '~';
        print_rec(c, 4, out);
      });
      return;
    }
  }
}

} // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_rec(t, 0, out);
  return out;
}

} // namespace pomega
