#pragma once

#include "lexer.hpp"
#include "pomega/term.hpp"

namespace pomega::detail {

/// Parses one term expression from an existing token stream; used both by
/// parse_term and by the first-order formula parser.
TermPtr parse_term_expr(Lexer& lex, const ParseOptions& opts);

/// Checks an identifier used as a variable or binder name.
void check_name(const Token& tok, const ParseOptions& opts);

} // namespace pomega::detail
