#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darg/error.hpp"
#include "darg/formula.hpp"

namespace darg {

struct ParseOptions {
  /// Accept schematic variables (`bird(X)`). Off for plain queries.
  bool allow_variables = false;
};

/// Parses the whole of `text` as a single formula.
///
///   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" or)* ;
///   or := and ("|" and)* ; and := unary ("&" unary)* ;
///   unary := "!" unary | "(" formula ")" | atom ;
///   atom := IDENT [ "(" IDENT {"," IDENT} ")" ]
///
/// `->` associates to the right, `<->` to the left. The identifiers `true`
/// and `false` denote verum and falsum.
Formula parse_formula(std::string_view text, const ParseOptions& opts = {});

enum class TokenKind {
  Ident,
  Not,       // !
  And,       // &
  Or,        // |
  Implies,   // ->
  Iff,       // <->
  LParen,
  RParen,
  Comma,
  Cond,      // =>
  Colon,
  Slash,
  Turnstile, // |-
  Semicolon,
  Equals,
  LBracket,
  RBracket,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
};

std::string_view token_name(TokenKind k);

/// Recursive-descent reader over a fragment of a larger document. Positions
/// are reported relative to `origin`, so diagnostics point into the file.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, SourcePos origin = {}, ParseOptions opts = {},
                std::string file = {});

  Formula formula();
  /// IDENT, or a parenthesised atom-style identifier such as `bp(high)`.
  std::string identifier();

  const Token& peek() const { return tokens_[index_]; }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool accept(TokenKind k);
  const Token& expect(TokenKind k);
  bool at_end() const { return at(TokenKind::End); }
  void expect_end();

  [[noreturn]] void fail(const std::string& message) const;

 private:
  Formula iff();
  Formula imp();
  Formula disj();
  Formula conj();
  Formula unary();
  Formula atom();

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  ParseOptions opts_;
  std::string file_;
};

}  // namespace darg
