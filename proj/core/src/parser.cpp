#include "darg/parser.hpp"

#include <cctype>

namespace darg {

std::string_view token_name(TokenKind k) {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Not: return "'!'";
    case TokenKind::And: return "'&'";
    case TokenKind::Or: return "'|'";
    case TokenKind::Implies: return "'->'";
    case TokenKind::Iff: return "'<->'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Cond: return "'=>'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Turnstile: return "'|-'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Equals: return "'='";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view text, SourcePos origin, const std::string& file) {
  std::vector<Token> out;
  SourcePos pos = origin;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  auto push = [&](TokenKind k, std::size_t len) {
    out.push_back({k, std::string(text.substr(i, len)), pos});
    advance(len);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      push(TokenKind::Ident, j - i);
      continue;
    }
    const std::string_view rest = text.substr(i);
    if (rest.starts_with("<->")) push(TokenKind::Iff, 3);
    else if (rest.starts_with("->")) push(TokenKind::Implies, 2);
    else if (rest.starts_with("=>")) push(TokenKind::Cond, 2);
    else if (rest.starts_with("|-")) push(TokenKind::Turnstile, 2);
    else if (c == '!') push(TokenKind::Not, 1);
    else if (c == '&') push(TokenKind::And, 1);
    else if (c == '|') push(TokenKind::Or, 1);
    else if (c == '(') push(TokenKind::LParen, 1);
    else if (c == ')') push(TokenKind::RParen, 1);
    else if (c == ',') push(TokenKind::Comma, 1);
    else if (c == ':') push(TokenKind::Colon, 1);
    else if (c == '/') push(TokenKind::Slash, 1);
    else if (c == ';') push(TokenKind::Semicolon, 1);
    else if (c == '=') push(TokenKind::Equals, 1);
    else if (c == '[') push(TokenKind::LBracket, 1);
    else if (c == ']') push(TokenKind::RBracket, 1);
    else throw SyntaxError(std::string("unexpected character '") + c + "'", pos, file);
  }
  out.push_back({TokenKind::End, {}, pos});
  return out;
}

}  // namespace

FormulaParser::FormulaParser(std::string_view text, SourcePos origin, ParseOptions opts,
                             std::string file)
    : tokens_(tokenize(text, origin, file)), opts_(opts), file_(std::move(file)) {}

void FormulaParser::fail(const std::string& message) const {
  throw SyntaxError(message, peek().pos, file_);
}

bool FormulaParser::accept(TokenKind k) {
  if (!at(k)) return false;
  ++index_;
  return true;
}

const Token& FormulaParser::expect(TokenKind k) {
  if (!at(k)) {
    const Token& t = peek();
    fail("expected " + std::string(token_name(k)) + " but found " +
         (t.kind == TokenKind::End ? std::string(token_name(t.kind)) : "'" + t.text + "'"));
  }
  return tokens_[index_++];
}

void FormulaParser::expect_end() { expect(TokenKind::End); }

Formula FormulaParser::formula() { return iff(); }

Formula FormulaParser::iff() {
  Formula lhs = imp();
  while (accept(TokenKind::Iff)) lhs = Formula::biconditional(lhs, imp());
  return lhs;
}

Formula FormulaParser::imp() {
  Formula lhs = disj();
  if (accept(TokenKind::Implies)) return Formula::implication(lhs, imp());
  return lhs;
}

Formula FormulaParser::disj() {
  std::vector<Formula> parts{conj()};
  while (accept(TokenKind::Or)) parts.push_back(conj());
  return Formula::disjunction(std::move(parts));
}

Formula FormulaParser::conj() {
  std::vector<Formula> parts{unary()};
  while (accept(TokenKind::And)) parts.push_back(unary());
  return Formula::conjunction(std::move(parts));
}

Formula FormulaParser::unary() {
  if (accept(TokenKind::Not)) return Formula::negation(unary());
  if (accept(TokenKind::LParen)) {
    Formula f = formula();
    expect(TokenKind::RParen);
    return f;
  }
  return atom();
}

Formula FormulaParser::atom() {
  const std::string name = expect(TokenKind::Ident).text;
  if (!at(TokenKind::LParen)) {
    if (name == "true") return Formula::verum();
    if (name == "false") return Formula::falsum();
    return Formula::atom(name);
  }
  expect(TokenKind::LParen);
  std::vector<std::string> args;
  do {
    const Token& arg = expect(TokenKind::Ident);
    if (!opts_.allow_variables && is_variable_name(arg.text)) {
      throw SyntaxError("unbound variable " + arg.text + " outside a grounding context", arg.pos,
                        file_);
    }
    args.push_back(arg.text);
  } while (accept(TokenKind::Comma));
  expect(TokenKind::RParen);
  return Formula::atom(name, std::move(args));
}

std::string FormulaParser::identifier() {
  std::string name = expect(TokenKind::Ident).text;
  if (accept(TokenKind::LParen)) {
    name += '(';
    bool first = true;
    do {
      if (!first) name += ',';
      first = false;
      name += expect(TokenKind::Ident).text;
    } while (accept(TokenKind::Comma));
    expect(TokenKind::RParen);
    name += ')';
  }
  return name;
}

Formula parse_formula(std::string_view text, const ParseOptions& opts) {
  FormulaParser p(text, {}, opts);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

}  // namespace darg
