// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/lexer.hpp"

#include <charconv>
#include <unordered_map>

#include "ocl/parser.hpp"

namespace ovc::ocl {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::RealLit: return "real literal";
    case Tok::StringLit: return "string literal";
    case Tok::KwContext: return "'context'";
    case Tok::KwInv: return "'inv'";
    case Tok::KwSelf: return "'self'";
    case Tok::KwIf: return "'if'";
    case Tok::KwThen: return "'then'";
    case Tok::KwElse: return "'else'";
    case Tok::KwEndif: return "'endif'";
    case Tok::KwAnd: return "'and'";
    case Tok::KwOr: return "'or'";
    case Tok::KwXor: return "'xor'";
    case Tok::KwImplies: return "'implies'";
    case Tok::KwNot: return "'not'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Pipe: return "'|'";
    case Tok::Colon: return "':'";
    case Tok::Eq: return "'='";
    case Tok::Ne: return "'<>'";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string_view, Tok> kKeywords = {
    {"context", Tok::KwContext}, {"inv", Tok::KwInv},       {"self", Tok::KwSelf},
    {"if", Tok::KwIf},           {"then", Tok::KwThen},     {"else", Tok::KwElse},
    {"endif", Tok::KwEndif},     {"and", Tok::KwAnd},       {"or", Tok::KwOr},
    {"xor", Tok::KwXor},         {"implies", Tok::KwImplies}, {"not", Tok::KwNot},
    {"true", Tok::KwTrue},       {"false", Tok::KwFalse},
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  SourceLoc loc() const { return {line_, col_}; }
  size_t pos() const { return pos_; }
  std::string_view slice(size_t from) const { return text_.substr(from, pos_ - from); }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(SourceLoc loc, std::string expected, std::string found) {
  throw ParseError(loc, {std::move(expected)}, std::move(found));
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  Cursor cur(text);

  while (!cur.done()) {
    char c = cur.peek();
    SourceLoc loc = cur.loc();

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      cur.advance();
      continue;
    }
    if (c == '-' && cur.peek(1) == '-') {
      while (!cur.done() && cur.peek() != '\n') cur.advance();
      continue;
    }

    if (is_ident_start(c)) {
      size_t start = cur.pos();
      while (!cur.done() && is_ident_char(cur.peek())) cur.advance();
      std::string_view word = cur.slice(start);
      auto kw = kKeywords.find(word);
      Token t;
      t.kind = kw == kKeywords.end() ? Tok::Ident : kw->second;
      t.text = std::string(word);
      t.loc = loc;
      out.push_back(std::move(t));
      continue;
    }

    if (is_digit(c)) {
      size_t start = cur.pos();
      while (!cur.done() && is_digit(cur.peek())) cur.advance();
      bool real = false;
      if (cur.peek() == '.' && is_digit(cur.peek(1))) {
        real = true;
        cur.advance();
        while (!cur.done() && is_digit(cur.peek())) cur.advance();
      }
      if ((cur.peek() == 'e' || cur.peek() == 'E') &&
          (is_digit(cur.peek(1)) ||
           ((cur.peek(1) == '+' || cur.peek(1) == '-') && is_digit(cur.peek(2))))) {
        real = true;
        cur.advance();
        if (cur.peek() == '+' || cur.peek() == '-') cur.advance();
        while (!cur.done() && is_digit(cur.peek())) cur.advance();
      }
      std::string_view num = cur.slice(start);
      Token t;
      t.loc = loc;
      t.text = std::string(num);
      if (real) {
        t.kind = Tok::RealLit;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), t.real_val);
        if (ec != std::errc() || p != num.data() + num.size())
          fail(loc, "real literal", std::string(num));
      } else {
        t.kind = Tok::IntLit;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), t.int_val);
        if (ec != std::errc() || p != num.data() + num.size())
          fail(loc, "integer literal", std::string(num));
      }
      out.push_back(std::move(t));
      continue;
    }

    if (c == '\'') {
      cur.advance();
      std::string value;
      while (true) {
        if (cur.done()) fail(loc, "closing '", "end of input");
        char ch = cur.advance();
        if (ch == '\'') {
          if (cur.peek() == '\'') {  // '' escapes a quote
            value += '\'';
            cur.advance();
            continue;
          }
          break;
        }
        value += ch;
      }
      Token t;
      t.kind = Tok::StringLit;
      t.text = std::move(value);
      t.loc = loc;
      out.push_back(std::move(t));
      continue;
    }

    auto push = [&](Tok kind, int len) {
      for (int i = 0; i < len; ++i) cur.advance();
      Token t;
      t.kind = kind;
      t.loc = loc;
      out.push_back(std::move(t));
    };

    switch (c) {
      case '(': push(Tok::LParen, 1); break;
      case ')': push(Tok::RParen, 1); break;
      case '.': push(Tok::Dot, 1); break;
      case '|': push(Tok::Pipe, 1); break;
      case ':': push(Tok::Colon, 1); break;
      case '+': push(Tok::Plus, 1); break;
      case '*': push(Tok::Star, 1); break;
      case '/': push(Tok::Slash, 1); break;
      case '=': push(Tok::Eq, 1); break;
      case '-':
        if (cur.peek(1) == '>') push(Tok::Arrow, 2);
        else push(Tok::Minus, 1);
        break;
      case '<':
        if (cur.peek(1) == '>') push(Tok::Ne, 2);
        else if (cur.peek(1) == '=') push(Tok::Le, 2);
        else push(Tok::Lt, 1);
        break;
      case '>':
        if (cur.peek(1) == '=') push(Tok::Ge, 2);
        else push(Tok::Gt, 1);
        break;
      default:
        fail(loc, "token", std::string(1, c));
    }
  }

  Token end;
  end.kind = Tok::End;
  end.loc = cur.loc();
  out.push_back(std::move(end));
  return out;
}

}  // namespace ovc::ocl
