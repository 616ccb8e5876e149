// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include "ocl/parser.hpp"

#include <cstdio>
#include <optional>
#include <set>

#include "ocl/lexer.hpp"

namespace ovc::ocl {

namespace {

std::string format_parse_error(SourceLoc loc, const std::vector<std::string>& expected,
                               const std::string& found) {
  std::string msg = "parse error at line " + std::to_string(loc.line) + ", column " +
                    std::to_string(loc.column) + ": expected ";
  for (size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

}  // namespace

ParseError::ParseError(SourceLoc loc, std::vector<std::string> expected, std::string found)
    : Error(Errc::parse_error, format_parse_error(loc, expected, found)),
      loc(loc),
      expected(std::move(expected)),
      found(std::move(found)) {}

namespace {

std::optional<IterKind> iter_kind_from(const std::string& name) {
  if (name == "forAll") return IterKind::ForAll;
  if (name == "exists") return IterKind::Exists;
  if (name == "select") return IterKind::Select;
  if (name == "reject") return IterKind::Reject;
  if (name == "collect") return IterKind::Collect;
  if (name == "isUnique") return IterKind::IsUnique;
  return std::nullopt;
}

std::optional<CollOp> coll_op_from(const std::string& name) {
  if (name == "size") return CollOp::Size;
  if (name == "isEmpty") return CollOp::IsEmpty;
  if (name == "notEmpty") return CollOp::NotEmpty;
  if (name == "includes") return CollOp::Includes;
  if (name == "sum") return CollOp::Sum;
  if (name == "asSet") return CollOp::AsSet;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ConstraintDocument parse_document(std::string_view source) {
    ConstraintDocument doc;
    doc.source_text = std::string(source);
    while (peek().kind != Tok::End) doc.invariants.push_back(parse_invariant(doc));
    check_duplicates(doc);
    return doc;
  }

 private:
  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void unexpected(std::vector<std::string> expected) {
    const Token& t = peek();
    std::string found = t.kind == Tok::Ident ? "'" + t.text + "'" : tok_name(t.kind);
    throw ParseError(t.loc, std::move(expected), std::move(found));
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) unexpected({tok_name(kind)});
    return advance();
  }

  Invariant parse_invariant(const ConstraintDocument& doc) {
    Invariant inv;
    inv.loc = peek().loc;
    expect(Tok::KwContext);
    inv.context_class = expect(Tok::Ident).text;
    expect(Tok::KwInv);
    if (peek().kind == Tok::Ident) inv.name = advance().text;
    else inv.name = "inv" + std::to_string(doc.invariants.size() + 1);
    expect(Tok::Colon);
    inv.body = parse_expr();
    return inv;
  }

  void check_duplicates(const ConstraintDocument& doc) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& inv : doc.invariants)
      if (!seen.insert({inv.context_class, inv.name}).second)
        throw Error(Errc::duplicate_invariant,
                    "invariant '" + inv.name + "' declared twice for context '" +
                        inv.context_class + "'");
  }

  ExprPtr make(SourceLoc loc, auto&& node) {
    auto e = std::make_unique<Expr>();
    e->loc = loc;
    e->node = std::forward<decltype(node)>(node);
    return e;
  }

  // Hard cap on expression nesting so hostile constraint files cannot blow
  // the stack through the service.
  static constexpr int kMaxDepth = 200;

  struct DepthGuard {
    Parser& parser;
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth)
        throw ParseError(parser.peek().loc, {"a less deeply nested expression"},
                         "nesting beyond " + std::to_string(kMaxDepth) + " levels");
    }
    ~DepthGuard() { --parser.depth_; }
  };

  ExprPtr parse_expr() {
    DepthGuard guard(*this);
    ExprPtr lhs = parse_logic();
    while (peek().kind == Tok::KwImplies) {
      SourceLoc loc = advance().loc;
      ExprPtr rhs = parse_logic();
      lhs = make(loc, Binary{BinOp::Implies, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_logic() {
    ExprPtr lhs = parse_cmp();
    while (true) {
      BinOp op;
      switch (peek().kind) {
        case Tok::KwAnd: op = BinOp::And; break;
        case Tok::KwOr: op = BinOp::Or; break;
        case Tok::KwXor: op = BinOp::Xor; break;
        default: return lhs;
      }
      SourceLoc loc = advance().loc;
      ExprPtr rhs = parse_cmp();
      lhs = make(loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr parse_cmp() {
    ExprPtr lhs = parse_add();
    while (true) {
      BinOp op;
      switch (peek().kind) {
        case Tok::Eq: op = BinOp::Eq; break;
        case Tok::Ne: op = BinOp::Ne; break;
        case Tok::Lt: op = BinOp::Lt; break;
        case Tok::Le: op = BinOp::Le; break;
        case Tok::Gt: op = BinOp::Gt; break;
        case Tok::Ge: op = BinOp::Ge; break;
        default: return lhs;
      }
      SourceLoc loc = advance().loc;
      ExprPtr rhs = parse_add();
      lhs = make(loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr parse_add() {
    ExprPtr lhs = parse_mul();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      BinOp op = peek().kind == Tok::Plus ? BinOp::Add : BinOp::Sub;
      SourceLoc loc = advance().loc;
      ExprPtr rhs = parse_mul();
      lhs = make(loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      BinOp op = peek().kind == Tok::Star ? BinOp::Mul : BinOp::Div;
      SourceLoc loc = advance().loc;
      ExprPtr rhs = parse_unary();
      lhs = make(loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    DepthGuard guard(*this);
    if (peek().kind == Tok::KwNot) {
      SourceLoc loc = advance().loc;
      return make(loc, Unary{UnOp::Not, parse_unary()});
    }
    if (peek().kind == Tok::Minus) {
      SourceLoc loc = advance().loc;
      return make(loc, Unary{UnOp::Neg, parse_unary()});
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr expr = parse_primary();
    while (true) {
      if (peek().kind == Tok::Dot) {
        SourceLoc loc = advance().loc;
        std::string name = expect(Tok::Ident).text;
        expr = make(loc, AttributeNav{std::move(expr), std::move(name)});
      } else if (peek().kind == Tok::Arrow) {
        SourceLoc loc = advance().loc;
        expr = parse_iter_or_op(std::move(expr), loc);
      } else {
        return expr;
      }
    }
  }

  ExprPtr parse_iter_or_op(ExprPtr receiver, SourceLoc loc) {
    if (peek().kind != Tok::Ident) unexpected({"collection operation"});
    std::string name = advance().text;
    if (auto iter = iter_kind_from(name)) {
      expect(Tok::LParen);
      IteratorCall call;
      call.receiver = std::move(receiver);
      call.kind = *iter;
      if (peek().kind == Tok::Ident && peek(1).kind == Tok::Pipe) {
        call.var = advance().text;
        advance();  // '|'
      } else {
        call.var = "$it" + std::to_string(implicit_counter_++);
        call.implicit_var = true;
      }
      call.body = parse_expr();
      expect(Tok::RParen);
      return make(loc, std::move(call));
    }
    if (auto op = coll_op_from(name)) {
      expect(Tok::LParen);
      CollectionOp coll;
      coll.receiver = std::move(receiver);
      coll.kind = *op;
      if (peek().kind != Tok::RParen) coll.arg = parse_expr();
      expect(Tok::RParen);
      return make(loc, std::move(coll));
    }
    throw ParseError(loc,
                     {"one of forAll, exists, select, reject, collect, isUnique, size, "
                      "isEmpty, notEmpty, includes, sum, asSet"},
                     "'" + name + "'");
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::IntLit: {
        advance();
        return make(t.loc, Literal{model::Scalar(t.int_val)});
      }
      case Tok::RealLit: {
        advance();
        return make(t.loc, Literal{model::Scalar(t.real_val)});
      }
      case Tok::StringLit: {
        advance();
        return make(t.loc, Literal{model::Scalar(t.text)});
      }
      case Tok::KwTrue: {
        advance();
        return make(t.loc, Literal{model::Scalar(true)});
      }
      case Tok::KwFalse: {
        advance();
        return make(t.loc, Literal{model::Scalar(false)});
      }
      case Tok::KwSelf: {
        advance();
        return make(t.loc, SelfRef{});
      }
      case Tok::KwIf: {
        advance();
        IfThenElse ite;
        ite.cond = parse_expr();
        expect(Tok::KwThen);
        ite.then_expr = parse_expr();
        expect(Tok::KwElse);
        ite.else_expr = parse_expr();
        expect(Tok::KwEndif);
        return make(t.loc, std::move(ite));
      }
      case Tok::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        // Class.allInstances() is recognized here; any other bare identifier
        // is a VarRef for the type checker to resolve.
        if (peek(1).kind == Tok::Dot && peek(2).kind == Tok::Ident &&
            peek(2).text == "allInstances") {
          std::string class_name = advance().text;
          advance();  // '.'
          advance();  // allInstances
          expect(Tok::LParen);
          expect(Tok::RParen);
          return make(t.loc, AllInstances{std::move(class_name)});
        }
        advance();
        return make(t.loc, VarRef{t.text});
      }
      default:
        unexpected({"expression"});
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  int implicit_counter_ = 0;
  int depth_ = 0;
};

}  // namespace

ConstraintDocument parse(std::string_view text) {
  return Parser(text).parse_document(text);
}

namespace {

void print_rec(const Expr& e, std::string& out);

// Real literals must re-lex as reals, so a fractional or exponent marker is
// forced onto integral doubles.
std::string real_literal(double d) {
  model::Scalar s(d);
  std::string text = model::scalar_to_string(s);
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos)
    text += ".0";
  return text;
}

bool is_implicit_var_ref(const ExprPtr& e) {
  if (!e) return false;
  const auto* var = std::get_if<VarRef>(&e->node);
  return var && !var->name.empty() && var->name[0] == '$';
}

void print_nav(const ExprPtr& receiver, const std::string& name, std::string& out) {
  if (is_implicit_var_ref(receiver)) {  // implicit iterator receiver stays bare
    out += name;
    return;
  }
  print_rec(*receiver, out);
  out += '.';
  out += name;
}

void print_rec(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Literal>) {
          const model::Scalar& v = node.value;
          if (const auto* s = std::get_if<std::string>(&v)) {
            out += '\'';
            for (char c : *s) {
              out += c;
              if (c == '\'') out += '\'';
            }
            out += '\'';
          } else if (const auto* d = std::get_if<double>(&v)) {
            out += real_literal(*d);
          } else {
            out += model::scalar_to_string(v);
          }
        } else if constexpr (std::is_same_v<T, SelfRef>) {
          out += "self";
        } else if constexpr (std::is_same_v<T, VarRef>) {
          out += node.name;
        } else if constexpr (std::is_same_v<T, AttributeNav> ||
                             std::is_same_v<T, ReferenceNav>) {
          print_nav(node.receiver, node.name, out);
        } else if constexpr (std::is_same_v<T, AllInstances>) {
          out += node.class_name;
          out += ".allInstances()";
        } else if constexpr (std::is_same_v<T, IteratorCall>) {
          print_rec(*node.receiver, out);
          out += "->";
          out += iter_kind_name(node.kind);
          out += '(';
          if (!node.implicit_var) {
            out += node.var;
            out += " | ";
          }
          print_rec(*node.body, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, CollectionOp>) {
          print_rec(*node.receiver, out);
          out += "->";
          out += coll_op_name(node.kind);
          out += '(';
          if (node.arg) print_rec(*node.arg, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, Binary>) {
          out += '(';
          print_rec(*node.lhs, out);
          out += ' ';
          out += bin_op_name(node.op);
          out += ' ';
          print_rec(*node.rhs, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, Unary>) {
          out += '(';
          out += node.op == UnOp::Not ? "not " : "-";
          print_rec(*node.operand, out);
          out += ')';
        } else {
          static_assert(std::is_same_v<T, IfThenElse>);
          out += "if ";
          print_rec(*node.cond, out);
          out += " then ";
          print_rec(*node.then_expr, out);
          out += " else ";
          print_rec(*node.else_expr, out);
          out += " endif";
        }
      },
      e.node);
}

}  // namespace

std::string print_expr(const Expr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

std::string print_document(const ConstraintDocument& doc) {
  std::string out;
  for (const auto& inv : doc.invariants) {
    out += "context ";
    out += inv.context_class;
    out += " inv ";
    out += inv.name;
    out += ": ";
    out += print_expr(*inv.body);
    out += '\n';
  }
  return out;
}

}  // namespace ovc::ocl
