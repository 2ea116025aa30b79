/* Copyright 2026 fuzmet contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fuzmet/expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>
#include <vector>

namespace fuzmet {

enum class NodeKind { Num, Var, Neg, Add, Sub, Mul, Div, PowInt, PowVar };

struct Expr::Node {
  NodeKind kind;
  double value = 0.0;        // Num: literal value; PowInt: exponent
  std::string lexeme;        // Num: original text, preserved for printing
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(NodeKind k, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

struct Token {
  enum Kind { Num, VarN, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::size_t offset;
  std::string text;   // for Num
  double value = 0.0;
  bool is_integer = false;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::size_t off = pos_;
    if (pos_ >= s_.size()) return {Token::End, off, "", 0.0, false};
    char c = s_[pos_];
    switch (c) {
      case '+': ++pos_; return {Token::Plus, off, "+", 0.0, false};
      case '-': ++pos_; return {Token::Minus, off, "-", 0.0, false};
      case '*': ++pos_; return {Token::Star, off, "*", 0.0, false};
      case '/': ++pos_; return {Token::Slash, off, "/", 0.0, false};
      case '^': ++pos_; return {Token::Caret, off, "^", 0.0, false};
      case '(': ++pos_; return {Token::LParen, off, "(", 0.0, false};
      case ')': ++pos_; return {Token::RParen, off, ")", 0.0, false};
      default: break;
    }
    if (c == 'n') {
      ++pos_;
      return {Token::VarN, off, "n", 0.0, false};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      bool integer = true;
      if (pos_ < s_.size() && s_[pos_] == '.' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        integer = false;
        ++pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
      }
      std::string text = s_.substr(start, pos_ - start);
      return {Token::Num, off, text, std::stod(text), integer};
    }
    throw ParseError(off, std::string("unexpected character '") + c + "'");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  NodePtr parse_all() {
    NodePtr e = expr();
    if (cur_.kind != Token::End)
      throw ParseError(cur_.offset, "unexpected token '" + describe(cur_) + "'");
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  static std::string describe(const Token& t) {
    return t.kind == Token::End ? "end of input" : t.text;
  }

  NodePtr expr() {
    NodePtr left = term();
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      NodeKind k = cur_.kind == Token::Plus ? NodeKind::Add : NodeKind::Sub;
      advance();
      left = make_node(k, left, term());
    }
    return left;
  }

  NodePtr term() {
    NodePtr left = factor();
    while (cur_.kind == Token::Star || cur_.kind == Token::Slash) {
      NodeKind k = cur_.kind == Token::Star ? NodeKind::Mul : NodeKind::Div;
      advance();
      left = make_node(k, left, factor());
    }
    return left;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (cur_.kind == Token::Caret) {
      advance();
      if (cur_.kind == Token::VarN) {
        advance();
        return make_node(NodeKind::PowVar, b);
      }
      if (cur_.kind == Token::Num && cur_.is_integer) {
        auto p = std::make_shared<Expr::Node>();
        p->kind = NodeKind::PowInt;
        p->value = cur_.value;
        p->lexeme = cur_.text;
        p->lhs = b;
        advance();
        return p;
      }
      throw ParseError(cur_.offset,
                       "exponent must be an integer literal or n, got '" +
                           describe(cur_) + "'");
    }
    return b;
  }

  NodePtr base() {
    switch (cur_.kind) {
      case Token::Num: {
        auto n = std::make_shared<Expr::Node>();
        n->kind = NodeKind::Num;
        n->value = cur_.value;
        n->lexeme = cur_.text;
        advance();
        return n;
      }
      case Token::VarN:
        advance();
        return make_node(NodeKind::Var);
      case Token::LParen: {
        advance();
        NodePtr e = expr();
        if (cur_.kind != Token::RParen)
          throw ParseError(cur_.offset, "expected ')', got '" + describe(cur_) + "'");
        advance();
        return e;
      }
      case Token::Minus:
        advance();
        return make_node(NodeKind::Neg, base());
      default:
        throw ParseError(cur_.offset, "unexpected token '" + describe(cur_) + "'");
    }
  }

  Lexer lex_;
  Token cur_{Token::End, 0, "", 0.0, false};
};

double eval_node(const Expr::Node& node, long long n) {
  switch (node.kind) {
    case NodeKind::Num: return node.value;
    case NodeKind::Var: return static_cast<double>(n);
    case NodeKind::Neg: return -eval_node(*node.lhs, n);
    case NodeKind::Add: return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
    case NodeKind::Sub: return eval_node(*node.lhs, n) - eval_node(*node.rhs, n);
    case NodeKind::Mul: return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
    case NodeKind::Div: {
      double d = eval_node(*node.rhs, n);
      if (d == 0.0)
        throw EvalError("division by zero at n=" + std::to_string(n));
      return eval_node(*node.lhs, n) / d;
    }
    case NodeKind::PowInt:
      return std::pow(eval_node(*node.lhs, n), node.value);
    default:  // PowVar
      return std::pow(eval_node(*node.lhs, n), static_cast<double>(n));
  }
}

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::PowInt:
    case NodeKind::PowVar: return 4;
    default: return 5;
  }
}

void print_node(const Expr::Node& node, int parent_prec, bool right_side,
                std::string& out) {
  int prec = precedence(node.kind);
  // left-associative binaries need parens when a same-precedence child sits
  // on the right
  bool need_paren = prec < parent_prec || (prec == parent_prec && right_side &&
                                           prec >= 1 && prec <= 2);
  if (need_paren) out += '(';
  switch (node.kind) {
    case NodeKind::Num: out += node.lexeme; break;
    case NodeKind::Var: out += 'n'; break;
    case NodeKind::Neg:
      out += '-';
      print_node(*node.lhs, prec, false, out);
      break;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      char op = node.kind == NodeKind::Add   ? '+'
                : node.kind == NodeKind::Sub ? '-'
                : node.kind == NodeKind::Mul ? '*'
                                             : '/';
      print_node(*node.lhs, prec, false, out);
      out += op;
      print_node(*node.rhs, prec, true, out);
      break;
    }
    case NodeKind::PowInt:
      print_node(*node.lhs, prec + 1, false, out);
      out += '^';
      out += node.lexeme;
      break;
    default:  // PowVar
      print_node(*node.lhs, prec + 1, false, out);
      out += "^n";
      break;
  }
  if (need_paren) out += ')';
}

bool same_node(const Expr::Node& a, const Expr::Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == NodeKind::Num || a.kind == NodeKind::PowInt) {
    if (a.value != b.value) return false;
  }
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !same_node(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !same_node(*a.rhs, *b.rhs)) return false;
  return true;
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  Parser p(text);
  Expr e;
  e.root_ = p.parse_all();
  e.source_ = text;
  return e;
}

double Expr::eval(long long n) const {
  if (!root_) throw EvalError("empty expression");
  double v = eval_node(*root_, n);
  if (!std::isfinite(v))
    throw EvalError("non-finite result at n=" + std::to_string(n));
  return v;
}

std::string Expr::str() const {
  if (!root_) return "";
  std::string out;
  print_node(*root_, 0, false, out);
  return out;
}

bool Expr::same_ast(const Expr& other) const {
  if (!root_ || !other.root_) return root_ == other.root_;
  return same_node(*root_, *other.root_);
}

}  // namespace fuzmet
