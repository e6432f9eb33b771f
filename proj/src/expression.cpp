#include "evoder/expression.hpp"

#include <cctype>

#include "evoder/errors.hpp"

namespace evoder {

struct Expression::Node {
  enum class Op { Constant, Variable, Negate, Add, Subtract, Multiply, Divide };
  Op op = Op::Constant;
  Rational constant;
  Symbol symbol;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

int role_index(char letter) {
  switch (letter) {
    case 'i': return 0;
    case 'j': return 1;
    case 'k': return 2;
    default: return -1;
  }
}

char role_letter(int index) { return "ijk"[index]; }

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected character");
    return root;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error("ExpressionError", what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Expression::Node>();
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Op::Add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Op::Subtract, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = binary(Op::Multiply, lhs, factor());
      } else if (accept('/')) {
        lhs = binary(Op::Divide, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    if (accept('-')) return binary(Op::Negate, factor(), nullptr);
    if (accept('(')) {
      NodePtr inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == 'w' || c == 'd') return symbol();
    error("unexpected character");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto value = Rational::parse(text_.substr(start, pos_ - start));
    if (!value) error("bad number");
    auto node = std::make_shared<Expression::Node>();
    node->constant = *value;
    return node;
  }

  NodePtr symbol() {
    if (pos_ + 4 > text_.size() || text_[pos_ + 1] != '_') error("bad symbol");
    const int row = role_index(text_[pos_ + 2]);
    const int col = role_index(text_[pos_ + 3]);
    if (row < 0 || col < 0) error("bad symbol");
    auto node = std::make_shared<Expression::Node>();
    node->op = Op::Variable;
    node->symbol = Symbol{text_[pos_] == 'w' ? Symbol::Kind::StructureConstant : Symbol::Kind::DerivationEntry, row, col};
    pos_ += 4;
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) error("bad symbol");
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<Rational> eval(const Expression::Node& node, const std::function<Rational(const Symbol&)>& value_of) {
  switch (node.op) {
    case Op::Constant: return node.constant;
    case Op::Variable: return value_of(node.symbol);
    case Op::Negate: {
      auto v = eval(*node.lhs, value_of);
      if (!v) return std::nullopt;
      return -*v;
    }
    default: break;
  }
  auto a = eval(*node.lhs, value_of);
  if (!a) return std::nullopt;
  auto b = eval(*node.rhs, value_of);
  if (!b) return std::nullopt;
  switch (node.op) {
    case Op::Add: return *a + *b;
    case Op::Subtract: return *a - *b;
    case Op::Multiply: return *a * *b;
    case Op::Divide:
      if (b->is_zero()) return std::nullopt;
      return *a / *b;
    default: return std::nullopt;
  }
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  return Expression(std::string(text), Parser(text).parse_all());
}

std::optional<Rational> Expression::evaluate(const std::function<Rational(const Symbol&)>& value_of) const {
  return eval(*root_, value_of);
}

}  // namespace evoder
