#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "evoder/rational.hpp"

namespace evoder {

/// A structure constant w_xy or a derivation entry d_xy, with x and y given as
/// role positions 0, 1, 2 for the letters i, j, k.
struct Symbol {
  enum class Kind { StructureConstant, DerivationEntry };
  Kind kind = Kind::StructureConstant;
  int row = 0;
  int col = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Small arithmetic expression over rational constants and symbols.
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | number | symbol | '(' expr ')'
///   symbol  := ('w' | 'd') '_' letter letter,  letter in {i, j, k}
class Expression {
 public:
  /// Throws Error("ExpressionError") on malformed text.
  static Expression parse(std::string_view text);

  /// nullopt when a division by zero occurs.
  std::optional<Rational> evaluate(const std::function<Rational(const Symbol&)>& value_of) const;

  const std::string& text() const { return text_; }

  struct Node;

 private:
  Expression(std::string text, std::shared_ptr<const Node> root) : text_(std::move(text)), root_(std::move(root)) {}

  std::string text_;
  std::shared_ptr<const Node> root_;
};

/// Role letter ('i', 'j', 'k') to position, or -1.
int role_index(char letter);
char role_letter(int index);

}  // namespace evoder
