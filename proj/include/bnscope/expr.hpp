#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnscope/network.hpp"

namespace bnscope {

/// Syntax error or semantic error in .bn / .anet input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Expression tree over variables x0..x(n-1).
struct BoolExpr {
  enum class Kind { Constant, Variable, Not, And, Or, Xor };

  Kind kind = Kind::Constant;
  bool value = false;  // Constant
  int variable = 0;    // Variable
  std::vector<BoolExpr> operands;

  static BoolExpr constant(bool v);
  static BoolExpr var(int index);
  static BoolExpr negate(BoolExpr operand);
  static BoolExpr binary(Kind kind, BoolExpr lhs, BoolExpr rhs);

  /// Largest variable index used, or -1.
  int max_variable() const;
  bool evaluate(Word x) const;

  /// Truth table packed 64 states per word (state x is bit x%64 of word x/64).
  std::vector<std::uint64_t> compile(int n) const;
};

/// Parses a single expression. Precedence, tightest first: `!`, `^`, `&`, `|`.
BoolExpr parse_expression(std::string_view text);

/// One parsed line of a .bn file.
struct CoordinateDefinition {
  int index = 0;
  BoolExpr expr;
  int line = 0;
};

struct BnDocument {
  int n = 0;
  bool declared = false;
  std::vector<CoordinateDefinition> coordinates;  // sorted by index
};

/// Parses and validates a .bn document: variables in range, each coordinate
/// defined exactly once, n declared or inferred.
BnDocument parse_bn_document(std::string_view text, bool force = false);

/// parse_bn_document followed by truth-table compilation.
BooleanNetwork parse_network(std::string_view text, bool force = false);

/// Expression for one coordinate, built by Shannon expansion over its support.
std::string render_coordinate(const BooleanNetwork& f, int i);

/// .bn writer; parse_network(render_network(f)) == f.
std::string render_network(const BooleanNetwork& f);

}  // namespace bnscope
