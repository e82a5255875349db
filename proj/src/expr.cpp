#include "bnscope/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace bnscope {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

BoolExpr BoolExpr::constant(bool v) {
  BoolExpr e;
  e.kind = Kind::Constant;
  e.value = v;
  return e;
}

BoolExpr BoolExpr::var(int index) {
  BoolExpr e;
  e.kind = Kind::Variable;
  e.variable = index;
  return e;
}

BoolExpr BoolExpr::negate(BoolExpr operand) {
  BoolExpr e;
  e.kind = Kind::Not;
  e.operands.push_back(std::move(operand));
  return e;
}

BoolExpr BoolExpr::binary(Kind kind, BoolExpr lhs, BoolExpr rhs) {
  BoolExpr e;
  e.kind = kind;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

int BoolExpr::max_variable() const {
  int best = kind == Kind::Variable ? variable : -1;
  for (const auto& op : operands) best = std::max(best, op.max_variable());
  return best;
}

bool BoolExpr::evaluate(Word x) const {
  switch (kind) {
    case Kind::Constant: return value;
    case Kind::Variable: return test_bit(x, variable);
    case Kind::Not: return !operands[0].evaluate(x);
    case Kind::And: return operands[0].evaluate(x) && operands[1].evaluate(x);
    case Kind::Or: return operands[0].evaluate(x) || operands[1].evaluate(x);
    case Kind::Xor: return operands[0].evaluate(x) != operands[1].evaluate(x);
  }
  return false;
}

namespace {

// Bit pattern of variable k over the 64 states of block `block`.
std::uint64_t variable_block(int k, std::uint64_t block) {
  static constexpr std::uint64_t kLow[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  if (k < 6) return kLow[k];
  return ((block >> (k - 6)) & 1U) != 0 ? ~std::uint64_t{0} : 0;
}

std::uint64_t evaluate_block(const BoolExpr& e, std::uint64_t block) {
  using K = BoolExpr::Kind;
  switch (e.kind) {
    case K::Constant: return e.value ? ~std::uint64_t{0} : 0;
    case K::Variable: return variable_block(e.variable, block);
    case K::Not: return ~evaluate_block(e.operands[0], block);
    case K::And: return evaluate_block(e.operands[0], block) & evaluate_block(e.operands[1], block);
    case K::Or: return evaluate_block(e.operands[0], block) | evaluate_block(e.operands[1], block);
    case K::Xor: return evaluate_block(e.operands[0], block) ^ evaluate_block(e.operands[1], block);
  }
  return 0;
}

}  // namespace

std::vector<std::uint64_t> BoolExpr::compile(int n) const {
  const std::uint64_t states = state_count(n);
  const std::uint64_t blocks = (states + 63) / 64;
  std::vector<std::uint64_t> table(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) table[b] = evaluate_block(*this, b);
  if (states < 64) table[0] &= (std::uint64_t{1} << states) - 1;
  return table;
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  BoolExpr parse_all() {
    BoolExpr e = parse_or();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  /// Variable occurrences with their columns, for range errors reported later.
  const std::vector<std::pair<int, int>>& variables() const { return variables_; }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + static_cast<int>(pos_) + 1);
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

  BoolExpr parse_or() {
    BoolExpr lhs = parse_and();
    while (accept('|')) lhs = BoolExpr::binary(BoolExpr::Kind::Or, std::move(lhs), parse_and());
    return lhs;
  }

  BoolExpr parse_and() {
    BoolExpr lhs = parse_xor();
    while (accept('&')) lhs = BoolExpr::binary(BoolExpr::Kind::And, std::move(lhs), parse_xor());
    return lhs;
  }

  BoolExpr parse_xor() {
    BoolExpr lhs = parse_unary();
    while (accept('^')) lhs = BoolExpr::binary(BoolExpr::Kind::Xor, std::move(lhs), parse_unary());
    return lhs;
  }

  BoolExpr parse_unary() {
    if (accept('!')) return BoolExpr::negate(parse_unary());
    return parse_primary();
  }

  BoolExpr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an operand, found end of line");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolExpr inner = parse_or();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("constants are 0 or 1");
      }
      return BoolExpr::constant(c == '1');
    }
    if (c == 'x') {
      const int column = offset_ + static_cast<int>(pos_) + 1;
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a variable index after 'x'");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("variable index too large");
      const int index = std::stoi(digits);
      variables_.emplace_back(index, column);
      return BoolExpr::var(index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
  std::vector<std::pair<int, int>> variables_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BoolExpr parse_expression(std::string_view text) {
  ExpressionParser parser(text, 1, 0);
  return parser.parse_all();
}

BnDocument parse_bn_document(std::string_view text, bool force) {
  struct PendingVariable {
    int index;
    int line;
    int column;
  };
  BnDocument doc;
  std::map<int, CoordinateDefinition> defined;
  std::vector<PendingVariable> used;
  int max_index = -1;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto leading = static_cast<int>(line.data() - raw.data());
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected '<name> = ...'", line_no, leading + 1);
    }
    const std::string_view lhs = trim(line.substr(0, eq));
    const std::string_view rhs = line.substr(eq + 1);
    const int rhs_column = leading + static_cast<int>(eq) + 1;

    auto parse_index = [&](std::string_view digits, int column) {
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw ParseError("expected a non-negative integer", line_no, column);
      }
      return std::stoi(std::string(digits));
    };

    if (lhs == "n") {
      if (doc.declared) throw ParseError("duplicate declaration of n", line_no, leading + 1);
      const std::string_view value = trim(rhs);
      const auto value_column = static_cast<int>(value.data() - raw.data()) + 1;
      doc.n = parse_index(value, value_column);
      doc.declared = true;
      check_dimension(doc.n, force);
      if (doc.n < 1) throw ParseError("n must be at least 1", line_no, value_column);
    } else if (lhs.size() >= 2 && lhs.front() == 'f') {
      const int index = parse_index(lhs.substr(1), leading + 2);
      if (defined.contains(index)) {
        throw ParseError("duplicate definition of f" + std::to_string(index) + " (first on line " +
                             std::to_string(defined.at(index).line) + ")",
                         line_no, leading + 1);
      }
      ExpressionParser parser(rhs, line_no, rhs_column);
      CoordinateDefinition def{index, parser.parse_all(), line_no};
      for (auto [var, column] : parser.variables()) {
        used.push_back({var, line_no, column});
        max_index = std::max(max_index, var);
      }
      max_index = std::max(max_index, index);
      defined.emplace(index, std::move(def));
    } else {
      throw ParseError("unknown definition '" + std::string(lhs) + "'", line_no, leading + 1);
    }
    if (end == text.size()) break;
  }

  if (!doc.declared) {
    doc.n = max_index + 1;
    if (doc.n < 1) throw ParseError("no coordinate definitions", line_no, 1);
    check_dimension(doc.n, force);
  }
  for (const auto& v : used) {
    if (v.index >= doc.n) {
      throw ParseError("undeclared variable x" + std::to_string(v.index) + " (n = " +
                           std::to_string(doc.n) + ")",
                       v.line, v.column);
    }
  }
  for (const auto& [index, def] : defined) {
    if (index >= doc.n) {
      throw ParseError("coordinate f" + std::to_string(index) + " outside n = " +
                           std::to_string(doc.n),
                       def.line, 1);
    }
  }
  for (int i = 0; i < doc.n; ++i) {
    if (!defined.contains(i)) {
      throw ParseError("missing definition of f" + std::to_string(i), line_no, 1);
    }
  }
  for (auto& [index, def] : defined) doc.coordinates.push_back(std::move(def));
  return doc;
}

BooleanNetwork parse_network(std::string_view text, bool force) {
  const BnDocument doc = parse_bn_document(text, force);
  std::vector<Word> images(state_count(doc.n), 0);
  for (const auto& def : doc.coordinates) {
    const auto table = def.expr.compile(doc.n);
    for (std::uint64_t x = 0; x < images.size(); ++x) {
      if (((table[x / 64] >> (x % 64)) & 1U) != 0) images[x] |= unit(def.index);
    }
  }
  return BooleanNetwork(doc.n, std::move(images), force);
}

namespace {

// A Boolean function on the variables `vars`; entry p of `table` is the value
// at the assignment whose bit q gives variable vars[q].
struct Restricted {
  std::vector<int> vars;
  std::vector<bool> table;
};

Restricted project_to_support(const Restricted& g) {
  const auto k = static_cast<int>(g.vars.size());
  std::vector<int> keep;
  for (int q = 0; q < k; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t p = 0; p < g.table.size(); ++p) {
      if ((p & bit) == 0 && g.table[p] != g.table[p | bit]) {
        keep.push_back(q);
        break;
      }
    }
  }
  Restricted out;
  for (int q : keep) out.vars.push_back(g.vars[q]);
  out.table.resize(std::size_t{1} << keep.size());
  for (std::size_t r = 0; r < out.table.size(); ++r) {
    std::size_t p = 0;
    for (std::size_t t = 0; t < keep.size(); ++t) {
      if (((r >> t) & 1U) != 0) p |= std::size_t{1} << keep[t];
    }
    out.table[r] = g.table[p];
  }
  return out;
}

std::string literal(int var, bool positive) {
  return (positive ? "x" : "!x") + std::to_string(var);
}

bool is_atomic(const std::string& s) {
  return s.find_first_of("&|^ ") == std::string::npos;
}

std::string wrap(const std::string& s) { return is_atomic(s) ? s : "(" + s + ")"; }

// Product-of-literals form if the ones of g form a single subcube over its support.
std::optional<std::string> as_product(const Restricted& g) {
  std::size_t ones = 0;
  std::size_t where = 0;
  for (std::size_t p = 0; p < g.table.size(); ++p) {
    if (g.table[p]) {
      ++ones;
      where = p;
    }
  }
  // On its support, a product of literals is true at exactly one assignment.
  if (ones != 1) return std::nullopt;
  std::string out;
  for (std::size_t q = 0; q < g.vars.size(); ++q) {
    if (!out.empty()) out += " & ";
    out += literal(g.vars[q], ((where >> q) & 1U) != 0);
  }
  return out;
}

std::string render_restricted(const Restricted& raw) {
  const Restricted g = project_to_support(raw);
  if (g.vars.empty()) return g.table[0] ? "1" : "0";
  if (auto product = as_product(g)) return *product;

  const std::size_t half = g.table.size() / 2;
  Restricted lo;
  Restricted hi;
  lo.vars.assign(g.vars.begin() + 1, g.vars.end());
  hi.vars = lo.vars;
  lo.table.resize(half);
  hi.table.resize(half);
  for (std::size_t r = 0; r < half; ++r) {
    lo.table[r] = g.table[r << 1];
    hi.table[r] = g.table[(r << 1) | 1U];
  }
  const int v = g.vars[0];
  const auto constant_value = [](const Restricted& h) -> std::optional<bool> {
    const bool first = h.table[0];
    for (bool b : h.table) {
      if (b != first) return std::nullopt;
    }
    return first;
  };
  const auto lo_const = constant_value(lo);
  const auto hi_const = constant_value(hi);
  if (lo_const == false) return literal(v, true) + " & " + wrap(render_restricted(hi));
  if (hi_const == false) return literal(v, false) + " & " + wrap(render_restricted(lo));
  if (lo_const == true) return literal(v, false) + " | " + wrap(render_restricted(hi));
  if (hi_const == true) return literal(v, true) + " | " + wrap(render_restricted(lo));
  bool complementary = true;
  for (std::size_t r = 0; r < half && complementary; ++r) complementary = lo.table[r] != hi.table[r];
  if (complementary) return literal(v, true) + " ^ " + wrap(render_restricted(lo));
  return "(" + literal(v, true) + " & " + wrap(render_restricted(hi)) + ") | (" +
         literal(v, false) + " & " + wrap(render_restricted(lo)) + ")";
}

}  // namespace

std::string render_coordinate(const BooleanNetwork& f, int i) {
  Restricted g;
  for (int k = 0; k < f.dimension(); ++k) g.vars.push_back(k);
  g.table = f.truth_table(i);
  return render_restricted(g);
}

std::string render_network(const BooleanNetwork& f) {
  std::ostringstream out;
  out << "n = " << f.dimension() << '\n';
  for (int i = 0; i < f.dimension(); ++i) out << 'f' << i << " = " << render_coordinate(f, i) << '\n';
  return out.str();
}

}  // namespace bnscope
