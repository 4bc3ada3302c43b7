#ifndef ODESEP_EXPR_HPP
#define ODESEP_EXPR_HPP

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace odesep {

using ParamMap = std::map<std::string, double>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class UnaryFn { Sin, Cos, Exp, Log, Sqrt, Abs };

// Immutable arithmetic expression tree. Nodes are shared, so copies are
// cheap and an Expr can be handed across threads freely.
class Expr {
 public:
  enum class Kind { Constant, Symbol, Negate, Binary, Call };

  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double value);
  static Expr symbol(std::string name);
  static Expr negate(Expr child);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(UnaryFn fn, Expr arg);

  Kind kind() const;
  double constant_value() const;        // Kind::Constant
  const std::string& symbol_name() const;  // Kind::Symbol
  BinaryOp op() const;                  // Kind::Binary
  UnaryFn fn() const;                   // Kind::Call
  const Expr& child(int i) const;       // Negate/Call: 0; Binary: 0, 1

  // Tree-walking evaluation. Throws EvalError on unbound symbols and on
  // domain violations (log of non-positive, sqrt of negative, 0^negative,
  // negative base with non-integer exponent, NaN results).
  double eval(const ParamMap& bindings) const;

  bool references(std::string_view name) const;
  void collect_symbols(std::set<std::string>& out) const;
  bool structurally_equal(const Expr& other) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
  friend class CompiledExpr;
};

// Parses infix syntax with the usual precedence (^ above unary minus above
// * and / above + and -), '^' right-associative, whitespace ignored.
// Recognized functions: sin, cos, exp, log, sqrt, abs. The name `pi` is a
// reserved constant and is folded at parse time.
Expr parse_expression(std::string_view source);

const char* binary_op_token(BinaryOp op);
const char* unary_fn_name(UnaryFn fn);

// An Expr flattened to a postfix program with symbol references resolved
// to slot indices, for tight evaluation loops. The slot layout is fixed at
// compile time; evaluate against any value span of that length.
class CompiledExpr {
 public:
  CompiledExpr() = default;
  CompiledExpr(const Expr& expr, const std::vector<std::string>& slots);

  double eval(std::span<const double> values) const;
  bool empty() const { return program_.empty(); }

 private:
  enum class Op : unsigned char {
    PushConst, PushSlot, Neg, Add, Sub, Mul, Div, Pow,
    Sin, Cos, Exp, Log, Sqrt, Abs
  };
  struct Instr {
    Op op;
    int slot = 0;
    double value = 0.0;
  };
  std::vector<Instr> program_;
  std::vector<std::string> where_;  // printed subexpression per instruction
  int max_depth_ = 0;
};

}  // namespace odesep

#endif  // ODESEP_EXPR_HPP
