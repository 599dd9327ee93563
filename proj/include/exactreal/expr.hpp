#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "exactreal/bigint.hpp"
#include "exactreal/errors.hpp"

namespace exactreal {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class FnName { Exp, Sin, Cos, Atan, Sqrt };
enum class ConstName { Pi, E };

struct IntLit {
  BigInt value;
};
// digits * 10^-scale, the exact value of a decimal literal.
struct DecLit {
  BigInt digits;
  unsigned scale;
};
struct RatLit {
  BigInt num;
  BigInt den;  // > 0
};
struct NegNode {
  ExprPtr arg;
};
struct AddNode {
  ExprPtr lhs, rhs;
};
struct SubNode {
  ExprPtr lhs, rhs;
};
struct MulNode {
  ExprPtr lhs, rhs;
};
struct DivNode {
  ExprPtr lhs, rhs;
};
struct PowNode {
  ExprPtr base;
  unsigned long exponent;
};
struct CallNode {
  FnName fn;
  ExprPtr arg;
};
struct ConstNode {
  ConstName name;
};

struct Expr {
  std::variant<IntLit, DecLit, RatLit, NegNode, AddNode, SubNode, MulNode,
               DivNode, PowNode, CallNode, ConstNode>
      node;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'? atom ('^' uint)?      -- '^' binds tighter than the minus
//   atom   := number | name | name '(' expr ')' | '(' expr ')'
// Numbers are integers, exact decimals, or p/q rationals (two adjacent
// integer literals joined by '/' with q != 0 fold into a rational literal;
// a zero denominator stays a division and fails at evaluation, not here).
// Whitespace is ignored; binary operators associate left.
//
// Throws parse_error with byte offset and expected-token set.
ExprPtr parse(std::string_view text);

// Canonical text; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& e);

// Structural equality.
bool equal(const Expr& a, const Expr& b);

const char* fn_name(FnName f);

}  // namespace exactreal
