#include "exactreal/expr.hpp"

#include <cctype>
#include <optional>

namespace exactreal {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

template <class T>
ExprPtr make(T node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error(pos_, {"operator", "end of input"}, "trailing input");
    return e;
  }

 private:
  // Subterms are parsed into locals before the node aggregates are built;
  // gcc 11 fails to destroy earlier aggregate members when a later
  // initializer throws, which would leak nodes on error paths.
  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        ExprPtr rhs = term();
        lhs = make(AddNode{lhs, std::move(rhs)});
      } else if (eat('-')) {
        ExprPtr rhs = term();
        lhs = make(SubNode{lhs, std::move(rhs)});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        ExprPtr rhs = factor();
        lhs = make(MulNode{lhs, std::move(rhs)});
      } else if (eat('/')) {
        ExprPtr rhs = factor();
        // Two plain integer literals around '/' are a rational literal,
        // unless the denominator is zero.
        const auto* ln = std::get_if<IntLit>(&lhs->node);
        const auto* rn = std::get_if<IntLit>(&rhs->node);
        if (ln && rn && sgn(rn->value) != 0) {
          lhs = make(RatLit{ln->value, rn->value});
        } else {
          lhs = make(DivNode{lhs, rhs});
        }
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    skip_ws();
    const bool neg = eat('-');
    ExprPtr e = atom();
    skip_ws();
    if (eat('^')) {
      const unsigned long n = parse_uint();
      e = make(PowNode{e, n});
    }
    return neg ? make(NegNode{e}) : e;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw parse_error(pos_, {"number", "name", "'('"}, "unexpected end of input");
    const char c = text_[pos_];
    if (eat('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (is_digit(c)) return number();
    if (is_name_start(c)) return name();
    throw parse_error(pos_, {"number", "name", "'('"},
                      std::string("unexpected '") + c + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    BigInt intpart(std::string(text_.substr(start, pos_ - start)), 10);
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t fstart = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      if (pos_ == fstart)
        throw parse_error(pos_, {"digit"}, "missing fraction digits");
      const std::string frac(text_.substr(fstart, pos_ - fstart));
      BigInt digits = intpart * pow10(frac.size()) + BigInt(frac, 10);
      return make(DecLit{std::move(digits), static_cast<unsigned>(frac.size())});
    }
    return make(IntLit{std::move(intpart)});
  }

  ExprPtr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    const std::string id(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::optional<FnName> fn;
      if (id == "exp") fn = FnName::Exp;
      else if (id == "sin") fn = FnName::Sin;
      else if (id == "cos") fn = FnName::Cos;
      else if (id == "atan") fn = FnName::Atan;
      else if (id == "sqrt") fn = FnName::Sqrt;
      if (!fn)
        throw parse_error(start, {"exp", "sin", "cos", "atan", "sqrt"},
                          "unknown function '" + id + "'");
      ++pos_;  // '('
      ExprPtr arg = expr();
      expect(')');
      return make(CallNode{*fn, arg});
    }
    if (id == "pi") return make(ConstNode{ConstName::Pi});
    if (id == "e") return make(ConstNode{ConstName::E});
    throw parse_error(start, {"pi", "e", "function call"},
                      "unknown name '" + id + "'");
  }

  unsigned long parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ == start)
      throw parse_error(start, {"unsigned integer"}, "exponent must be a literal");
    BigInt v(std::string(text_.substr(start, pos_ - start)), 10);
    if (!v.fits_ulong_p())
      throw parse_error(start, {"unsigned integer"}, "exponent too large");
    return v.get_ui();
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw parse_error(pos_, {std::string("'") + c + "'"}, "");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

enum Prec { kAdd = 1, kMul = 2, kUnary = 3, kAtom = 4 };

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, AddNode> || std::is_same_v<T, SubNode>)
          return kAdd;
        else if constexpr (std::is_same_v<T, MulNode> ||
                           std::is_same_v<T, DivNode> ||
                           std::is_same_v<T, RatLit>)
          return kMul;
        else if constexpr (std::is_same_v<T, NegNode>)
          return kUnary;
        else if constexpr (std::is_same_v<T, PowNode>)
          return kUnary;
        else if constexpr (std::is_same_v<T, IntLit>)
          return sgn(n.value) >= 0 ? kAtom : kUnary;
        else if constexpr (std::is_same_v<T, DecLit>)
          return sgn(n.digits) >= 0 ? kAtom : kUnary;
        else
          return kAtom;
      },
      e.node);
}

std::string wrap(const Expr& e, int min_prec) {
  const std::string s = to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

const char* fn_name(FnName f) {
  switch (f) {
    case FnName::Exp: return "exp";
    case FnName::Sin: return "sin";
    case FnName::Cos: return "cos";
    case FnName::Atan: return "atan";
    case FnName::Sqrt: return "sqrt";
  }
  return "?";
}

std::string to_string(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return n.value.get_str();
        } else if constexpr (std::is_same_v<T, DecLit>) {
          const bool neg = sgn(n.digits) < 0;
          std::string s = BigInt(abs(n.digits)).get_str();
          if (s.size() <= n.scale) s.insert(0, n.scale + 1 - s.size(), '0');
          s.insert(s.size() - n.scale, ".");
          return (neg ? "-" : "") + s;
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return n.num.get_str() + "/" + n.den.get_str();
        } else if constexpr (std::is_same_v<T, NegNode>) {
          return "-" + wrap(*n.arg, kUnary);
        } else if constexpr (std::is_same_v<T, AddNode>) {
          return wrap(*n.lhs, kAdd) + " + " + wrap(*n.rhs, kAdd + 1);
        } else if constexpr (std::is_same_v<T, SubNode>) {
          return wrap(*n.lhs, kAdd) + " - " + wrap(*n.rhs, kAdd + 1);
        } else if constexpr (std::is_same_v<T, MulNode>) {
          return wrap(*n.lhs, kMul) + " * " + wrap(*n.rhs, kMul + 1);
        } else if constexpr (std::is_same_v<T, DivNode>) {
          return wrap(*n.lhs, kMul) + " / " + wrap(*n.rhs, kMul + 1);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          return wrap(*n.base, kAtom) + "^" + std::to_string(n.exponent);
        } else if constexpr (std::is_same_v<T, CallNode>) {
          return std::string(fn_name(n.fn)) + "(" + to_string(*n.arg) + ")";
        } else {
          return n.name == ConstName::Pi ? "pi" : "e";
        }
      },
      e.node);
}

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        const auto& m = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit>) {
          return n.value == m.value;
        } else if constexpr (std::is_same_v<T, DecLit>) {
          return n.scale == m.scale && n.digits == m.digits;
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return n.num == m.num && n.den == m.den;
        } else if constexpr (std::is_same_v<T, NegNode>) {
          return equal(*n.arg, *m.arg);
        } else if constexpr (std::is_same_v<T, AddNode> ||
                             std::is_same_v<T, SubNode> ||
                             std::is_same_v<T, MulNode> ||
                             std::is_same_v<T, DivNode>) {
          return equal(*n.lhs, *m.lhs) && equal(*n.rhs, *m.rhs);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          return n.exponent == m.exponent && equal(*n.base, *m.base);
        } else if constexpr (std::is_same_v<T, CallNode>) {
          return n.fn == m.fn && equal(*n.arg, *m.arg);
        } else {
          return n.name == m.name;
        }
      },
      a.node);
}

}  // namespace exactreal
