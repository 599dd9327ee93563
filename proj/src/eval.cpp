#include "exactreal/eval.hpp"

#include <bit>
#include <chrono>
#include <sstream>
#include <thread>

#include "exactreal/completion.hpp"
#include "exactreal/functions.hpp"
#include "exactreal/order.hpp"
#include "exactreal/roots.hpp"

namespace exactreal {

namespace {

// Exact rational value of a literal power base, when there is one. Literal
// powers are folded on the carrier so e.g. 10^50 reaches cos() exactly.
bool literal_value(const Expr& e, Rational& out) {
  if (const auto* i = std::get_if<IntLit>(&e.node)) {
    out = Rational(i->value);
    return true;
  }
  if (const auto* d = std::get_if<DecLit>(&e.node)) {
    out = Rational(d->digits, pow10(d->scale));
    out.canonicalize();
    return true;
  }
  if (const auto* r = std::get_if<RatLit>(&e.node)) {
    out = Rational(r->num, r->den);
    out.canonicalize();
    return true;
  }
  return false;
}

template <class AQ>
Real<AQ> pow_real(const Real<AQ>& base, unsigned long n) {
  if (n == 0) return constant(base.ops(), aq_one(base.ops()));
  // Square-and-multiply with a compress after every product, so repeated
  // squaring cannot pile up mantissa bits.
  Real<AQ> acc = base;
  unsigned long mask = std::bit_floor(n);
  for (mask >>= 1; mask != 0; mask >>= 1) {
    acc = compress(acc * acc);
    if (n & mask) acc = compress(acc * base);
  }
  return acc;
}

template <class AQ>
Real<AQ> build(const AqOps<AQ>& o, const Expr& e, unsigned nmax,
               ReductionConfig cfg) {
  return std::visit(
      [&](const auto& n) -> Real<AQ> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return constant(o, o.inject_int(n.value));
        } else if constexpr (std::is_same_v<T, DecLit>) {
          Rational q(n.digits, pow10(n.scale));
          q.canonicalize();
          return from_rational(o, std::move(q));
        } else if constexpr (std::is_same_v<T, RatLit>) {
          Rational q(n.num, n.den);
          q.canonicalize();
          return from_rational(o, std::move(q));
        } else if constexpr (std::is_same_v<T, NegNode>) {
          return -build(o, *n.arg, nmax, cfg);
        } else if constexpr (std::is_same_v<T, AddNode>) {
          return build(o, *n.lhs, nmax, cfg) + build(o, *n.rhs, nmax, cfg);
        } else if constexpr (std::is_same_v<T, SubNode>) {
          return build(o, *n.lhs, nmax, cfg) - build(o, *n.rhs, nmax, cfg);
        } else if constexpr (std::is_same_v<T, MulNode>) {
          return build(o, *n.lhs, nmax, cfg) * build(o, *n.rhs, nmax, cfg);
        } else if constexpr (std::is_same_v<T, DivNode>) {
          return divide(build(o, *n.lhs, nmax, cfg),
                        build(o, *n.rhs, nmax, cfg), nmax);
        } else if constexpr (std::is_same_v<T, PowNode>) {
          Rational lit;
          if (literal_value(*n.base, lit)) {
            Rational v(pow_ui(lit.get_num(), n.exponent),
                       pow_ui(lit.get_den(), n.exponent));
            v.canonicalize();
            if (v.get_den() == 1) return constant(o, o.inject_int(v.get_num()));
            return from_rational(o, std::move(v));
          }
          return pow_real(build(o, *n.base, nmax, cfg), n.exponent);
        } else if constexpr (std::is_same_v<T, CallNode>) {
          Real<AQ> arg = build(o, *n.arg, nmax, cfg);
          switch (n.fn) {
            case FnName::Exp: return exp(arg, cfg);
            case FnName::Sin: return sin(arg, cfg);
            case FnName::Cos: return cos(arg, cfg);
            case FnName::Atan: return atan(arg);
            case FnName::Sqrt: return sqrt(arg);
          }
          throw error("unreachable");
        } else {
          static_assert(std::is_same_v<T, ConstNode>);
          if (n.name == ConstName::Pi) return pi_real(o);
          return exp(constant(o, aq_one(o)), cfg);  // e is exp(1)
        }
      },
      e.node);
}

template <class AQ>
std::string evaluate_on(const AqOps<AQ>& o, const Expr& e,
                        const EvalOptions& opts) {
  const unsigned nmax = opts.nmax != 0 ? opts.nmax : 4 * opts.digits + 64;
  const ReductionConfig cfg{opts.digits < 1000 ? 50u : 75u};
  return to_decimal(build(o, e, nmax, cfg), opts.digits);
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::Dyadic ? "dyadic" : "rational";
}

std::string evaluate(const Expr& e, const EvalOptions& opts) {
  if (opts.digits < 1) throw domain_error("digits must be at least 1");
  return opts.backend == Backend::Dyadic
             ? evaluate_on(dyadic_ops(), e, opts)
             : evaluate_on(exact_rational_ops(), e, opts);
}

std::string evaluate(std::string_view text, const EvalOptions& opts) {
  return evaluate(*parse(text), opts);
}

const std::vector<BenchProblem>& benchmark_problems() {
  static const std::vector<BenchProblem> problems = {
      {"P01", "sin(sin(sin(1)))"}, {"P02", "sqrt(pi)"},
      {"P03", "sin(e)"},           {"P04", "exp(pi * sqrt(163))"},
      {"P05", "exp(exp(e))"},      {"P07", "exp(1000)"},
      {"P08", "cos(10^50)"},
  };
  return problems;
}

namespace {

BenchResult run_one(const BenchProblem& p, unsigned digits, Backend backend) {
  BenchResult r;
  r.problem = p.id;
  r.expression = p.expression;
  r.digits = digits;
  r.backend = backend_name(backend);
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string out =
        evaluate(p.expression, EvalOptions{digits, backend, 0});
    r.prefix32 = out.substr(0, 32);
  } catch (const error& err) {
    r.ok = false;
    r.prefix32 = std::string("error:") + err.what();
    for (char& c : r.prefix32)
      if (c == ',') c = ';';
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

}  // namespace

std::vector<BenchResult> run_benchmarks(const std::vector<std::string>& ids,
                                        unsigned digits, Backend backend,
                                        bool parallel) {
  std::vector<const BenchProblem*> selected;
  for (const std::string& id : ids) {
    const BenchProblem* found = nullptr;
    for (const BenchProblem& p : benchmark_problems()) {
      if (id == p.id) found = &p;
    }
    if (!found) throw domain_error("unknown benchmark problem '" + id + "'");
    selected.push_back(found);
  }
  std::vector<BenchResult> results(selected.size());
  if (parallel) {
    std::vector<std::thread> workers;
    workers.reserve(selected.size());
    for (std::size_t i = 0; i < selected.size(); ++i) {
      workers.emplace_back([&results, &selected, i, digits, backend] {
        results[i] = run_one(*selected[i], digits, backend);
      });
    }
    for (std::thread& t : workers) t.join();
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i)
      results[i] = run_one(*selected[i], digits, backend);
  }
  return results;
}

std::string to_csv(const std::vector<BenchResult>& results) {
  std::ostringstream out;
  out << "problem,expression,digits,seconds,backend,prefix32\n";
  for (const BenchResult& r : results) {
    out << r.problem << "," << r.expression << "," << r.digits << ","
        << r.seconds << "," << r.backend << "," << r.prefix32 << "\n";
  }
  return out.str();
}

}  // namespace exactreal
