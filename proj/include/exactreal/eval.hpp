#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exactreal/expr.hpp"

namespace exactreal {

enum class Backend { Dyadic, Rational };

const char* backend_name(Backend b);

struct EvalOptions {
  unsigned digits = 10;
  Backend backend = Backend::Dyadic;
  // Apartness search bound for '/'; 0 means the default 4*digits + 64.
  unsigned nmax = 0;
};

// Evaluate to a decimal string within 10^-digits of the expression's value.
// Deterministic for a fixed (expression, digits, backend).
std::string evaluate(const Expr& e, const EvalOptions& opts);
std::string evaluate(std::string_view text, const EvalOptions& opts);

struct BenchProblem {
  const char* id;
  const char* expression;
};

// The reproducible subset of the "Many Digits" problems.
const std::vector<BenchProblem>& benchmark_problems();

struct BenchResult {
  std::string problem;
  std::string expression;
  unsigned digits = 0;
  double seconds = 0.0;
  std::string backend;
  std::string prefix32;  // first 32 characters of the output, or "error:..."
  bool ok = true;
};

// Run the selected problems; a failing problem is recorded, not fatal.
std::vector<BenchResult> run_benchmarks(const std::vector<std::string>& ids,
                                        unsigned digits, Backend backend,
                                        bool parallel);

// Columns: problem,expression,digits,seconds,backend,prefix32
std::string to_csv(const std::vector<BenchResult>& results);

}  // namespace exactreal
