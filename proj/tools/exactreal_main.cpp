// Command-line front end: evaluate an expression to N verified decimals, or
// run the benchmark problem set.
//
// Exit codes: 0 ok, 2 parse error, 3 domain error, 4 witness search failure,
// 5 resource limit, 1 anything else.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exactreal/errors.hpp"
#include "exactreal/eval.hpp"

namespace {

exactreal::Backend parse_backend(const std::string& name) {
  if (name == "dyadic") return exactreal::Backend::Dyadic;
  if (name == "rational") return exactreal::Backend::Rational;
  throw CLI::ValidationError("--backend", "must be 'dyadic' or 'rational'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact real arithmetic calculator"};
  app.require_subcommand(1);

  std::string expression;
  unsigned digits = 0;
  std::string backend_str = "dyadic";
  unsigned nmax = 0;

  CLI::App* calc = app.add_subcommand("calc", "evaluate an expression");
  calc->add_option("expression", expression, "arithmetic expression")->required();
  calc->add_option("--digits", digits, "number of decimal places")->required();
  calc->add_option("--backend", backend_str, "dyadic|rational");
  calc->add_option("--nmax", nmax, "witness search bound for division");

  std::vector<std::string> problem_ids;
  std::string csv_path;
  bool parallel = false;

  CLI::App* bench = app.add_subcommand("bench", "run the benchmark problems");
  bench->add_option("--problems", problem_ids, "problem ids (default: all)")
      ->delimiter(',');
  bench->add_option("--digits", digits, "number of decimal places")->required();
  bench->add_option("--csv", csv_path, "write results as CSV to this path");
  bench->add_option("--backend", backend_str, "dyadic|rational");
  bench->add_flag("--parallel", parallel, "run problems on separate threads");

  CLI11_PARSE(app, argc, argv);

  try {
    const exactreal::Backend backend = parse_backend(backend_str);
    if (calc->parsed()) {
      std::cout << exactreal::evaluate(expression,
                                       {digits, backend, nmax})
                << "\n";
      return 0;
    }
    if (problem_ids.empty()) {
      for (const auto& p : exactreal::benchmark_problems())
        problem_ids.push_back(p.id);
    }
    const auto results =
        exactreal::run_benchmarks(problem_ids, digits, backend, parallel);
    bool all_ok = true;
    for (const auto& r : results) {
      std::cout << r.problem << "  " << r.expression << "  digits=" << r.digits
                << "  " << r.seconds << "s  [" << r.backend << "]  "
                << r.prefix32 << "\n";
      all_ok = all_ok && r.ok;
    }
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw exactreal::error("cannot open CSV path " + csv_path);
      out << exactreal::to_csv(results);
    }
    return all_ok ? 0 : 1;
  } catch (const exactreal::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const exactreal::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const exactreal::witness_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const exactreal::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
