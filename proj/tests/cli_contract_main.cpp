// Scripted checks of the installed CLI: exit codes per error class, output
// format, CSV columns, and the mantissa-cap environment override. Takes the
// path to the binary as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok" : "FAIL") << "  " << what << "\n";
  if (!ok) ++failures;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& cmd) {
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, ""};
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_contract <path-to-exactreal>\n";
    return 2;
  }
  const std::string cli = argv[1];

  RunResult r = run(cli + " calc \"pi\" --digits 20");
  expect(r.exit_code == 0 && r.output == "3.14159265358979323846\n",
         "calc pi --digits 20 prints the digits and exits 0");

  r = run(cli + " calc \"1 + * 2\" --digits 5");
  expect(r.exit_code == 2, "syntax errors exit 2");

  r = run(cli + " calc \"sqrt(0 - 1)\" --digits 5");
  expect(r.exit_code == 3, "provably negative square roots exit 3");

  r = run(cli + " calc \"1/0\" --digits 5");
  expect(r.exit_code == 4, "witness search failure exits 4");

  r = run("EXACTREAL_MANT_CAP=256 " + cli + " calc \"exp(1)\" --digits 100");
  expect(r.exit_code == 5, "mantissa cap overflow exits 5");

  r = run(cli + " calc \"exp(\" --digits 5");
  expect(r.exit_code == 2, "unclosed call exits 2");

  const std::string csv_path = "/tmp/exactreal_bench_test.csv";
  std::remove(csv_path.c_str());
  r = run(cli + " bench --problems P01,P03 --digits 30 --csv " + csv_path);
  expect(r.exit_code == 0, "bench exits 0");
  FILE* f = std::fopen(csv_path.c_str(), "r");
  expect(f != nullptr, "bench writes the CSV file");
  if (f) {
    std::array<char, 512> line{};
    std::string header = std::fgets(line.data(), line.size(), f) ? line.data() : "";
    expect(header == "problem,expression,digits,seconds,backend,prefix32\n",
           "CSV header has the exact column set");
    std::string row = std::fgets(line.data(), line.size(), f) ? line.data() : "";
    expect(row.rfind("P01,sin(sin(sin(1))),30,", 0) == 0,
           "CSV rows carry problem, expression and digits");
    std::fclose(f);
  }

  r = run(cli + " bench --problems P01 --digits 30 --parallel");
  expect(r.exit_code == 0 && r.output.find("0.67843") != std::string::npos,
         "parallel bench produces the same digits");

  r = run(cli + " calc \"cos(10^50)\" --digits 40 --backend rational --nmax 80");
  expect(r.exit_code == 0 && r.output.substr(0, 6) == "-0.613",
         "backend and nmax options are accepted");

  if (failures) {
    std::cout << failures << " CLI contract check(s) failed\n";
    return 1;
  }
  std::cout << "CLI contract ok\n";
  return 0;
}
