#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace exactreal {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed expression text. Carries the byte offset of the failure and the
// set of tokens that would have been accepted there.
class parse_error : public error {
 public:
  parse_error(std::size_t offset, std::vector<std::string> expected,
              const std::string& detail)
      : error(format(offset, expected, detail)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(std::size_t offset,
                            const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string msg = "syntax error at byte " + std::to_string(offset);
    if (!detail.empty()) msg += ": " + detail;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
      msg += ")";
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Input outside a function's domain: division by zero at the carrier level,
// logarithm of a non-positive value, square root of a provably negative real.
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// A semidecidable search gave up (no apartness witness within the bound), or
// a caller-supplied witness was refuted by direct evaluation.
class witness_error : public error {
 public:
  explicit witness_error(const std::string& what) : error(what) {}
};

// A configured resource limit was hit: mantissa size cap, exponent range,
// series term-count cap.
class resource_error : public error {
 public:
  explicit resource_error(const std::string& what) : error(what) {}
};

}  // namespace exactreal
