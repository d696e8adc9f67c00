#pragma once

#include <stdexcept>
#include <string>

namespace sndp {

// Schema or value violations in instance files and CLI input. The
// message carries a field path such as "edges[0].cost". CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Requirements that the full ground structure cannot meet, detected by
// flow checks. CLI exit code 1.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration limits (set sizes, variable counts) exceeded.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// A certified fully-fractional vertex with max coordinate < 1/2. This can
// only come from an implementation bug, so it aborts the run; the dump
// holds the instance, solution and basis for post-mortem.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::string dump_json)
      : std::runtime_error(what), dump(std::move(dump_json)) {}
  std::string dump;
};

}  // namespace sndp
