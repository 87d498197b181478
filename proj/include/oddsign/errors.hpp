#ifndef ODDSIGN_ERRORS_HPP
#define ODDSIGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oddsign {

// Process exit codes; see README for the matrix.
enum class ExitCode : int {
  ok = 0,
  non_member = 1,
  capped = 2,
  usage = 64,
  data = 65,
  no_input = 66,
  software = 70,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ExitCode::usage, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ExitCode::data, what) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(ExitCode::capped, what) {}
};

// A lemma-level guarantee did not hold on the instance. Carries enough
// context for the caller to attach a trace.
class AssertionFailure : public Error {
 public:
  AssertionFailure(const std::string& what, std::string detail = {})
      : Error(ExitCode::software, what), detail_(std::move(detail)) {}
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
};

}  // namespace oddsign

#endif  // ODDSIGN_ERRORS_HPP
