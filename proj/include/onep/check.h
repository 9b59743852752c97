#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace onep {

/// Error categories surfaced to callers; the CLI maps these to exit codes.
enum class ErrorCode {
  InvalidInput,       // bad graph / bad arguments / precondition violation
  MalformedDrawing,   // drawing fails structural invariants
  ResourceExhausted,  // search or enumeration budget exceeded
  TooLarge,           // input beyond a brute-force guard
  Unsupported,        // type set outside the theorem-backed reductions
  Io,                 // file errors
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void checkFailed(const char* expr, const char* file, int line) {
  std::fprintf(stderr, "CHECK failed: %s at %s:%d\n", expr, file, line);
  std::abort();
}

}  // namespace onep

// Internal invariant check; failures are bugs, not user errors.
#define ONEP_CHECK(cond)                                   \
  do {                                                     \
    if (!(cond)) ::onep::checkFailed(#cond, __FILE__, __LINE__); \
  } while (0)
