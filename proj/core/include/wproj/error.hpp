#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wproj {

// Machine-readable error category. The CLI maps these onto exit codes and
// prints code_name() on stderr.
enum class ErrorCode {
  kDomain,          // mathematically invalid input (zero where nonzero required, ...)
  kPrecondition,    // input outside an operation's stated precondition
  kInfiniteHeight,  // point lies on the support of the divisor / subscheme
  kParse,           // malformed text (points, weights, polynomials)
  kConfig,          // inconsistent configuration
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::kPrecondition, what) {}
};

class InfiniteHeightError : public Error {
 public:
  explicit InfiniteHeightError(const std::string& what)
      : Error(ErrorCode::kInfiniteHeight, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::kConfig, what) {}
};

}  // namespace wproj
