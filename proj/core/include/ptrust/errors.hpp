#pragma once

#include <stdexcept>
#include <string>

namespace ptrust {

// Every recoverable failure in the calculus maps to one of these codes.
// CLI diagnostics print the code name, so the names are part of the
// user-facing contract.
enum class Errc {
  InvalidAgentName,
  InvalidTypeLabel,
  MixedEndpoints,
  ConditionalInBundle,
  EmptyBundle,
  NoMatchingAssurance,
  NoEvidence,
  EmptyEnsemble,
  WeightsNotConvex,
  NoDonorEvidence,
  OutOfRange,
  AllWeightsZero,
  IncompatibleOr,
  WrongArity,
  DuplicateEdge,
  UnknownAgent,
  OracleSizeExceeded,
  EmptyUserSet,
  SelfSigning,
  EmptyValuations,
  InvalidPath,
  PreconditionViolated,
  SyntaxError,
  UndeclaredAgent,
  DuplicateAgent,
  IoError,
};

const char* to_string(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, std::string message);
  // Parse-stage errors carry the 1-based input line.
  DomainError(Errc code, int line, std::string message);

  Errc code() const { return code_; }
  int line() const { return line_; }  // 0 when not tied to an input line

 private:
  Errc code_;
  int line_ = 0;
};

}  // namespace ptrust
