#include "ptrust/errors.hpp"

namespace ptrust {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::InvalidAgentName: return "InvalidAgentName";
    case Errc::InvalidTypeLabel: return "InvalidTypeLabel";
    case Errc::MixedEndpoints: return "MixedEndpoints";
    case Errc::ConditionalInBundle: return "ConditionalInBundle";
    case Errc::EmptyBundle: return "EmptyBundle";
    case Errc::NoMatchingAssurance: return "NoMatchingAssurance";
    case Errc::NoEvidence: return "NoEvidence";
    case Errc::EmptyEnsemble: return "EmptyEnsemble";
    case Errc::WeightsNotConvex: return "WeightsNotConvex";
    case Errc::NoDonorEvidence: return "NoDonorEvidence";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::AllWeightsZero: return "AllWeightsZero";
    case Errc::IncompatibleOr: return "IncompatibleOr";
    case Errc::WrongArity: return "WrongArity";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownAgent: return "UnknownAgent";
    case Errc::OracleSizeExceeded: return "OracleSizeExceeded";
    case Errc::EmptyUserSet: return "EmptyUserSet";
    case Errc::SelfSigning: return "SelfSigning";
    case Errc::EmptyValuations: return "EmptyValuations";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UndeclaredAgent: return "UndeclaredAgent";
    case Errc::DuplicateAgent: return "DuplicateAgent";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

DomainError::DomainError(Errc code, std::string message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

DomainError::DomainError(Errc code, int line, std::string message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      line_(line) {}

}  // namespace ptrust
