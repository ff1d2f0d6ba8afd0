#pragma once

#include <vector>

#include "ptrust/community.hpp"

namespace ptrust {

struct OracleEigenPair {
  std::vector<double> vector;  // max-normalized, like principal_eigenvector
  double eigenvalue = 0.0;
};

inline constexpr std::size_t kOracleMaxSize = 12;

// Independent reference for principal_eigenvector: a dense full-spectrum
// solve (Schur-based, no power iteration anywhere in the route), keeping the
// eigenvalue of largest modulus. Intended for tests and --check-oracle;
// OracleSizeExceeded beyond 12 agents.
OracleEigenPair dense_eigen_oracle(const TrustMatrix& matrix);

}  // namespace ptrust
