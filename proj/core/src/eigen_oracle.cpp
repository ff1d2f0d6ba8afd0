#include "ptrust/eigen_oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <string>

#include "ptrust/errors.hpp"

namespace ptrust {

OracleEigenPair dense_eigen_oracle(const TrustMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n > kOracleMaxSize)
    throw DomainError(Errc::OracleSizeExceeded,
                      "oracle handles at most " + std::to_string(kOracleMaxSize) +
                          " agents, got " + std::to_string(n));
  if (n == 0) return OracleEigenPair{{}, 0.0};
  if (matrix.all_zero()) return OracleEigenPair{std::vector<double>(n, 0.0), 0.0};

  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = matrix.at(i, j);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw DomainError(Errc::PreconditionViolated, "dense eigensolver failed to converge");

  // The spectral radius of a non-negative matrix is itself an eigenvalue
  // (real and non-negative); among modulus ties prefer the real one.
  const auto& values = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < values.size(); ++k) {
    const double mod_k = std::abs(values[k]);
    const double mod_best = std::abs(values[best]);
    if (mod_k > mod_best + 1e-14 ||
        (mod_k > mod_best - 1e-14 && values[k].real() > values[best].real() + 1e-14))
      best = k;
  }

  Eigen::VectorXcd column = solver.eigenvectors().col(best);
  Eigen::Index top = 0;
  for (Eigen::Index k = 1; k < column.size(); ++k)
    if (std::abs(column[k]) > std::abs(column[top])) top = k;
  column /= column[top];  // rotates the arbitrary phase out and sets max to 1

  OracleEigenPair result;
  result.eigenvalue = values[best].real();
  result.vector.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.vector[i] = column[static_cast<Eigen::Index>(i)].real();
  return result;
}

}  // namespace ptrust
