#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ptrust/agent.hpp"
#include "ptrust/promise.hpp"
#include "ptrust/trust.hpp"

namespace ptrust {

// Square matrix of typed trust valuations over an agent roster. Entry
// (A, B) is A's trust in B for promises of this type: rows are trusters,
// columns trustees. Entries stay in [0,1]; absent relations are 0.
class TrustMatrix {
 public:
  TrustMatrix(std::vector<AgentId> roster, PromiseType type);

  std::size_t size() const { return roster_.size(); }
  double at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, double value);

  const std::vector<AgentId>& roster() const { return roster_; }
  const PromiseType& type() const { return type_; }
  std::optional<std::size_t> index_of(const AgentId& agent) const;

  bool all_zero() const;
  double max_row_sum() const;

 private:
  std::vector<AgentId> roster_;
  PromiseType type_;
  std::vector<double> entries_;  // row-major
};

// Entry (truster, trustee) = edge value, for edges whose body carries the
// requested type; other types are ignored. DuplicateEdge when two kept
// edges share (truster, trustee); UnknownAgent when an edge endpoint is
// missing from the roster.
TrustMatrix build_matrix(std::span<const TrustEdge> edges, std::vector<AgentId> roster,
                         const PromiseType& type);

// Deletes the agent's row and column. UnknownAgent when absent.
TrustMatrix remove_agent(const TrustMatrix& matrix, const AgentId& agent);

TrustMatrix transpose(const TrustMatrix& matrix);

struct EigenResult {
  std::vector<double> vector;  // normalized so the largest component is 1
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool degenerate = false;  // top-modulus tie suspected; vector unreliable
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 10000;

// Principal eigenpair by power iteration from the uniform positive start
// vector, normalizing each step by the maximum component. Iteration runs on
// M + sigma*I (sigma = half the largest row sum): the shift leaves every
// eigenvector untouched but breaks the modulus ties of imprimitive matrices
// (periodic cores otherwise oscillate forever), and sigma is subtracted back
// out of the reported eigenvalue. Converged when the max-norm step change
// and its geometric tail estimate both drop below tol. A zero matrix yields
// the zero vector with eigenvalue 0; an acyclic (nilpotent) matrix yields an
// exact nullspace vector with eigenvalue 0; zero rows/columns zero out the
// matching components. After max_iter the best iterate is returned with
// converged = false.
EigenResult principal_eigenvector(const TrustMatrix& matrix,
                                  double tol = kDefaultTolerance,
                                  std::size_t max_iter = kDefaultMaxIterations);

// Who extends well-placed trust (S, the right eigenvector) and who receives
// it (W, from the transpose). Both max-normalized; only component ratios
// are meaningful.
struct CommunityTrustResult {
  std::vector<double> trusting;     // S
  std::vector<double> trustworthy;  // W
  double eigenvalue_trusting = 0.0;
  double eigenvalue_trustworthy = 0.0;
  std::size_t iterations = 0;  // max over the two runs
  bool converged = false;      // both runs converged
  bool degenerate = false;
};

CommunityTrustResult community_trust(const TrustMatrix& matrix,
                                     double tol = kDefaultTolerance,
                                     std::size_t max_iter = kDefaultMaxIterations);

}  // namespace ptrust
