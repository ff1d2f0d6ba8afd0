#include "ptrust/community.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptrust/errors.hpp"

namespace ptrust {

TrustMatrix::TrustMatrix(std::vector<AgentId> roster, PromiseType type)
    : roster_(std::move(roster)),
      type_(std::move(type)),
      entries_(roster_.size() * roster_.size(), 0.0) {
  for (std::size_t i = 0; i < roster_.size(); ++i)
    for (std::size_t j = i + 1; j < roster_.size(); ++j)
      if (roster_[i] == roster_[j])
        throw DomainError(Errc::DuplicateAgent,
                          "roster lists '" + roster_[i].name() + "' twice");
}

double TrustMatrix::at(std::size_t row, std::size_t col) const {
  return entries_.at(row * size() + col);
}

void TrustMatrix::set(std::size_t row, std::size_t col, double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw DomainError(Errc::OutOfRange,
                      "trust entries must lie in [0,1], got " + std::to_string(value));
  entries_.at(row * size() + col) = value;
}

std::optional<std::size_t> TrustMatrix::index_of(const AgentId& agent) const {
  auto it = std::find(roster_.begin(), roster_.end(), agent);
  if (it == roster_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roster_.begin());
}

bool TrustMatrix::all_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](double v) { return v == 0.0; });
}

double TrustMatrix::max_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < size(); ++j) sum += at(i, j);
    best = std::max(best, sum);
  }
  return best;
}

TrustMatrix build_matrix(std::span<const TrustEdge> edges, std::vector<AgentId> roster,
                         const PromiseType& type) {
  TrustMatrix matrix(std::move(roster), type);
  std::vector<bool> filled(matrix.size() * matrix.size(), false);
  for (const TrustEdge& edge : edges) {
    if (edge.body.type() != type) continue;
    auto row = matrix.index_of(edge.truster);
    auto col = matrix.index_of(edge.trustee);
    if (!row)
      throw DomainError(Errc::UnknownAgent,
                        "truster '" + edge.truster.name() + "' is not in the roster");
    if (!col)
      throw DomainError(Errc::UnknownAgent,
                        "trustee '" + edge.trustee.name() + "' is not in the roster");
    if (filled[*row * matrix.size() + *col])
      throw DomainError(Errc::DuplicateEdge, "duplicate trust edge " +
                                                 edge.truster.name() + " -> " +
                                                 edge.trustee.name() + " for type '" +
                                                 type.label() + "'");
    filled[*row * matrix.size() + *col] = true;
    matrix.set(*row, *col, edge.value);
  }
  return matrix;
}

TrustMatrix remove_agent(const TrustMatrix& matrix, const AgentId& agent) {
  auto removed = matrix.index_of(agent);
  if (!removed)
    throw DomainError(Errc::UnknownAgent,
                      "agent '" + agent.name() + "' is not in the roster");
  std::vector<AgentId> roster;
  roster.reserve(matrix.size() - 1);
  for (std::size_t i = 0; i < matrix.size(); ++i)
    if (i != *removed) roster.push_back(matrix.roster()[i]);
  TrustMatrix reduced(std::move(roster), matrix.type());
  for (std::size_t i = 0, r = 0; i < matrix.size(); ++i) {
    if (i == *removed) continue;
    for (std::size_t j = 0, c = 0; j < matrix.size(); ++j) {
      if (j == *removed) continue;
      reduced.set(r, c, matrix.at(i, j));
      ++c;
    }
    ++r;
  }
  return reduced;
}

TrustMatrix transpose(const TrustMatrix& matrix) {
  TrustMatrix result(matrix.roster(), matrix.type());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix.size(); ++j) result.set(j, i, matrix.at(i, j));
  return result;
}

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

// An agent whose row is entirely zero has a structurally zero component:
// plain iteration kills it in one step, the shifted iteration only decays
// it geometrically, so the exact zero is restored here.
void snap_structural_zeros(const TrustMatrix& matrix, std::vector<double>& v) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < matrix.size() && zero_row; ++j)
      if (matrix.at(i, j) != 0.0) zero_row = false;
    if (zero_row) v[i] = 0.0;
  }
}

// Cycle search over the positive-entry adjacency. A non-negative matrix has
// spectral radius zero exactly when its graph is acyclic.
bool has_cycle(const TrustMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on the stack, 2 finished
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    state[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      std::size_t node = stack.back().first;
      bool descended = false;
      for (std::size_t j = stack.back().second; j < n; ++j) {
        if (matrix.at(node, j) == 0.0) continue;
        if (state[j] == 1) return true;
        if (state[j] == 0) {
          stack.back().second = j + 1;
          state[j] = 1;
          stack.emplace_back(j, 0);
          descended = true;
          break;
        }
      }
      if (!descended) {
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

// No feedback at all: the matrix is nilpotent and the spectral radius is 0.
// Plain iteration lands in the nullspace within N steps; the last nonzero
// iterate is an exact eigenvector for eigenvalue 0.
EigenResult nilpotent_eigenvector(const TrustMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<double> current(n, 1.0);
  for (std::size_t iter = 1; iter <= n + 1; ++iter) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += matrix.at(i, j) * current[j];
      next[i] = sum;
    }
    double top = *std::max_element(next.begin(), next.end());
    if (top == 0.0) {
      snap_structural_zeros(matrix, current);
      return EigenResult{current, 0.0, iter, true, false};
    }
    for (double& v : next) v /= top;
    current = std::move(next);
  }
  return EigenResult{current, 0.0, n + 1, false, false};  // not reachable
}

}  // namespace

EigenResult principal_eigenvector(const TrustMatrix& matrix, double tol,
                                  std::size_t max_iter) {
  if (!(tol > 0.0))
    throw DomainError(Errc::OutOfRange, "tolerance must be positive");
  const std::size_t n = matrix.size();
  if (n == 0) return EigenResult{{}, 0.0, 0, true, false};
  if (matrix.all_zero())
    return EigenResult{std::vector<double>(n, 0.0), 0.0, 0, true, false};
  if (!has_cycle(matrix)) return nilpotent_eigenvector(matrix);

  const double sigma = 0.5 * matrix.max_row_sum();
  std::vector<double> current(n, 1.0);
  std::vector<double> previous2;  // iterate from two steps back
  std::vector<double> next(n, 0.0);
  double top = 0.0;
  double previous_delta = 0.0;

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double sum = sigma * current[i];
      for (std::size_t j = 0; j < n; ++j) sum += matrix.at(i, j) * current[j];
      next[i] = sum;
    }
    top = *std::max_element(next.begin(), next.end());
    if (top <= 0.0)  // guards the division; cannot happen while sigma > 0
      return EigenResult{std::vector<double>(n, 0.0), 0.0, iter, true, false};
    for (double& v : next) v /= top;

    // The step change understates the remaining error when the contraction
    // is slow; the geometric tail estimate delta * r/(1-r) corrects for it.
    const double delta = max_abs_diff(next, current);
    if (delta < tol && iter > 1) {
      const double ratio =
          previous_delta > 0.0 ? std::min(delta / previous_delta, 0.999) : 0.0;
      const double tail = delta * ratio / (1.0 - ratio);
      if (tail < tol) {
        snap_structural_zeros(matrix, next);
        return EigenResult{next, top - sigma, iter, true, false};
      }
    }
    // A 2-cycle in the iterates means two eigenvalues tie at the top even
    // under the shift; the sequence will never settle.
    if (!previous2.empty() && delta >= tol && max_abs_diff(next, previous2) < tol) {
      snap_structural_zeros(matrix, next);
      return EigenResult{next, top - sigma, iter, false, true};
    }
    previous2 = current;
    std::swap(current, next);
    previous_delta = delta;
  }
  snap_structural_zeros(matrix, current);
  return EigenResult{current, top - sigma, max_iter, false, false};
}

CommunityTrustResult community_trust(const TrustMatrix& matrix, double tol,
                                     std::size_t max_iter) {
  EigenResult trusting = principal_eigenvector(matrix, tol, max_iter);
  EigenResult trustworthy = principal_eigenvector(transpose(matrix), tol, max_iter);
  CommunityTrustResult result;
  result.trusting = std::move(trusting.vector);
  result.trustworthy = std::move(trustworthy.vector);
  result.eigenvalue_trusting = trusting.eigenvalue;
  result.eigenvalue_trustworthy = trustworthy.eigenvalue;
  result.iterations = std::max(trusting.iterations, trustworthy.iterations);
  result.converged = trusting.converged && trustworthy.converged;
  result.degenerate = trusting.degenerate || trustworthy.degenerate;
  return result;
}

}  // namespace ptrust
