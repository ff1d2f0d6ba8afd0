#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ptrust/agent.hpp"
#include "ptrust/expectation.hpp"
#include "ptrust/promise.hpp"

namespace ptrust {

// A trust valuation in transit: source tells recipient what it (or an
// earlier valuator) thinks of the promise sender -> receiver. The path
// records the transmission history, from the original valuator to the
// current source, and never revisits an agent.
struct ReputationMessage {
  AgentId source;          // T, the relayer handing the value over
  AgentId recipient;       // U, who receives it
  AgentId about_sender;    // S of the promise being rated
  AgentId about_receiver;  // R of the promise being rated
  PromiseBody body;
  double communicated_value = 0.0;
  std::vector<AgentId> path;

  friend bool operator==(const ReputationMessage&, const ReputationMessage&) = default;
};

// Validates value range and the path invariants (simple path ending at the
// source; an empty path defaults to {source}).
ReputationMessage make_reputation_message(AgentId source, AgentId recipient,
                                          AgentId about_sender, AgentId about_receiver,
                                          PromiseBody body, double communicated_value,
                                          std::vector<AgentId> path = {});

// The original valuator: the head of the path.
const AgentId& originator(const ReputationMessage& msg);

// The product policy: discount the communicated value by how far the
// recipient trusts the source's reputation promise. A policy default, not a
// law -- no agent is obliged to adopt it.
double borrowed_trust(double trust_in_source, const ReputationMessage& msg);

// Relative weight given to fresh reputation versus the held valuation.
struct ReputationPolicy {
  double w_new = 1.0;
  double w_old = 1.0;
};

// (w_new R + w_old T) / (w_new + w_old); the weights accumulate into the
// belief's effective sample size. Indistinguishable from a Bayesian update.
BeliefState update_trust_with_reputation(BeliefState current, double reputation_value,
                                         const ReputationPolicy& policy);

struct RelayResult {
  double value = 0.0;
  std::size_t path_length = 0;
};

// Applies the borrowed-trust discount hop by hop. The result depends on the
// route taken, which is the point: reputation is path-dependent.
RelayResult relay_chain(double initial_value, std::span<const double> chain_trusts);

using DistortionMap = std::map<AgentId, double>;

// A relayer is free to lie. Scales the communicated value by the source's
// distortion factor (1 when absent) and clamps to [0,1]. Simulation aid.
ReputationMessage apply_distortion(ReputationMessage msg, const DistortionMap& distortion);

// "S promises R that S will trust `about` at the declared level." Stored
// verbatim; no algorithm consumes these, the strategic value is off-model.
struct TrustPromiseRecord {
  AgentId promiser;
  AgentId promisee;
  AgentId about;
  double declared_value = 0.0;

  friend bool operator==(const TrustPromiseRecord&, const TrustPromiseRecord&) = default;
};

TrustPromiseRecord make_trust_promise_record(AgentId promiser, AgentId promisee,
                                             AgentId about, double declared_value);

}  // namespace ptrust
