#include "ptrust/reputation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ptrust/errors.hpp"

namespace ptrust {

namespace {

void check_value(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw DomainError(Errc::OutOfRange,
                      std::string(what) + " must lie in [0,1], got " + std::to_string(v));
}

}  // namespace

ReputationMessage make_reputation_message(AgentId source, AgentId recipient,
                                          AgentId about_sender, AgentId about_receiver,
                                          PromiseBody body, double communicated_value,
                                          std::vector<AgentId> path) {
  check_value(communicated_value, "communicated value");
  if (path.empty()) path.push_back(source);
  if (path.back() != source)
    throw DomainError(Errc::InvalidPath, "path must end at the message source '" +
                                             source.name() + "', ends at '" +
                                             path.back().name() + "'");
  std::set<AgentId> seen(path.begin(), path.end());
  if (seen.size() != path.size())
    throw DomainError(Errc::InvalidPath, "transmission path revisits an agent");
  return ReputationMessage{std::move(source),       std::move(recipient),
                           std::move(about_sender), std::move(about_receiver),
                           std::move(body),         communicated_value,
                           std::move(path)};
}

const AgentId& originator(const ReputationMessage& msg) { return msg.path.front(); }

double borrowed_trust(double trust_in_source, const ReputationMessage& msg) {
  check_value(trust_in_source, "trust in source");
  check_value(msg.communicated_value, "communicated value");
  return trust_in_source * msg.communicated_value;
}

BeliefState update_trust_with_reputation(BeliefState current, double reputation_value,
                                         const ReputationPolicy& policy) {
  check_value(reputation_value, "reputation value");
  check_value(current.probability, "current belief");
  if (!(policy.w_new > 0.0) || !(policy.w_old > 0.0))
    throw DomainError(Errc::OutOfRange, "reputation policy weights must be positive");
  const double total = policy.w_new + policy.w_old;
  return BeliefState{
      (policy.w_new * reputation_value + policy.w_old * current.probability) / total,
      total};
}

RelayResult relay_chain(double initial_value, std::span<const double> chain_trusts) {
  check_value(initial_value, "initial value");
  double value = initial_value;
  for (double trust : chain_trusts) {
    check_value(trust, "chain trust");
    value = trust * value;
  }
  return RelayResult{value, chain_trusts.size()};
}

ReputationMessage apply_distortion(ReputationMessage msg, const DistortionMap& distortion) {
  auto it = distortion.find(msg.source);
  if (it == distortion.end()) return msg;
  if (it->second < 0.0)
    throw DomainError(Errc::OutOfRange, "distortion factors must be non-negative");
  msg.communicated_value = std::clamp(msg.communicated_value * it->second, 0.0, 1.0);
  return msg;
}

TrustPromiseRecord make_trust_promise_record(AgentId promiser, AgentId promisee,
                                             AgentId about, double declared_value) {
  check_value(declared_value, "declared trust");
  return TrustPromiseRecord{std::move(promiser), std::move(promisee), std::move(about),
                            declared_value};
}

}  // namespace ptrust
