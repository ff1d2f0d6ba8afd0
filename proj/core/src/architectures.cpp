#include "ptrust/architectures.hpp"

#include <algorithm>
#include <string>

#include "ptrust/errors.hpp"

namespace ptrust {

PromiseType legitimate_type() { return PromiseType("Legitimate"); }
PromiseType verification_type() { return PromiseType("Verification"); }
PromiseType identity_type() { return PromiseType("Identity"); }
PromiseType signature_type() { return PromiseType("Signature"); }

bool scenario_is_consistent(const Scenario& scenario) {
  for (const TrustEdge& edge : scenario.trust_edges) {
    bool backed = std::any_of(
        scenario.promises.begin(), scenario.promises.end(), [&](const Promise& p) {
          return p.sender() == edge.trustee && p.receiver() == edge.truster &&
                 p.body() == edge.body;
        });
    if (!backed) return false;
  }
  return true;
}

Scenario build_ttp_scenario(std::span<const AgentId> users, const AgentId& authority,
                            const std::set<AgentId>& registered, double user_trust) {
  if (users.empty())
    throw DomainError(Errc::EmptyUserSet, "a third-party scenario needs users");
  for (const AgentId& user : users)
    if (user == authority)
      throw DomainError(Errc::PreconditionViolated,
                        "the authority '" + authority.name() + "' cannot be a user");

  Scenario scenario{"ttp", {}, {}};
  for (const AgentId& user : users) {
    Promise legitimacy(authority, user, give(legitimate_type().label()));
    Promise verification(authority, user, give(verification_type().label()));
    scenario.promises.push_back(legitimacy);
    scenario.promises.push_back(verification);
    scenario.promises.emplace_back(user, authority, use_of(verification_type().label()));
    scenario.trust_edges.push_back(trust_from_expectation(legitimacy, user_trust));
    scenario.trust_edges.push_back(trust_from_expectation(verification, user_trust));
    if (registered.contains(user)) {
      Promise identity(user, authority, give(identity_type().label()));
      scenario.promises.push_back(identity);
      scenario.promises.emplace_back(authority, user, use_of(identity_type().label()));
      scenario.trust_edges.push_back(trust_from_expectation(identity, user_trust));
    }
  }
  return scenario;
}

Scenario build_wot_signing(const AgentId& owner, const AgentId& agent,
                           double trust_value) {
  if (owner == agent)
    throw DomainError(Errc::SelfSigning,
                      "'" + owner.name() + "' cannot sign its own credential");

  Scenario scenario{"wot", {}, {}};
  Promise identity(owner, agent, give(identity_type().label()));
  Promise signature(agent, owner, give(signature_type().label()));
  scenario.promises.push_back(identity);
  scenario.promises.emplace_back(agent, owner, use_of(identity_type().label()));
  scenario.promises.push_back(signature);
  scenario.promises.emplace_back(owner, agent, use_of(signature_type().label()));
  scenario.trust_edges.push_back(trust_from_expectation(identity, trust_value));
  scenario.trust_edges.push_back(trust_from_expectation(signature, trust_value));
  return scenario;
}

Scenario merge_scenarios(std::string name, std::span<const Scenario> parts) {
  Scenario merged{std::move(name), {}, {}};
  for (const Scenario& part : parts) {
    merged.promises.insert(merged.promises.end(), part.promises.begin(),
                           part.promises.end());
    merged.trust_edges.insert(merged.trust_edges.end(), part.trust_edges.begin(),
                              part.trust_edges.end());
  }
  return merged;
}

double wot_category_value(WotCategory category, PolicyPrior prior,
                          const WotAnchors& anchors) {
  switch (category) {
    case WotCategory::Definitely: return anchors.definitely;
    case WotCategory::Somewhat: return anchors.somewhat;
    case WotCategory::Untrustworthy: return anchors.untrustworthy;
    case WotCategory::Unknown: return initialize_prior(prior).probability;
  }
  throw DomainError(Errc::OutOfRange, "unknown category");
}

bool threshold_accept(std::span<const double> values, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw DomainError(Errc::OutOfRange, "threshold must lie in [0,1]");
  if (values.empty())
    throw DomainError(Errc::EmptyValuations, "no received valuations to judge");
  double sum = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw DomainError(Errc::OutOfRange, "valuations must lie in [0,1]");
    sum += v;
  }
  return sum / static_cast<double>(values.size()) >= threshold;
}

}  // namespace ptrust
