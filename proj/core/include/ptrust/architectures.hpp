#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "ptrust/agent.hpp"
#include "ptrust/expectation.hpp"
#include "ptrust/promise.hpp"
#include "ptrust/trust.hpp"

namespace ptrust {

// Reserved type labels shared by the scenario builders, so community trust
// can be computed per promise type on architecture graphs.
PromiseType legitimate_type();
PromiseType verification_type();
PromiseType identity_type();
PromiseType signature_type();

// A promise graph built from a known pattern. Trust edges only ever rate
// promises present in the scenario.
struct Scenario {
  std::string name;
  std::vector<Promise> promises;
  std::vector<TrustEdge> trust_edges;
};

// Every trust edge must be the dual of some promise in the scenario.
bool scenario_is_consistent(const Scenario& scenario);

// Centralized identity: the authority promises legitimacy and verification
// to every user, users promise to use the verification; registered users
// additionally exchange identity promises with the authority. Users rate
// the authority's service promises at user_trust, and the authority rates a
// registered user's identity promise the same way.
Scenario build_ttp_scenario(std::span<const AgentId> users, const AgentId& authority,
                            const std::set<AgentId>& registered,
                            double user_trust = 0.8);

// One key-signing encounter: identity offered and used, signature offered
// and used, all bilateral. The implied trust edges (agent in the owner's
// identity, owner in the agent's signature) carry trust_value.
Scenario build_wot_signing(const AgentId& owner, const AgentId& agent,
                           double trust_value = 0.6);

Scenario merge_scenarios(std::string name, std::span<const Scenario> parts);

// The four judgements a signer may pass on a key.
enum class WotCategory { Definitely, Somewhat, Untrustworthy, Unknown };

// Numeric anchors for the first three categories; "unknown" falls back to
// the agent's policy prior.
struct WotAnchors {
  double definitely = 1.0;
  double somewhat = 0.6;
  double untrustworthy = 0.0;
};

double wot_category_value(WotCategory category, PolicyPrior prior,
                          const WotAnchors& anchors = {});

// Equal-weight combination of the received valuations against an inclusive
// threshold. EmptyValuations with nothing to judge.
bool threshold_accept(std::span<const double> values, double threshold);

}  // namespace ptrust
