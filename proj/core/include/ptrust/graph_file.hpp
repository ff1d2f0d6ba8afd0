#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ptrust/agent.hpp"
#include "ptrust/architectures.hpp"
#include "ptrust/expectation.hpp"
#include "ptrust/promise.hpp"
#include "ptrust/reputation.hpp"
#include "ptrust/trust.hpp"

namespace ptrust {

// In-memory form of a .ptg graph file. Line-oriented records:
//
//   # comment
//   agent <name>
//   promise <sender>[<subj>] -> <receiver>[<benef>] : <body> [| <condition>] [scope=a,b,c]
//   trust <truster>[<subj>] -> <trustee>[<subj>] : <body> = <value>
//   evidence <observer> <sender> <receiver> <type> kept=<n1> broken=<n0>
//   reputation <source> -> <recipient> about <sender> <receiver> <type> value=<v> path=a,b,c
//   incompatible <body> # <body>
//
// Bodies read [!][+|-]label[(constraint)]; subjects in brackets are optional
// and default to the agent itself. Every agent must be declared by a
// preceding `agent` line.
struct GraphModel {
  std::vector<AgentId> roster;  // declaration order; matrix indices follow it
  std::vector<Promise> promises;
  std::vector<TrustEdge> trust_edges;
  EvidenceLedger evidence;
  std::vector<ReputationMessage> reputations;
  IncompatibilitySet incompatibilities;

  bool declared(const AgentId& agent) const;

  friend bool operator==(const GraphModel&, const GraphModel&) = default;
};

// Structured model or a first-error report (DomainError with the 1-based
// line): SyntaxError, UndeclaredAgent, DuplicateAgent.
GraphModel parse_graph(std::string_view content);

// Canonical text: fixed record order (agents, incompatibilities, promises,
// trust, evidence, reputation), normalized spacing, exact numerals.
// parse(serialize(m)) == m and serialize . parse is idempotent.
std::string serialize_graph(const GraphModel& model);

// Body notation parser used by the graph records; exposed for the CLI.
PromiseBody parse_body(std::string_view token);

GraphModel scenario_to_model(const Scenario& scenario);

}  // namespace ptrust
