#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>

#include "ptrust/agent.hpp"
#include "ptrust/promise.hpp"

namespace ptrust {

// Evidence is kept per observer and per promise type: who watched whom
// keep (or break) promises of what kind to whom.
struct EvidenceKey {
  AgentId observer;
  AgentId sender;
  AgentId receiver;
  PromiseType type;

  friend bool operator==(const EvidenceKey&, const EvidenceKey&) = default;
  friend std::strong_ordering operator<=>(const EvidenceKey&, const EvidenceKey&) = default;
};

struct EvidenceCounts {
  std::uint64_t kept = 0;
  std::uint64_t broken = 0;

  std::uint64_t total() const { return kept + broken; }

  friend bool operator==(const EvidenceCounts&, const EvidenceCounts&) = default;
};

// Kept/broken tallies per (observer, sender, receiver, type). Mutation is
// single-writer; copies serve as snapshots for concurrent readers.
class EvidenceLedger {
 public:
  void record(const EvidenceKey& key, bool kept);
  void set_counts(const EvidenceKey& key, EvidenceCounts counts);

  // (0,0) when the key has never been observed.
  EvidenceCounts counts(const EvidenceKey& key) const;
  bool has_evidence(const EvidenceKey& key) const;

  const std::map<EvidenceKey, EvidenceCounts>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const EvidenceLedger&, const EvidenceLedger&) = default;

 private:
  std::map<EvidenceKey, EvidenceCounts> entries_;
};

// kept / (kept + broken). Throws NoEvidence on an empty tally; callers fall
// back to a policy prior or to transference.
double frequentist_estimate(EvidenceCounts counts);

// One trial: an estimate and the size of the evidence body behind it.
struct Trial {
  double probability = 0.0;
  std::uint64_t size = 0;
};

// Pools trials by sample-size-weighted average; identical to recomputing the
// frequency over the merged evidence.
double combine_ensembles(std::span<const Trial> trials);

struct WeightedValue {
  double probability = 0.0;
  double weight = 0.0;
};

// Plain convex combination. Weights must be non-negative and sum to 1
// within 1e-9 (WeightsNotConvex otherwise).
double combine_weighted(std::span<const WeightedValue> values);

// Belief in the trustworthiness hypothesis H plus the two likelihood
// estimates the update equation needs. P(!H) is implicit.
struct BayesHypothesis {
  double p_hypothesis = 0.5;          // P(H | evidence so far)
  double p_evidence_given_h = 0.5;    // P(e | H)
  double p_evidence_given_not_h = 0.5;  // P(e | !H)
};

struct BayesUpdate {
  BayesHypothesis hypothesis;
  bool degenerate = false;  // denominator was zero; belief left unchanged
};

// One iteration of the posterior update; the returned belief feeds back as
// the next prior. Negative evidence uses the complementary likelihoods.
// Equal likelihoods carry no information and leave the belief untouched.
BayesUpdate bayes_update(const BayesHypothesis& h, bool test_positive);

// Initial stance towards an agent never observed before.
class PolicyPrior {
 public:
  static PolicyPrior trusting() { return PolicyPrior(1.0); }
  static PolicyPrior neutral() { return PolicyPrior(0.5); }
  static PolicyPrior untrusting() { return PolicyPrior(0.0); }
  static PolicyPrior custom(double probability);

  double probability() const { return probability_; }

  friend bool operator==(const PolicyPrior&, const PolicyPrior&) = default;

 private:
  explicit PolicyPrior(double probability) : probability_(probability) {}
  double probability_;
};

struct BeliefState {
  double probability = 0.5;
  double weight = 1.0;  // effective sample size behind the probability

  friend bool operator==(const BeliefState&, const BeliefState&) = default;
};

BeliefState initialize_prior(PolicyPrior prior);

using TypeMixture = std::map<PromiseType, double>;

// With zero evidence for the target type, borrow a policy-weighted mixture
// of the observer's estimates for other types of promise between the same
// pair. Donor types without evidence drop out; their weight renormalizes
// over the rest. NoDonorEvidence when nothing can donate.
double transfer_evidence(const EvidenceLedger& ledger, const AgentId& observer,
                         const AgentId& sender, const AgentId& receiver,
                         const PromiseType& target_type, const TypeMixture& mixture);

// A single failure condemns: 0 as soon as anything was broken, otherwise
// the frequency, otherwise the prior.
double damnation_policy(EvidenceCounts counts, PolicyPrior fallback);

}  // namespace ptrust
