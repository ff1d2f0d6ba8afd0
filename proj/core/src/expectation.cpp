#include "ptrust/expectation.hpp"

#include <cmath>
#include <string>

#include "ptrust/errors.hpp"

namespace ptrust {

namespace {

constexpr double kConvexTolerance = 1e-9;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError(Errc::OutOfRange,
                      std::string(what) + " must lie in [0,1], got " + std::to_string(p));
}

}  // namespace

void EvidenceLedger::record(const EvidenceKey& key, bool kept) {
  EvidenceCounts& counts = entries_[key];
  if (kept)
    ++counts.kept;
  else
    ++counts.broken;
}

void EvidenceLedger::set_counts(const EvidenceKey& key, EvidenceCounts counts) {
  entries_[key] = counts;
}

EvidenceCounts EvidenceLedger::counts(const EvidenceKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? EvidenceCounts{} : it->second;
}

bool EvidenceLedger::has_evidence(const EvidenceKey& key) const {
  return counts(key).total() > 0;
}

double frequentist_estimate(EvidenceCounts counts) {
  if (counts.total() == 0)
    throw DomainError(Errc::NoEvidence,
                      "no outcomes recorded; fall back to a prior or transference");
  return static_cast<double>(counts.kept) / static_cast<double>(counts.total());
}

double combine_ensembles(std::span<const Trial> trials) {
  if (trials.empty())
    throw DomainError(Errc::EmptyEnsemble, "at least one trial is required");
  double total = 0.0;
  for (const Trial& t : trials) {
    check_probability(t.probability, "trial probability");
    if (t.size == 0)
      throw DomainError(Errc::OutOfRange, "trial sizes must be positive");
    total += static_cast<double>(t.size);
  }
  double pooled = 0.0;
  for (const Trial& t : trials)
    pooled += (static_cast<double>(t.size) / total) * t.probability;
  return pooled;
}

double combine_weighted(std::span<const WeightedValue> values) {
  if (values.empty())
    throw DomainError(Errc::WeightsNotConvex, "empty weight vector");
  double sum = 0.0;
  for (const WeightedValue& v : values) {
    check_probability(v.probability, "value");
    if (v.weight < 0.0)
      throw DomainError(Errc::WeightsNotConvex, "weights must be non-negative");
    sum += v.weight;
  }
  if (std::abs(sum - 1.0) > kConvexTolerance)
    throw DomainError(Errc::WeightsNotConvex,
                      "weights must sum to 1, got " + std::to_string(sum));
  double combined = 0.0;
  for (const WeightedValue& v : values) combined += v.weight * v.probability;
  return combined;
}

BayesUpdate bayes_update(const BayesHypothesis& h, bool test_positive) {
  check_probability(h.p_hypothesis, "P(H)");
  check_probability(h.p_evidence_given_h, "P(e|H)");
  check_probability(h.p_evidence_given_not_h, "P(e|!H)");

  // Equal likelihoods mean the test cannot distinguish H from !H; shortcut
  // so the fixed point is exact rather than exact-up-to-rounding.
  if (h.p_evidence_given_h == h.p_evidence_given_not_h) return {h, false};

  const double like_h =
      test_positive ? h.p_evidence_given_h : 1.0 - h.p_evidence_given_h;
  const double like_not_h =
      test_positive ? h.p_evidence_given_not_h : 1.0 - h.p_evidence_given_not_h;

  const double numerator = h.p_hypothesis * like_h;
  const double denominator =
      like_h * h.p_hypothesis + like_not_h * (1.0 - h.p_hypothesis);
  if (denominator == 0.0) return {h, true};

  BayesHypothesis next = h;
  next.p_hypothesis = numerator / denominator;
  return {next, false};
}

PolicyPrior PolicyPrior::custom(double probability) {
  check_probability(probability, "prior");
  return PolicyPrior(probability);
}

BeliefState initialize_prior(PolicyPrior prior) {
  return BeliefState{prior.probability(), 1.0};
}

double transfer_evidence(const EvidenceLedger& ledger, const AgentId& observer,
                         const AgentId& sender, const AgentId& receiver,
                         const PromiseType& target_type, const TypeMixture& mixture) {
  if (ledger.has_evidence({observer, sender, receiver, target_type}))
    throw DomainError(Errc::PreconditionViolated,
                      "target type '" + target_type.label() +
                          "' already has direct evidence; transference does not apply");

  std::vector<WeightedValue> donors;
  double weight_sum = 0.0;
  for (const auto& [type, weight] : mixture) {
    if (weight < 0.0)
      throw DomainError(Errc::WeightsNotConvex, "mixture weights must be non-negative");
    EvidenceCounts counts = ledger.counts({observer, sender, receiver, type});
    if (counts.total() == 0) continue;
    donors.push_back({frequentist_estimate(counts), weight});
    weight_sum += weight;
  }
  if (donors.empty() || weight_sum <= 0.0)
    throw DomainError(Errc::NoDonorEvidence,
                      "no donor type has evidence for this observer/sender/receiver");
  for (WeightedValue& d : donors) d.weight /= weight_sum;
  return combine_weighted(donors);
}

double damnation_policy(EvidenceCounts counts, PolicyPrior fallback) {
  if (counts.broken > 0) return 0.0;
  if (counts.total() > 0) return frequentist_estimate(counts);
  return fallback.probability();
}

}  // namespace ptrust
