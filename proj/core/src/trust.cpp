#include "ptrust/trust.hpp"

#include <cmath>
#include <string>

#include "ptrust/errors.hpp"

namespace ptrust {

namespace {

constexpr double kConvexTolerance = 1e-9;

void check_expectation(double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw DomainError(Errc::OutOfRange,
                      "expectation must lie in [0,1], got " + std::to_string(value));
}

void check_expectations(std::span<const double> values) {
  for (double v : values) check_expectation(v);
}

}  // namespace

TrustEdge trust_from_expectation(const Promise& promise, double expectation) {
  check_expectation(expectation);
  return TrustEdge{promise.receiver(), promise.sender_subject(), promise.sender(),
                   promise.receiver_subject(), promise.body(), expectation};
}

TrustEdge make_trust_edge(AgentId truster, AgentId trustee, PromiseBody body,
                          double value) {
  return make_trust_edge(truster, trustee, trustee, truster, std::move(body), value);
}

TrustEdge make_trust_edge(AgentId truster, AgentId truster_subject, AgentId trustee,
                          AgentId trustee_subject, PromiseBody body, double value) {
  check_expectation(value);
  return TrustEdge{std::move(truster), std::move(truster_subject), std::move(trustee),
                   std::move(trustee_subject), std::move(body), value};
}

CompositionMode CompositionMode::xor_mode(std::vector<double> weights) {
  for (double w : weights)
    if (w < 0.0)
      throw DomainError(Errc::OutOfRange, "XOR weights must be non-negative");
  return CompositionMode(Kind::Xor, std::move(weights));
}

CompositionMode CompositionMode::ranked(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw DomainError(Errc::WeightsNotConvex, "ranked weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kConvexTolerance)
    throw DomainError(Errc::WeightsNotConvex,
                      "ranked weights must sum to 1, got " + std::to_string(sum));
  return CompositionMode(Kind::Ranked, std::move(weights));
}

double compose_and(std::span<const double> values) {
  check_expectations(values);
  double product = 1.0;
  for (double v : values) product *= v;
  return product;
}

double compose_or(std::span<const double> values) {
  check_expectations(values);
  double product = 1.0;
  for (double v : values) product *= 1.0 - v;
  return 1.0 - product;
}

double compose_xor_weighted(std::span<const XorTerm> terms) {
  double weight_sum = 0.0;
  double weighted = 0.0;
  for (const XorTerm& t : terms) {
    check_expectation(t.expectation);
    if (t.weight < 0.0)
      throw DomainError(Errc::OutOfRange, "XOR weights must be non-negative");
    weight_sum += t.weight;
    weighted += t.weight * t.expectation;
  }
  if (weight_sum <= 0.0)
    throw DomainError(Errc::AllWeightsZero, "XOR weights sum to zero");
  return weighted / weight_sum;
}

double compose_ranked(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size())
    throw DomainError(Errc::WrongArity, "one weight per value is required");
  check_expectations(values);
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw DomainError(Errc::WeightsNotConvex, "ranked weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kConvexTolerance)
    throw DomainError(Errc::WeightsNotConvex,
                      "ranked weights must sum to 1, got " + std::to_string(sum));
  double combined = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) combined += weights[i] * values[i];
  return combined;
}

double compose_not(double value) {
  check_expectation(value);
  return 1.0 - value;
}

namespace {

bool any_pair_incompatible(std::span<const BundleTerm> bundle,
                           const IncompatibilitySet& inc) {
  for (std::size_t i = 0; i < bundle.size(); ++i)
    for (std::size_t j = i + 1; j < bundle.size(); ++j)
      if (is_incompatible(bundle[i].body, bundle[j].body, inc)) return true;
  return false;
}

}  // namespace

double compose(std::span<const BundleTerm> bundle, const CompositionMode& mode,
               const IncompatibilitySet& inc) {
  if (bundle.empty())
    throw DomainError(Errc::EmptyBundle, "cannot compose an empty bundle");

  std::vector<double> values;
  values.reserve(bundle.size());
  for (const BundleTerm& term : bundle) {
    check_expectation(term.value);
    values.push_back(term.value);
  }

  switch (mode.kind()) {
    case CompositionMode::Kind::And:
      if (any_pair_incompatible(bundle, inc)) return 0.0;
      return compose_and(values);
    case CompositionMode::Kind::Or:
      if (any_pair_incompatible(bundle, inc))
        throw DomainError(Errc::IncompatibleOr,
                          "OR cannot be applied to incompatible promises");
      return compose_or(values);
    case CompositionMode::Kind::Xor: {
      std::vector<XorTerm> terms;
      terms.reserve(bundle.size());
      const std::vector<double>& weights = mode.weights();
      if (!weights.empty() && weights.size() != bundle.size())
        throw DomainError(Errc::WrongArity, "one XOR weight per value is required");
      for (std::size_t i = 0; i < bundle.size(); ++i)
        terms.push_back({values[i], weights.empty() ? values[i] : weights[i]});
      return compose_xor_weighted(terms);
    }
    case CompositionMode::Kind::Ranked:
      return compose_ranked(values, mode.weights());
    case CompositionMode::Kind::Not:
      if (bundle.size() != 1)
        throw DomainError(Errc::WrongArity, "NOT composes exactly one promise");
      return compose_not(values.front());
  }
  throw DomainError(Errc::WrongArity, "unknown composition mode");
}

}  // namespace ptrust
