#pragma once

#include <span>
#include <vector>

#include "ptrust/agent.hpp"
#include "ptrust/promise.hpp"

namespace ptrust {

// A directed valuation: the truster's expectation, in [0,1], that the
// trustee keeps a promise with this body. Subjects mirror the promise
// notation ("S trusts R to ensure T keeps b to U").
struct TrustEdge {
  AgentId truster;
  AgentId truster_subject;
  AgentId trustee;
  AgentId trustee_subject;
  PromiseBody body;
  double value = 0.0;

  friend bool operator==(const TrustEdge&, const TrustEdge&) = default;
};

// Dual of a promise: the receiver trusts the sender with the expectation
// that the promise will be kept. The receiver is in the promise scope by
// construction, so the knowledge requirement holds. OutOfRange when the
// expectation leaves [0,1].
TrustEdge trust_from_expectation(const Promise& promise, double expectation);

// Direct edge construction for valuations whose underlying promise the
// truster knows by inference (e.g. trust records read from a graph file).
TrustEdge make_trust_edge(AgentId truster, AgentId trustee, PromiseBody body,
                          double value);
TrustEdge make_trust_edge(AgentId truster, AgentId truster_subject, AgentId trustee,
                          AgentId trustee_subject, PromiseBody body, double value);

// How a bundle of promise expectations folds into one number.
class CompositionMode {
 public:
  enum class Kind { And, Or, Xor, Ranked, Not };

  static CompositionMode and_mode() { return CompositionMode(Kind::And); }
  static CompositionMode or_mode() { return CompositionMode(Kind::Or); }
  // Self-weight policy (e_i = E_i) unless explicit weights are supplied.
  static CompositionMode xor_mode(std::vector<double> weights = {});
  static CompositionMode ranked(std::vector<double> weights);
  static CompositionMode not_mode() { return CompositionMode(Kind::Not); }

  Kind kind() const { return kind_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  explicit CompositionMode(Kind kind, std::vector<double> weights = {})
      : kind_(kind), weights_(std::move(weights)) {}

  Kind kind_;
  std::vector<double> weights_;
};

// All promises must hold: the product of the expectations.
double compose_and(std::span<const double> values);

// At least one promise holds: 1 - prod(1 - E_i), the exact
// inclusion-exclusion form.
double compose_or(std::span<const double> values);

struct XorTerm {
  double expectation = 0.0;
  double weight = 0.0;  // e_i >= 0, the likelihood estimate for this alternative
};

// Mutually exclusive alternatives: sum(e_i E_i) / sum(e_i). With the
// self-weight policy e_i = E_i this is the sum of squares over the sum.
// AllWeightsZero when the weights cannot normalize.
double compose_xor_weighted(std::span<const XorTerm> terms);

// Importance-ranked combination: a convex sum.
double compose_ranked(std::span<const double> values, std::span<const double> weights);

// Complementary behaviour: 1 - E.
double compose_not(double value);

struct BundleTerm {
  PromiseBody body;
  double value = 0.0;
};

// Mode dispatcher over a valued bundle. Incompatible bodies force AND to
// exactly 0 (no rational agent expects the impossible) and make OR an error
// (IncompatibleOr); XOR is precisely how alternatives combine, so it accepts
// them. NOT takes a single term.
double compose(std::span<const BundleTerm> bundle, const CompositionMode& mode,
               const IncompatibilitySet& inc);

}  // namespace ptrust
