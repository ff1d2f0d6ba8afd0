#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptrust/agent.hpp"

namespace ptrust {

// Qualitative promise kind. Negating a body never changes its type.
class PromiseType {
 public:
  explicit PromiseType(std::string label);

  const std::string& label() const { return label_; }

  friend bool operator==(const PromiseType&, const PromiseType&) = default;
  friend std::strong_ordering operator<=>(const PromiseType&, const PromiseType&) = default;

 private:
  std::string label_;
};

// Give (+) offers a service, Use (-) consumes one, Plain makes no claim
// either way.
enum class Polarity { Give, Use, Plain };

// The content of a promise: type, optional quantitative constraint,
// polarity, and a negation flag for the deliberate act of *not* doing it.
// The constraint is opaque text compared by equality.
class PromiseBody {
 public:
  explicit PromiseBody(PromiseType type, Polarity polarity = Polarity::Plain,
                       std::string constraint = "", bool negated = false)
      : type_(std::move(type)),
        constraint_(std::move(constraint)),
        polarity_(polarity),
        negated_(negated) {}

  const PromiseType& type() const { return type_; }
  const std::string& constraint() const { return constraint_; }
  Polarity polarity() const { return polarity_; }
  bool negated() const { return negated_; }

  friend bool operator==(const PromiseBody&, const PromiseBody&) = default;
  // Canonical order: (type, constraint, polarity, negated). Bundle bodies
  // and serialized output rely on it being total and deterministic.
  friend std::strong_ordering operator<=>(const PromiseBody& a, const PromiseBody& b);

 private:
  PromiseType type_;
  std::string constraint_;
  Polarity polarity_;
  bool negated_;
};

// b -> !b; an involution that preserves type, constraint and polarity.
PromiseBody negate(const PromiseBody& body);

PromiseBody give(const std::string& type_label, std::string constraint = "");
PromiseBody use_of(const std::string& type_label, std::string constraint = "");
PromiseBody plain(const std::string& type_label, std::string constraint = "");

// Compact body notation: [!][+|-]label[(constraint)].
std::string to_string(const PromiseBody& body);
std::string to_string(Polarity polarity);

// Truth-assurance body T(C): a promise to ensure that condition C holds,
// encoded as a reserved "assert:"-prefixed type wrapping C's notation.
PromiseBody truth_assurance(const PromiseBody& condition);

// A typed, scoped assertion from a sender to a receiver. Subjects cover the
// four notation kinds:
//   1. S[S] -> R[R]   plain promise               (both subjects default)
//   2. S[T] -> R[R]   obligation: S binds T       (forbidden if T autonomous)
//   3. S[S] -> R[T]   indirection: S does b for T
//   4. S[T] -> D[U]   the general form
// The scope is the set of agents with knowledge of the promise; sender and
// receiver always belong to it.
class Promise {
 public:
  Promise(AgentId sender, AgentId receiver, PromiseBody body);
  Promise(AgentId sender, AgentId sender_subject, AgentId receiver,
          AgentId receiver_subject, PromiseBody body,
          std::optional<PromiseBody> condition = std::nullopt,
          std::set<AgentId> scope = {});

  const AgentId& sender() const { return sender_; }
  const AgentId& sender_subject() const { return sender_subject_; }
  const AgentId& receiver() const { return receiver_; }
  const AgentId& receiver_subject() const { return receiver_subject_; }
  const PromiseBody& body() const { return body_; }
  const std::optional<PromiseBody>& condition() const { return condition_; }
  const std::set<AgentId>& scope() const { return scope_; }

  int kind() const;  // 1..4 per the notation table above

  Promise conditional_on(PromiseBody condition) const;
  Promise about(AgentId sender_subject) const;            // kind 2/4 builder
  Promise for_beneficiary(AgentId receiver_subject) const;  // kind 3/4 builder
  Promise with_scope(std::set<AgentId> scope) const;

  friend bool operator==(const Promise&, const Promise&) = default;

 private:
  AgentId sender_;
  AgentId sender_subject_;
  AgentId receiver_;
  AgentId receiver_subject_;
  PromiseBody body_;
  std::optional<PromiseBody> condition_;
  std::set<AgentId> scope_;
};

// Declared mutual exclusions between promise bodies. (b, !b) is implicitly
// incompatible for every b and never needs declaring. Storage is symmetric.
class IncompatibilitySet {
 public:
  void declare(const PromiseBody& a, const PromiseBody& b);
  bool declared(const PromiseBody& a, const PromiseBody& b) const;

  // Canonically ordered (min,max) pairs.
  const std::set<std::pair<PromiseBody, PromiseBody>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const IncompatibilitySet&, const IncompatibilitySet&) = default;

 private:
  std::set<std::pair<PromiseBody, PromiseBody>> pairs_;
};

// b1 # b2: declared incompatible, or one is the negation of the other.
bool is_incompatible(const PromiseBody& b1, const PromiseBody& b2,
                     const IncompatibilitySet& inc);

// Index pairs (i < j) of promises with identical sender and receiver whose
// bodies cannot both be realized. Empty when conflict-free.
std::vector<std::pair<std::size_t, std::size_t>> detect_conflicts(
    std::span<const Promise> promises, const IncompatibilitySet& inc);

// Parallel composition of promises between one pair of endpoints: the body
// union, canonically sorted and deduplicated.
struct BundlePromise {
  AgentId sender;
  AgentId sender_subject;
  AgentId receiver;
  AgentId receiver_subject;
  std::vector<PromiseBody> bodies;  // sorted, unique
  std::set<AgentId> scope;          // union of the inputs' scopes

  friend bool operator==(const BundlePromise&, const BundlePromise&) = default;
};

// Errors: EmptyBundle, MixedEndpoints (any endpoint or subject differs),
// ConditionalInBundle.
BundlePromise compose_bundle(std::span<const Promise> promises);

// (b|C) + T(C) => b. The assurance must share all four endpoints and wrap
// exactly the promise's condition; otherwise NoMatchingAssurance.
Promise discharge_conditional(const Promise& promise, const Promise& assurance);

struct ValidationReport {
  bool invalid_obligation = false;
  std::string message;  // empty when valid

  bool valid() const { return !invalid_obligation; }
};

// Flags promises of the second and fourth kind whose bound subject is
// autonomous. Such promises carry no influence and are excluded from trust
// computation by callers.
ValidationReport validate_promise(const Promise& promise,
                                  const std::set<AgentId>& autonomous_agents);

}  // namespace ptrust
