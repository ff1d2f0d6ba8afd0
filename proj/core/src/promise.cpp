#include "ptrust/promise.hpp"

#include <algorithm>
#include <cctype>

#include "ptrust/errors.hpp"

namespace ptrust {

namespace {

bool is_token(const std::string& text) {
  if (text.empty()) return false;
  return std::none_of(text.begin(), text.end(),
                      [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

AgentId::AgentId(std::string name) : name_(std::move(name)) {
  if (!is_token(name_))
    throw DomainError(Errc::InvalidAgentName,
                      "agent name must be a non-empty token without whitespace, got '" +
                          name_ + "'");
}

PromiseType::PromiseType(std::string label) : label_(std::move(label)) {
  if (!is_token(label_))
    throw DomainError(Errc::InvalidTypeLabel,
                      "type label must be a non-empty token without whitespace, got '" +
                          label_ + "'");
}

std::strong_ordering operator<=>(const PromiseBody& a, const PromiseBody& b) {
  if (auto c = a.type_ <=> b.type_; c != 0) return c;
  if (auto c = a.constraint_ <=> b.constraint_; c != 0) return c;
  if (auto c = a.polarity_ <=> b.polarity_; c != 0) return c;
  return a.negated_ <=> b.negated_;
}

PromiseBody negate(const PromiseBody& body) {
  return PromiseBody(body.type(), body.polarity(), body.constraint(), !body.negated());
}

PromiseBody give(const std::string& type_label, std::string constraint) {
  return PromiseBody(PromiseType(type_label), Polarity::Give, std::move(constraint));
}

PromiseBody use_of(const std::string& type_label, std::string constraint) {
  return PromiseBody(PromiseType(type_label), Polarity::Use, std::move(constraint));
}

PromiseBody plain(const std::string& type_label, std::string constraint) {
  return PromiseBody(PromiseType(type_label), Polarity::Plain, std::move(constraint));
}

std::string to_string(Polarity polarity) {
  switch (polarity) {
    case Polarity::Give: return "+";
    case Polarity::Use: return "-";
    case Polarity::Plain: return "";
  }
  return "";
}

std::string to_string(const PromiseBody& body) {
  std::string out;
  if (body.negated()) out += '!';
  out += to_string(body.polarity());
  out += body.type().label();
  if (!body.constraint().empty()) {
    out += '(';
    out += body.constraint();
    out += ')';
  }
  return out;
}

PromiseBody truth_assurance(const PromiseBody& condition) {
  return PromiseBody(PromiseType("assert:" + to_string(condition)));
}

Promise::Promise(AgentId sender, AgentId receiver, PromiseBody body)
    : Promise(sender, sender, receiver, receiver, std::move(body)) {}

Promise::Promise(AgentId sender, AgentId sender_subject, AgentId receiver,
                 AgentId receiver_subject, PromiseBody body,
                 std::optional<PromiseBody> condition, std::set<AgentId> scope)
    : sender_(std::move(sender)),
      sender_subject_(std::move(sender_subject)),
      receiver_(std::move(receiver)),
      receiver_subject_(std::move(receiver_subject)),
      body_(std::move(body)),
      condition_(std::move(condition)),
      scope_(std::move(scope)) {
  // Sender and receiver know the promise by construction.
  scope_.insert(sender_);
  scope_.insert(receiver_);
}

int Promise::kind() const {
  const bool obliges = sender_subject_ != sender_;
  const bool indirect = receiver_subject_ != receiver_;
  if (obliges && indirect) return 4;
  if (obliges) return 2;
  if (indirect) return 3;
  return 1;
}

Promise Promise::conditional_on(PromiseBody condition) const {
  Promise p = *this;
  p.condition_ = std::move(condition);
  return p;
}

Promise Promise::about(AgentId sender_subject) const {
  Promise p = *this;
  p.sender_subject_ = std::move(sender_subject);
  return p;
}

Promise Promise::for_beneficiary(AgentId receiver_subject) const {
  Promise p = *this;
  p.receiver_subject_ = std::move(receiver_subject);
  return p;
}

Promise Promise::with_scope(std::set<AgentId> scope) const {
  return Promise(sender_, sender_subject_, receiver_, receiver_subject_, body_,
                 condition_, std::move(scope));
}

void IncompatibilitySet::declare(const PromiseBody& a, const PromiseBody& b) {
  if (b < a)
    pairs_.emplace(b, a);
  else
    pairs_.emplace(a, b);
}

bool IncompatibilitySet::declared(const PromiseBody& a, const PromiseBody& b) const {
  return b < a ? pairs_.contains({b, a}) : pairs_.contains({a, b});
}

bool is_incompatible(const PromiseBody& b1, const PromiseBody& b2,
                     const IncompatibilitySet& inc) {
  if (b2 == negate(b1)) return true;
  return inc.declared(b1, b2);
}

std::vector<std::pair<std::size_t, std::size_t>> detect_conflicts(
    std::span<const Promise> promises, const IncompatibilitySet& inc) {
  std::vector<std::pair<std::size_t, std::size_t>> conflicts;
  for (std::size_t i = 0; i < promises.size(); ++i) {
    for (std::size_t j = i + 1; j < promises.size(); ++j) {
      const Promise& a = promises[i];
      const Promise& b = promises[j];
      if (a.sender() != b.sender() || a.receiver() != b.receiver()) continue;
      if (is_incompatible(a.body(), b.body(), inc)) conflicts.emplace_back(i, j);
    }
  }
  return conflicts;
}

BundlePromise compose_bundle(std::span<const Promise> promises) {
  if (promises.empty())
    throw DomainError(Errc::EmptyBundle, "a bundle needs at least one promise");

  const Promise& first = promises.front();
  BundlePromise bundle{first.sender(), first.sender_subject(), first.receiver(),
                       first.receiver_subject(), {}, {}};
  for (const Promise& p : promises) {
    if (p.sender() != bundle.sender || p.sender_subject() != bundle.sender_subject ||
        p.receiver() != bundle.receiver ||
        p.receiver_subject() != bundle.receiver_subject)
      throw DomainError(Errc::MixedEndpoints,
                        "bundled promises must share all four endpoints");
    if (p.condition())
      throw DomainError(Errc::ConditionalInBundle,
                        "conditional promises cannot be bundled; discharge them first");
    bundle.bodies.push_back(p.body());
    bundle.scope.insert(p.scope().begin(), p.scope().end());
  }
  std::sort(bundle.bodies.begin(), bundle.bodies.end());
  bundle.bodies.erase(std::unique(bundle.bodies.begin(), bundle.bodies.end()),
                      bundle.bodies.end());
  return bundle;
}

Promise discharge_conditional(const Promise& promise, const Promise& assurance) {
  if (!promise.condition())
    throw DomainError(Errc::NoMatchingAssurance, "promise is unconditional");
  if (assurance.condition())
    throw DomainError(Errc::NoMatchingAssurance,
                      "an assurance must itself be unconditional");
  if (assurance.sender() != promise.sender() ||
      assurance.sender_subject() != promise.sender_subject() ||
      assurance.receiver() != promise.receiver() ||
      assurance.receiver_subject() != promise.receiver_subject())
    throw DomainError(Errc::NoMatchingAssurance,
                      "assurance endpoints do not match the conditional promise");
  if (assurance.body() != truth_assurance(*promise.condition()))
    throw DomainError(Errc::NoMatchingAssurance,
                      "assurance does not promise the truth of condition " +
                          to_string(*promise.condition()));
  return Promise(promise.sender(), promise.sender_subject(), promise.receiver(),
                 promise.receiver_subject(), promise.body(), std::nullopt,
                 promise.scope());
}

ValidationReport validate_promise(const Promise& promise,
                                  const std::set<AgentId>& autonomous_agents) {
  ValidationReport report;
  if (promise.sender_subject() != promise.sender() &&
      autonomous_agents.contains(promise.sender_subject())) {
    report.invalid_obligation = true;
    report.message = "invalid-obligation: promise binds autonomous agent '" +
                     promise.sender_subject().name() + "' (kind " +
                     std::to_string(promise.kind()) + ")";
  }
  return report;
}

}  // namespace ptrust
