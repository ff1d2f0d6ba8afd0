#pragma once

#include <compare>
#include <string>

namespace ptrust {

// Agent identifier: a non-empty token without whitespace, compared
// exact-match. Agents are autonomous; the identifier carries no semantics
// beyond identity.
class AgentId {
 public:
  explicit AgentId(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const AgentId&, const AgentId&) = default;
  friend std::strong_ordering operator<=>(const AgentId&, const AgentId&) = default;

 private:
  std::string name_;
};

}  // namespace ptrust
