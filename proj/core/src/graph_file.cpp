#include "ptrust/graph_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>

#include "ptrust/errors.hpp"
#include "ptrust/text.hpp"

namespace ptrust {

namespace {

constexpr std::string_view kReservedNameChars = "[]()#=:|,";

bool file_safe_name(const std::string& name) {
  return name.find_first_of(kReservedNameChars) == std::string::npos &&
         name != "->";
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.emplace_back(line.substr(start, pos - start));
  }
  return tokens;
}

[[noreturn]] void fail(Errc code, int line, const std::string& message) {
  throw DomainError(code, line, message);
}

struct Endpoint {
  std::string name;
  std::string subject;  // empty = defaulted
};

Endpoint parse_endpoint(const std::string& token, int line) {
  auto open = token.find('[');
  if (open == std::string::npos) return {token, ""};
  if (token.back() != ']' || open == 0 || open + 2 > token.size() - 1)
    fail(Errc::SyntaxError, line, "malformed endpoint '" + token + "'");
  return {token.substr(0, open), token.substr(open + 1, token.size() - open - 2)};
}

double parse_value(const std::string& token, int line) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size())
    fail(Errc::SyntaxError, line, "expected a number, got '" + token + "'");
  return value;
}

std::uint64_t parse_count(const std::string& token, std::string_view prefix, int line) {
  if (!token.starts_with(prefix))
    fail(Errc::SyntaxError, line,
         "expected '" + std::string(prefix) + "<count>', got '" + token + "'");
  std::string_view digits = std::string_view(token).substr(prefix.size());
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size())
    fail(Errc::SyntaxError, line, "expected a count in '" + token + "'");
  return value;
}

std::vector<std::string> split_csv(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    parts.emplace_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return parts;
}

class Parser {
 public:
  GraphModel run(std::string_view content) {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= content.size()) {
      std::size_t eol = content.find('\n', pos);
      if (eol == std::string_view::npos) eol = content.size();
      std::string_view line = content.substr(pos, eol - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(line, line_no);
      if (eol >= content.size()) break;
      pos = eol + 1;
    }
    return std::move(model_);
  }

 private:
  void parse_line(std::string_view line, int line_no) {
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) return;
    if (tokens.front().front() == '#') return;
    const std::string& kind = tokens.front();
    if (kind == "agent")
      parse_agent(tokens, line_no);
    else if (kind == "promise")
      parse_promise(tokens, line_no);
    else if (kind == "trust")
      parse_trust(tokens, line_no);
    else if (kind == "evidence")
      parse_evidence(tokens, line_no);
    else if (kind == "reputation")
      parse_reputation(tokens, line_no);
    else if (kind == "incompatible")
      parse_incompatible(tokens, line_no);
    else
      fail(Errc::SyntaxError, line_no, "unknown record kind '" + kind + "'");
  }

  AgentId declared_agent(const std::string& name, int line_no) const {
    try {
      AgentId id{name};
      if (!model_.declared(id))
        fail(Errc::UndeclaredAgent, line_no,
             "agent '" + name + "' is used before its `agent` line");
      return id;
    } catch (const DomainError& e) {
      if (e.code() == Errc::InvalidAgentName)
        fail(Errc::SyntaxError, line_no, e.what());
      throw;
    }
  }

  AgentId resolve(const Endpoint& ep, int line_no) const {
    return declared_agent(ep.name, line_no);
  }

  AgentId resolve_subject(const Endpoint& ep, const AgentId& fallback,
                          int line_no) const {
    if (ep.subject.empty()) return fallback;
    return declared_agent(ep.subject, line_no);
  }

  PromiseBody body_at(const std::string& token, int line_no) const {
    try {
      return parse_body(token);
    } catch (const DomainError& e) {
      fail(Errc::SyntaxError, line_no, e.what());
    }
  }

  void expect(const std::vector<std::string>& tokens, std::size_t index,
              std::string_view literal, int line_no) const {
    if (index >= tokens.size() || tokens[index] != literal)
      fail(Errc::SyntaxError, line_no,
           "expected '" + std::string(literal) + "' at token " +
               std::to_string(index + 1));
  }

  void parse_agent(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 2)
      fail(Errc::SyntaxError, line_no, "usage: agent <name>");
    const std::string& name = tokens[1];
    if (!file_safe_name(name))
      fail(Errc::SyntaxError, line_no,
           "agent name '" + name + "' uses characters reserved by the format");
    AgentId id{name};
    if (model_.declared(id))
      fail(Errc::DuplicateAgent, line_no, "agent '" + name + "' declared twice");
    model_.roster.push_back(std::move(id));
  }

  void parse_promise(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() < 6)
      fail(Errc::SyntaxError, line_no,
           "usage: promise <sender>[subj] -> <receiver>[benef] : <body> [| <cond>] [scope=...]");
    Endpoint from = parse_endpoint(tokens[1], line_no);
    expect(tokens, 2, "->", line_no);
    Endpoint to = parse_endpoint(tokens[3], line_no);
    expect(tokens, 4, ":", line_no);
    AgentId sender = resolve(from, line_no);
    AgentId receiver = resolve(to, line_no);
    AgentId sender_subject = resolve_subject(from, sender, line_no);
    AgentId receiver_subject = resolve_subject(to, receiver, line_no);
    PromiseBody body = body_at(tokens[5], line_no);

    std::optional<PromiseBody> condition;
    std::set<AgentId> scope;
    std::size_t index = 6;
    if (index < tokens.size() && tokens[index] == "|") {
      if (index + 1 >= tokens.size())
        fail(Errc::SyntaxError, line_no, "'|' must be followed by a condition body");
      condition = body_at(tokens[index + 1], line_no);
      index += 2;
    }
    if (index < tokens.size() && tokens[index].starts_with("scope=")) {
      for (const std::string& name : split_csv(std::string_view(tokens[index]).substr(6)))
        scope.insert(declared_agent(name, line_no));
      ++index;
    }
    if (index != tokens.size())
      fail(Errc::SyntaxError, line_no, "unexpected token '" + tokens[index] + "'");
    model_.promises.emplace_back(std::move(sender), std::move(sender_subject),
                                 std::move(receiver), std::move(receiver_subject),
                                 std::move(body), std::move(condition),
                                 std::move(scope));
  }

  void parse_trust(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 8)
      fail(Errc::SyntaxError, line_no,
           "usage: trust <truster>[subj] -> <trustee>[subj] : <body> = <value>");
    Endpoint from = parse_endpoint(tokens[1], line_no);
    expect(tokens, 2, "->", line_no);
    Endpoint to = parse_endpoint(tokens[3], line_no);
    expect(tokens, 4, ":", line_no);
    expect(tokens, 6, "=", line_no);
    AgentId truster = resolve(from, line_no);
    AgentId trustee = resolve(to, line_no);
    // Defaults mirror the promise duality: subjects are the opposite ends.
    AgentId truster_subject = resolve_subject(from, trustee, line_no);
    AgentId trustee_subject = resolve_subject(to, truster, line_no);
    PromiseBody body = body_at(tokens[5], line_no);
    double value = parse_value(tokens[7], line_no);
    try {
      model_.trust_edges.push_back(make_trust_edge(truster, truster_subject, trustee,
                                                   trustee_subject, body, value));
    } catch (const DomainError& e) {
      fail(e.code(), line_no, e.what());
    }
  }

  void parse_evidence(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 7)
      fail(Errc::SyntaxError, line_no,
           "usage: evidence <observer> <sender> <receiver> <type> kept=<n> broken=<n>");
    EvidenceKey key{declared_agent(tokens[1], line_no), declared_agent(tokens[2], line_no),
                    declared_agent(tokens[3], line_no), PromiseType(tokens[4])};
    EvidenceCounts counts{parse_count(tokens[5], "kept=", line_no),
                          parse_count(tokens[6], "broken=", line_no)};
    if (model_.evidence.entries().contains(key))
      fail(Errc::SyntaxError, line_no, "duplicate evidence record");
    model_.evidence.set_counts(key, counts);
  }

  void parse_reputation(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() < 9 || tokens.size() > 10)
      fail(Errc::SyntaxError, line_no,
           "usage: reputation <source> -> <recipient> about <sender> <receiver> <type> "
           "value=<v> [path=a,b,c]");
    expect(tokens, 2, "->", line_no);
    expect(tokens, 4, "about", line_no);
    AgentId source = declared_agent(tokens[1], line_no);
    AgentId recipient = declared_agent(tokens[3], line_no);
    AgentId about_sender = declared_agent(tokens[5], line_no);
    AgentId about_receiver = declared_agent(tokens[6], line_no);
    PromiseBody body = body_at(tokens[7], line_no);
    if (!tokens[8].starts_with("value="))
      fail(Errc::SyntaxError, line_no, "expected 'value=<v>'");
    double value = parse_value(tokens[8].substr(6), line_no);
    std::vector<AgentId> path;
    if (tokens.size() == 10) {
      if (!tokens[9].starts_with("path="))
        fail(Errc::SyntaxError, line_no, "expected 'path=a,b,c'");
      for (const std::string& name : split_csv(std::string_view(tokens[9]).substr(5)))
        path.push_back(declared_agent(name, line_no));
    }
    try {
      model_.reputations.push_back(make_reputation_message(
          source, recipient, about_sender, about_receiver, body, value, path));
    } catch (const DomainError& e) {
      fail(e.code(), line_no, e.what());
    }
  }

  void parse_incompatible(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 4 || tokens[2] != "#")
      fail(Errc::SyntaxError, line_no, "usage: incompatible <body> # <body>");
    model_.incompatibilities.declare(body_at(tokens[1], line_no),
                                     body_at(tokens[3], line_no));
  }

  GraphModel model_;
};

std::string endpoint_text(const AgentId& agent, const AgentId& subject,
                          const AgentId& subject_default) {
  if (subject == subject_default) return agent.name();
  return agent.name() + "[" + subject.name() + "]";
}

void check_serializable_body(const PromiseBody& body) {
  const std::string notation = to_string(body);
  if (notation.find_first_of(" \t\n") != std::string::npos)
    throw DomainError(Errc::SyntaxError,
                      "body '" + notation + "' cannot appear in a graph file (whitespace)");
}

void check_serializable_agent(const AgentId& agent) {
  if (!file_safe_name(agent.name()))
    throw DomainError(Errc::SyntaxError, "agent name '" + agent.name() +
                                             "' uses characters reserved by the format");
}

std::string csv(const std::vector<AgentId>& agents) {
  std::string out;
  for (const AgentId& a : agents) {
    if (!out.empty()) out += ',';
    out += a.name();
  }
  return out;
}

}  // namespace

bool GraphModel::declared(const AgentId& agent) const {
  return std::find(roster.begin(), roster.end(), agent) != roster.end();
}

PromiseBody parse_body(std::string_view token) {
  std::string_view rest = token;
  bool negated = false;
  if (rest.starts_with("!")) {
    negated = true;
    rest.remove_prefix(1);
  }
  Polarity polarity = Polarity::Plain;
  if (rest.starts_with("+")) {
    polarity = Polarity::Give;
    rest.remove_prefix(1);
  } else if (rest.starts_with("-")) {
    polarity = Polarity::Use;
    rest.remove_prefix(1);
  }
  if (rest.empty())
    throw DomainError(Errc::SyntaxError, "empty promise body in '" + std::string(token) + "'");

  // Truth-assurance labels embed a full body notation, parentheses and all.
  if (rest.starts_with("assert:"))
    return PromiseBody(PromiseType(std::string(rest)), polarity, "", negated);

  std::string constraint;
  auto open = rest.find('(');
  if (open != std::string_view::npos) {
    if (rest.back() != ')' || open == 0)
      throw DomainError(Errc::SyntaxError,
                        "malformed constraint in body '" + std::string(token) + "'");
    constraint = std::string(rest.substr(open + 1, rest.size() - open - 2));
    rest = rest.substr(0, open);
  }
  return PromiseBody(PromiseType(std::string(rest)), polarity, std::move(constraint),
                     negated);
}

GraphModel parse_graph(std::string_view content) { return Parser{}.run(content); }

std::string serialize_graph(const GraphModel& model) {
  std::ostringstream out;
  for (const AgentId& agent : model.roster) {
    check_serializable_agent(agent);
    out << "agent " << agent.name() << '\n';
  }
  for (const auto& [a, b] : model.incompatibilities.pairs()) {
    check_serializable_body(a);
    check_serializable_body(b);
    out << "incompatible " << to_string(a) << " # " << to_string(b) << '\n';
  }
  for (const Promise& p : model.promises) {
    check_serializable_body(p.body());
    out << "promise " << endpoint_text(p.sender(), p.sender_subject(), p.sender())
        << " -> " << endpoint_text(p.receiver(), p.receiver_subject(), p.receiver())
        << " : " << to_string(p.body());
    if (p.condition()) {
      check_serializable_body(*p.condition());
      out << " | " << to_string(*p.condition());
    }
    if (p.scope() != std::set<AgentId>{p.sender(), p.receiver()}) {
      out << " scope=";
      bool first = true;
      for (const AgentId& a : p.scope()) {
        if (!first) out << ',';
        out << a.name();
        first = false;
      }
    }
    out << '\n';
  }
  for (const TrustEdge& e : model.trust_edges) {
    check_serializable_body(e.body);
    out << "trust " << endpoint_text(e.truster, e.truster_subject, e.trustee) << " -> "
        << endpoint_text(e.trustee, e.trustee_subject, e.truster) << " : "
        << to_string(e.body) << " = " << text::format_exact(e.value) << '\n';
  }
  for (const auto& [key, counts] : model.evidence.entries()) {
    out << "evidence " << key.observer.name() << ' ' << key.sender.name() << ' '
        << key.receiver.name() << ' ' << key.type.label() << " kept=" << counts.kept
        << " broken=" << counts.broken << '\n';
  }
  for (const ReputationMessage& msg : model.reputations) {
    check_serializable_body(msg.body);
    out << "reputation " << msg.source.name() << " -> " << msg.recipient.name()
        << " about " << msg.about_sender.name() << ' ' << msg.about_receiver.name()
        << ' ' << to_string(msg.body) << " value=" << text::format_exact(msg.communicated_value)
        << " path=" << csv(msg.path) << '\n';
  }
  return std::move(out).str();
}

GraphModel scenario_to_model(const Scenario& scenario) {
  GraphModel model;
  auto declare = [&model](const AgentId& agent) {
    if (!model.declared(agent)) model.roster.push_back(agent);
  };
  for (const Promise& p : scenario.promises) {
    declare(p.sender());
    declare(p.sender_subject());
    declare(p.receiver());
    declare(p.receiver_subject());
    for (const AgentId& a : p.scope()) declare(a);
  }
  for (const TrustEdge& e : scenario.trust_edges) {
    declare(e.truster);
    declare(e.truster_subject);
    declare(e.trustee);
    declare(e.trustee_subject);
  }
  model.promises = scenario.promises;
  model.trust_edges = scenario.trust_edges;
  return model;
}

}  // namespace ptrust
