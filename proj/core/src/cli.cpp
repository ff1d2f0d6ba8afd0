#include "ptrust/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "ptrust/architectures.hpp"
#include "ptrust/community.hpp"
#include "ptrust/dot.hpp"
#include "ptrust/eigen_oracle.hpp"
#include "ptrust/errors.hpp"
#include "ptrust/expectation.hpp"
#include "ptrust/graph_file.hpp"
#include "ptrust/promise.hpp"
#include "ptrust/reputation.hpp"
#include "ptrust/text.hpp"
#include "ptrust/trust.hpp"

namespace ptrust::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError(Errc::IoError, "cannot write '" + path + "'");
  file << content;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    parts.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  if (!parts.empty() && parts.back().empty()) parts.pop_back();
  return parts;
}

double parse_double_arg(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw DomainError(Errc::SyntaxError, what + ": expected a number, got '" + token + "'");
  }
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  for (const std::string& part : split_list(text))
    values.push_back(parse_double_arg(part, what));
  return values;
}

PolicyPrior parse_prior(const std::string& text) {
  if (text == "trusting") return PolicyPrior::trusting();
  if (text == "neutral") return PolicyPrior::neutral();
  if (text == "untrusting") return PolicyPrior::untrusting();
  return PolicyPrior::custom(parse_double_arg(text, "--prior"));
}

struct CommonFlags {
  int round = -1;
};

std::string fmt(double v, const CommonFlags& flags) {
  return text::format_value(v, flags.round);
}

// --- validate ---------------------------------------------------------

struct ValidateArgs {
  std::string input;
  std::string autonomous;
  bool strict = false;
  bool emit_canonical = false;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  GraphModel model = parse_graph(read_file(args.input));
  if (args.emit_canonical) {
    out << serialize_graph(model);
    return 0;
  }

  std::set<AgentId> autonomous;
  if (args.autonomous.empty())
    autonomous.insert(model.roster.begin(), model.roster.end());
  else
    for (const std::string& name : split_list(args.autonomous))
      autonomous.insert(AgentId{name});

  std::size_t invalid = 0;
  for (std::size_t i = 0; i < model.promises.size(); ++i) {
    ValidationReport report = validate_promise(model.promises[i], autonomous);
    if (!report.valid()) {
      out << "promise " << i + 1 << ": " << report.message << '\n';
      ++invalid;
    }
  }

  std::size_t discharged = 0;
  for (std::size_t i = 0; i < model.promises.size(); ++i) {
    const Promise& p = model.promises[i];
    if (!p.condition()) continue;
    for (std::size_t j = 0; j < model.promises.size(); ++j) {
      if (i == j) continue;
      try {
        discharge_conditional(p, model.promises[j]);
      } catch (const DomainError&) {
        continue;
      }
      out << "discharged: promise " << i + 1 << " by assurance " << j + 1 << '\n';
      ++discharged;
      break;
    }
  }

  auto conflicts = detect_conflicts(model.promises, model.incompatibilities);
  for (const auto& [i, j] : conflicts)
    out << "conflict: promise " << i + 1 << " # promise " << j + 1 << " ("
        << to_string(model.promises[i].body()) << " vs "
        << to_string(model.promises[j].body()) << ")\n";

  out << model.promises.size() << " promises, " << invalid << " invalid, "
      << conflicts.size() << " conflicts, " << discharged << " discharged\n";
  if (args.strict && (invalid > 0 || !conflicts.empty())) return 1;
  return 0;
}

// --- trust ------------------------------------------------------------

struct TrustArgs {
  std::string input;
  std::string observer;
  std::string sender;
  std::string receiver;
  std::string type;
  std::string prior;
  std::string transfer;
  std::string fallback = "prior,transfer";
  std::string observe;
  std::string bayes_likelihoods;
  std::string bayes_evidence;
  bool damnation = false;
  bool pool = false;
  CommonFlags common;
};

int cmd_trust(const TrustArgs& args, std::ostream& out) {
  GraphModel model = parse_graph(read_file(args.input));
  AgentId observer{args.observer};
  AgentId sender{args.sender};
  AgentId receiver{args.receiver};
  PromiseType type{args.type};
  EvidenceKey key{observer, sender, receiver, type};

  EvidenceLedger ledger = model.evidence;  // snapshot; the file stays untouched
  if (!args.observe.empty()) {
    for (const std::string& token : split_list(args.observe)) {
      if (token == "kept" || token == "k" || token == "+")
        ledger.record(key, true);
      else if (token == "broken" || token == "b" || token == "-")
        ledger.record(key, false);
      else
        throw DomainError(Errc::SyntaxError,
                          "--observe entries are kept/k/+ or broken/b/-, got '" +
                              token + "'");
    }
  }

  std::optional<PolicyPrior> prior;
  if (!args.prior.empty()) prior = parse_prior(args.prior);

  double estimate = 0.0;
  std::string basis;

  if (!args.bayes_likelihoods.empty()) {
    std::vector<double> likelihoods =
        parse_double_list(args.bayes_likelihoods, "--bayes-likelihoods");
    if (likelihoods.size() != 2)
      throw DomainError(Errc::SyntaxError,
                        "--bayes-likelihoods wants 'P(e|H),P(e|!H)'");
    BayesHypothesis h{prior.value_or(PolicyPrior::neutral()).probability(),
                      likelihoods[0], likelihoods[1]};
    int step = 0;
    for (const std::string& token : split_list(args.bayes_evidence)) {
      bool positive;
      if (token == "+" || token == "kept" || token == "k")
        positive = true;
      else if (token == "-" || token == "broken" || token == "b")
        positive = false;
      else
        throw DomainError(Errc::SyntaxError,
                          "--bayes-evidence entries are + or -, got '" + token + "'");
      BayesUpdate update = bayes_update(h, positive);
      h = update.hypothesis;
      ++step;
      out << "bayes step " << step << " (" << (positive ? '+' : '-')
          << "): " << fmt(h.p_hypothesis, args.common)
          << (update.degenerate ? " [degenerate]" : "") << '\n';
    }
    estimate = h.p_hypothesis;
    basis = "bayes";
  } else if (args.pool) {
    std::vector<Trial> trials;
    for (const auto& [entry_key, counts] : ledger.entries()) {
      if (entry_key.sender != sender || entry_key.receiver != receiver ||
          entry_key.type != type || counts.total() == 0)
        continue;
      trials.push_back({frequentist_estimate(counts), counts.total()});
    }
    if (trials.empty())
      throw DomainError(Errc::EmptyEnsemble,
                        "no observer has evidence for this promise");
    estimate = combine_ensembles(trials);
    basis = "pooled";
  } else if (args.damnation) {
    estimate = damnation_policy(ledger.counts(key), prior.value_or(PolicyPrior::neutral()));
    basis = "damnation";
  } else if (ledger.has_evidence(key)) {
    estimate = frequentist_estimate(ledger.counts(key));
    basis = "frequentist";
  } else {
    bool resolved = false;
    for (const std::string& step : split_list(args.fallback)) {
      if (step == "prior") {
        if (!prior) continue;
        estimate = initialize_prior(*prior).probability;
        basis = "prior";
        resolved = true;
        break;
      }
      if (step == "transfer") {
        if (args.transfer.empty()) continue;
        TypeMixture mixture;
        for (const std::string& part : split_list(args.transfer)) {
          auto colon = part.find(':');
          if (colon == std::string::npos)
            throw DomainError(Errc::SyntaxError,
                              "--transfer wants type:weight pairs, got '" + part + "'");
          mixture.emplace(PromiseType(part.substr(0, colon)),
                          parse_double_arg(part.substr(colon + 1), "--transfer"));
        }
        try {
          estimate = transfer_evidence(ledger, observer, sender, receiver, type, mixture);
        } catch (const DomainError& e) {
          if (e.code() == Errc::NoDonorEvidence) continue;
          throw;
        }
        basis = "transfer";
        resolved = true;
        break;
      }
      throw DomainError(Errc::SyntaxError,
                        "--fallback entries are 'prior' or 'transfer', got '" + step + "'");
    }
    if (!resolved) {
      estimate = PolicyPrior::neutral().probability();
      basis = "neutral";
    }
  }

  // Prefer the promise actually on file so the edge mirrors its subjects.
  std::optional<Promise> promise;
  for (const Promise& p : model.promises)
    if (p.sender() == sender && p.receiver() == receiver && p.body().type() == type) {
      promise = p;
      break;
    }
  if (!promise) promise = Promise(sender, receiver, plain(type.label()));
  TrustEdge edge = trust_from_expectation(*promise, estimate);

  out << "expectation: " << fmt(estimate, args.common) << '\n';
  out << "basis: " << basis << '\n';
  out << "trust " << edge.truster.name() << " -> " << edge.trustee.name() << " : "
      << to_string(edge.body) << " = " << fmt(edge.value, args.common) << '\n';
  return 0;
}

// --- compose ----------------------------------------------------------

struct ComposeArgs {
  std::string mode;
  std::string values;
  std::string weights;
  bool incompatible = false;
  bool individual = false;
  CommonFlags common;
};

int cmd_compose(const ComposeArgs& args, std::ostream& out) {
  std::vector<double> values = parse_double_list(args.values, "--values");
  if (values.empty()) throw DomainError(Errc::EmptyBundle, "--values is empty");
  std::vector<double> weights;
  if (!args.weights.empty()) weights = parse_double_list(args.weights, "--weights");

  CompositionMode mode = [&]() {
    if (args.mode == "and") return CompositionMode::and_mode();
    if (args.mode == "or") return CompositionMode::or_mode();
    if (args.mode == "xor") return CompositionMode::xor_mode(weights);
    if (args.mode == "ranked") return CompositionMode::ranked(weights);
    if (args.mode == "not") return CompositionMode::not_mode();
    throw DomainError(Errc::SyntaxError,
                      "--mode is one of and|or|xor|ranked|not, got '" + args.mode + "'");
  }();

  // Synthetic bodies b1..bn; --incompatible declares every pair exclusive.
  std::vector<BundleTerm> bundle;
  IncompatibilitySet inc;
  for (std::size_t i = 0; i < values.size(); ++i)
    bundle.push_back({plain("b" + std::to_string(i + 1)), values[i]});
  if (args.incompatible)
    for (std::size_t i = 0; i < bundle.size(); ++i)
      for (std::size_t j = i + 1; j < bundle.size(); ++j)
        inc.declare(bundle[i].body, bundle[j].body);

  double combined = compose(bundle, mode, inc);
  if (args.individual) {
    out << "inputs:";
    for (double v : values) out << ' ' << fmt(v, args.common);
    out << '\n';
  }
  out << fmt(combined, args.common) << '\n';
  return 0;
}

// --- community --------------------------------------------------------

struct CommunityArgs {
  std::string input;
  std::string type;
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  std::vector<std::string> remove;
  bool machine = false;
  bool check_oracle = false;
  CommonFlags common;
};

int cmd_community(const CommunityArgs& args, std::ostream& out) {
  GraphModel model = parse_graph(read_file(args.input));
  TrustMatrix matrix = build_matrix(model.trust_edges, model.roster, PromiseType{args.type});
  for (const std::string& name : args.remove)
    matrix = remove_agent(matrix, AgentId{name});

  CommunityTrustResult result = community_trust(matrix, args.tol, args.max_iter);

  if (args.machine) {
    for (std::size_t i = 0; i < matrix.size(); ++i)
      out << "trusting." << matrix.roster()[i].name() << '='
          << fmt(result.trusting[i], args.common) << '\n';
    for (std::size_t i = 0; i < matrix.size(); ++i)
      out << "trustworthy." << matrix.roster()[i].name() << '='
          << fmt(result.trustworthy[i], args.common) << '\n';
    out << "eigenvalue.trusting=" << fmt(result.eigenvalue_trusting, args.common) << '\n';
    out << "eigenvalue.trustworthy=" << fmt(result.eigenvalue_trustworthy, args.common)
        << '\n';
    out << "iterations=" << result.iterations << '\n';
    out << "converged=" << (result.converged ? "true" : "false") << '\n';
    out << "degenerate=" << (result.degenerate ? "true" : "false") << '\n';
  } else {
    std::size_t name_width = 5;  // "agent"
    for (const AgentId& a : matrix.roster())
      name_width = std::max(name_width, a.name().size());
    std::size_t value_width = 8;
    std::vector<std::string> s_text(matrix.size()), w_text(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      s_text[i] = fmt(result.trusting[i], args.common);
      w_text[i] = fmt(result.trustworthy[i], args.common);
      value_width = std::max({value_width, s_text[i].size(), w_text[i].size()});
    }
    auto pad = [](const std::string& s, std::size_t width) {
      return s + std::string(width - s.size() + 2, ' ');
    };
    out << pad("agent", name_width) << pad("trusting", value_width) << "trustworthy\n";
    for (std::size_t i = 0; i < matrix.size(); ++i)
      out << pad(matrix.roster()[i].name(), name_width) << pad(s_text[i], value_width)
          << w_text[i] << '\n';
    out << "eigenvalue (trusting):    " << fmt(result.eigenvalue_trusting, args.common)
        << '\n';
    out << "eigenvalue (trustworthy): " << fmt(result.eigenvalue_trustworthy, args.common)
        << '\n';
    out << "iterations: " << result.iterations << '\n';
    out << "converged: " << (result.converged ? "yes" : "no") << '\n';
    if (result.degenerate) out << "warning: degenerate spectrum, ranking unreliable\n";
  }

  if (args.check_oracle) {
    OracleEigenPair oracle_s = dense_eigen_oracle(matrix);
    OracleEigenPair oracle_w = dense_eigen_oracle(transpose(matrix));
    auto max_delta = [](const std::vector<double>& a, const std::vector<double>& b) {
      double best = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i)
        best = std::max(best, std::abs(a[i] - b[i]));
      return best;
    };
    out << "oracle.trusting.maxdelta="
        << text::format_value(max_delta(result.trusting, oracle_s.vector)) << '\n';
    out << "oracle.trustworthy.maxdelta="
        << text::format_value(max_delta(result.trustworthy, oracle_w.vector)) << '\n';
  }
  return 0;
}

// --- reputation -------------------------------------------------------

struct ReputationArgs {
  std::string input;
  double w_new = 1.0;
  double w_old = 1.0;
  std::string prior = "neutral";
  std::string distort;
  std::string relay_initial;
  std::string relay_chain;
  CommonFlags common;
};

int cmd_reputation(const ReputationArgs& args, std::ostream& out) {
  if (!args.relay_chain.empty() || !args.relay_initial.empty()) {
    if (args.relay_initial.empty() || args.relay_chain.empty())
      throw DomainError(Errc::SyntaxError,
                        "--relay-initial and --relay-chain go together");
    RelayResult relayed =
        relay_chain(parse_double_arg(args.relay_initial, "--relay-initial"),
                    parse_double_list(args.relay_chain, "--relay-chain"));
    out << "relay: value=" << fmt(relayed.value, args.common)
        << " hops=" << relayed.path_length << '\n';
    return 0;
  }
  if (args.input.empty())
    throw DomainError(Errc::SyntaxError, "--input is required unless relaying");

  GraphModel model = parse_graph(read_file(args.input));
  ReputationPolicy policy{args.w_new, args.w_old};
  PolicyPrior prior = parse_prior(args.prior);

  DistortionMap distortion;
  for (const std::string& part : split_list(args.distort)) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw DomainError(Errc::SyntaxError,
                        "--distort wants agent:factor pairs, got '" + part + "'");
    distortion.emplace(AgentId{part.substr(0, colon)},
                       parse_double_arg(part.substr(colon + 1), "--distort"));
  }

  const PromiseType reputation_type{"reputation"};
  auto trust_in = [&](const AgentId& truster, const AgentId& trustee) -> std::optional<double> {
    for (const TrustEdge& e : model.trust_edges)
      if (e.truster == truster && e.trustee == trustee &&
          e.body.type() == reputation_type)
        return e.value;
    return std::nullopt;
  };

  // Beliefs are keyed per recipient, rated promise, and original valuator,
  // so parallel rumours about the same target never merge silently.
  using BeliefKey = std::tuple<AgentId, AgentId, AgentId, PromiseBody, AgentId>;
  std::map<BeliefKey, BeliefState> beliefs;

  for (std::size_t i = 0; i < model.reputations.size(); ++i) {
    ReputationMessage msg = apply_distortion(model.reputations[i], distortion);
    std::optional<double> relay_trust = trust_in(msg.recipient, msg.source);
    out << "message " << i + 1 << ": " << msg.source.name() << " -> "
        << msg.recipient.name() << " about " << msg.about_sender.name() << " -> "
        << msg.about_receiver.name() << " : " << to_string(msg.body)
        << " communicated=" << fmt(msg.communicated_value, args.common);
    if (!relay_trust) {
      out << " dropped (no trust edge " << msg.recipient.name() << " -> "
          << msg.source.name() << " : reputation)\n";
      continue;
    }
    double borrowed = borrowed_trust(*relay_trust, msg);
    out << " trust_in_source=" << fmt(*relay_trust, args.common)
        << " borrowed=" << fmt(borrowed, args.common) << '\n';

    BeliefKey key{msg.recipient, msg.about_sender, msg.about_receiver, msg.body,
                  originator(msg)};
    auto it = beliefs.find(key);
    if (it == beliefs.end()) {
      // The recipient's own prior valuation seeds the fold: a direct trust
      // edge for the rated promise when one exists, the policy prior otherwise.
      std::optional<double> own;
      for (const TrustEdge& e : model.trust_edges)
        if (e.truster == msg.recipient && e.trustee == msg.about_sender &&
            e.body == msg.body)
          own = e.value;
      BeliefState initial =
          own ? BeliefState{*own, 1.0} : initialize_prior(prior);
      it = beliefs.emplace(key, initial).first;
    }
    it->second = update_trust_with_reputation(it->second, borrowed, policy);
  }

  for (const auto& [key, belief] : beliefs) {
    const auto& [recipient, about_sender, about_receiver, body, origin] = key;
    out << "belief " << recipient.name() << " about " << about_sender.name() << " -> "
        << about_receiver.name() << " : " << to_string(body) << " (origin "
        << origin.name() << ") = " << fmt(belief.probability, args.common)
        << " weight=" << fmt(belief.weight, args.common) << '\n';
  }
  return 0;
}

// --- scenario ---------------------------------------------------------

struct ScenarioTtpArgs {
  std::string users;
  std::string authority;
  std::string unregistered;
  double trust = 0.8;
  std::string out_path;
};

int cmd_scenario_ttp(const ScenarioTtpArgs& args, std::ostream& out) {
  std::vector<AgentId> users;
  for (const std::string& name : split_list(args.users)) users.push_back(AgentId{name});
  std::set<AgentId> registered(users.begin(), users.end());
  for (const std::string& name : split_list(args.unregistered))
    registered.erase(AgentId{name});
  Scenario scenario =
      build_ttp_scenario(users, AgentId{args.authority}, registered, args.trust);
  write_output(args.out_path, serialize_graph(scenario_to_model(scenario)), out);
  return 0;
}

struct ScenarioWotArgs {
  std::string pairs;
  std::string category;
  std::string prior = "neutral";
  std::string trust;  // empty: the category decides
  std::string threshold;
  std::string received;
  std::string out_path;
};

int cmd_scenario_wot(const ScenarioWotArgs& args, std::ostream& out) {
  double trust_value;
  if (!args.trust.empty()) {
    trust_value = parse_double_arg(args.trust, "--trust");
  } else {
    WotCategory category = WotCategory::Somewhat;
    if (!args.category.empty()) {
      if (args.category == "definitely")
        category = WotCategory::Definitely;
      else if (args.category == "somewhat")
        category = WotCategory::Somewhat;
      else if (args.category == "untrustworthy")
        category = WotCategory::Untrustworthy;
      else if (args.category == "unknown")
        category = WotCategory::Unknown;
      else
        throw DomainError(Errc::SyntaxError, "--category is one of "
                                             "definitely|somewhat|untrustworthy|unknown");
    }
    trust_value = wot_category_value(category, parse_prior(args.prior));
  }

  std::vector<Scenario> signings;
  for (const std::string& pair : split_list(args.pairs)) {
    auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw DomainError(Errc::SyntaxError,
                        "--pairs wants owner:agent entries, got '" + pair + "'");
    signings.push_back(build_wot_signing(AgentId{pair.substr(0, colon)},
                                         AgentId{pair.substr(colon + 1)}, trust_value));
  }
  if (signings.empty())
    throw DomainError(Errc::EmptyUserSet, "--pairs produced no signings");
  Scenario merged = merge_scenarios("wot", signings);

  std::string text = serialize_graph(scenario_to_model(merged));
  if (!args.threshold.empty() || !args.received.empty()) {
    if (args.threshold.empty() || args.received.empty())
      throw DomainError(Errc::SyntaxError, "--threshold and --received go together");
    bool accepted =
        threshold_accept(parse_double_list(args.received, "--received"),
                         parse_double_arg(args.threshold, "--threshold"));
    text = std::string("# accept: ") + (accepted ? "yes" : "no") + "\n" + text;
  }
  write_output(args.out_path, text, out);
  return 0;
}

// --- export-dot -------------------------------------------------------

struct ExportDotArgs {
  std::string input;
  std::string out_path;
};

int cmd_export_dot(const ExportDotArgs& args, std::ostream& out) {
  GraphModel model = parse_graph(read_file(args.input));
  write_output(args.out_path, export_dot(model), out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Promise-based trust calculus", "ptrust"};
  app.require_subcommand(1);

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Check promises for invalid obligations, conflicts and discharges");
  validate->add_option("--input", validate_args.input, "graph file")->required();
  validate->add_option("--autonomous", validate_args.autonomous,
                       "comma list of autonomous agents (default: all)");
  validate->add_flag("--strict", validate_args.strict, "exit 1 on findings");
  validate->add_flag("--emit-canonical", validate_args.emit_canonical,
                     "print the canonical serialization instead of a report");

  TrustArgs trust_args;
  CLI::App* trust = app.add_subcommand(
      "trust", "Estimate an expectation from evidence and emit the trust edge");
  trust->add_option("--input", trust_args.input, "graph file")->required();
  trust->add_option("--observer", trust_args.observer, "whose expectation")->required();
  trust->add_option("--sender", trust_args.sender, "promise sender")->required();
  trust->add_option("--receiver", trust_args.receiver, "promise receiver")->required();
  trust->add_option("--type", trust_args.type, "promise type")->required();
  trust->add_option("--prior", trust_args.prior,
                    "trusting|neutral|untrusting or a probability");
  trust->add_option("--transfer", trust_args.transfer, "type:weight donor mixture");
  trust->add_option("--fallback", trust_args.fallback,
                    "no-evidence resolution order (default prior,transfer)");
  trust->add_option("--observe", trust_args.observe,
                    "extra outcomes to record first, e.g. kept,broken,kept");
  trust->add_option("--bayes-likelihoods", trust_args.bayes_likelihoods,
                    "P(e|H),P(e|!H) for iterative updating");
  trust->add_option("--bayes-evidence", trust_args.bayes_evidence,
                    "comma list of +/- test outcomes");
  trust->add_flag("--damnation", trust_args.damnation,
                  "one broken promise forfeits all trust");
  trust->add_flag("--pool", trust_args.pool, "pool every observer's evidence");
  trust->add_option("--round", trust_args.common.round, "fixed decimals in output");
  trust->get_option("--damnation")->excludes(trust->get_option("--pool"));

  ComposeArgs compose_args;
  CLI::App* compose = app.add_subcommand("compose", "Combine promise expectations");
  compose->add_option("--mode", compose_args.mode, "and|or|xor|ranked|not")->required();
  compose->add_option("--values", compose_args.values, "comma list in [0,1]")->required();
  compose->add_option("--weights", compose_args.weights,
                      "ranked: convex weights; xor: likelihood weights");
  compose->add_flag("--incompatible", compose_args.incompatible,
                    "treat every pair of promises as mutually exclusive");
  compose->add_flag("--individual", compose_args.individual,
                    "echo the individual expectations too");
  compose->add_option("--round", compose_args.common.round, "fixed decimals in output");

  CommunityArgs community_args;
  CLI::App* community = app.add_subcommand(
      "community", "Community trust: trusting and trustworthiness rankings");
  community->add_option("--input", community_args.input, "graph file")->required();
  community->add_option("--type", community_args.type, "promise type")->required();
  community->add_option("--tol", community_args.tol, "convergence tolerance");
  community->add_option("--max-iter", community_args.max_iter, "iteration cap");
  community->add_option("--remove", community_args.remove,
                        "drop an agent before ranking (repeatable)");
  community->add_flag("--machine", community_args.machine, "key=value output");
  community->add_flag("--check-oracle", community_args.check_oracle,
                      "cross-check against the dense eigensolver");
  community->add_option("--round", community_args.common.round,
                        "fixed decimals in output");

  ReputationArgs reputation_args;
  CLI::App* reputation = app.add_subcommand(
      "reputation", "Propagate communicated valuations and fold them into beliefs");
  reputation->add_option("--input", reputation_args.input, "graph file");
  reputation->add_option("--w-new", reputation_args.w_new, "weight of incoming value");
  reputation->add_option("--w-old", reputation_args.w_old, "weight of held value");
  reputation->add_option("--prior", reputation_args.prior,
                         "initial belief when no direct trust exists");
  reputation->add_option("--distort", reputation_args.distort,
                         "agent:factor lying relayers");
  reputation->add_option("--relay-initial", reputation_args.relay_initial,
                         "standalone relay: starting value");
  reputation->add_option("--relay-chain", reputation_args.relay_chain,
                         "standalone relay: comma list of hop trusts");
  reputation->add_option("--round", reputation_args.common.round,
                         "fixed decimals in output");

  CLI::App* scenario = app.add_subcommand("scenario", "Emit architecture promise graphs");
  scenario->require_subcommand(1);

  ScenarioTtpArgs ttp_args;
  CLI::App* ttp = scenario->add_subcommand("ttp", "Trusted third party");
  ttp->add_option("--users", ttp_args.users, "comma list of users")->required();
  ttp->add_option("--authority", ttp_args.authority, "the central agent")->required();
  ttp->add_option("--unregistered", ttp_args.unregistered,
                  "users that skip identity registration");
  ttp->add_option("--trust", ttp_args.trust, "trust placed in the emitted promises");
  ttp->add_option("--out", ttp_args.out_path, "write the graph here instead of stdout");

  ScenarioWotArgs wot_args;
  CLI::App* wot = scenario->add_subcommand("wot", "Web of trust key signing");
  wot->add_option("--pairs", wot_args.pairs, "owner:agent signings")->required();
  wot->add_option("--category", wot_args.category,
                  "definitely|somewhat|untrustworthy|unknown");
  wot->add_option("--prior", wot_args.prior, "prior used by the unknown category");
  wot->add_option("--trust", wot_args.trust, "override the category value");
  wot->add_option("--threshold", wot_args.threshold, "acceptance threshold");
  wot->add_option("--received", wot_args.received, "comma list of received valuations");
  wot->add_option("--out", wot_args.out_path, "write the graph here instead of stdout");

  ExportDotArgs dot_args;
  CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  export_dot_cmd->add_option("--input", dot_args.input, "graph file")->required();
  export_dot_cmd->add_option("--out", dot_args.out_path,
                             "write the DOT here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ptrust: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate) return cmd_validate(validate_args, out);
    if (*trust) return cmd_trust(trust_args, out);
    if (*compose) return cmd_compose(compose_args, out);
    if (*community) return cmd_community(community_args, out);
    if (*reputation) return cmd_reputation(reputation_args, out);
    if (*ttp) return cmd_scenario_ttp(ttp_args, out);
    if (*wot) return cmd_scenario_wot(wot_args, out);
    if (*export_dot_cmd) return cmd_export_dot(dot_args, out);
  } catch (const DomainError& e) {
    err << "ptrust: ";
    if (e.line() > 0) err << "line " << e.line() << ": ";
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "ptrust: " << e.what() << '\n';
    return 1;
  }
  err << "ptrust: no subcommand selected\n";
  return 2;
}

}  // namespace ptrust::cli
