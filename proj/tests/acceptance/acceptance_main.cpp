// Acceptance harness: every release gate runs here, one line per criterion.
// Usage: ptrust_acceptance <fixture-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptrust/architectures.hpp"
#include "ptrust/community.hpp"
#include "ptrust/eigen_oracle.hpp"
#include "ptrust/expectation.hpp"
#include "ptrust/graph_file.hpp"
#include "ptrust/promise.hpp"
#include "ptrust/reputation.hpp"
#include "ptrust/trust.hpp"

using namespace ptrust;

namespace {

std::string g_fixture_dir;

std::string read_fixture(const std::string& name) {
  std::ifstream in(g_fixture_dir + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::mt19937 fresh_rng() { return std::mt19937(424242u); }

double dyadic01(std::mt19937& rng) {
  return static_cast<double>(rng() & 0xFFFFFu) / static_cast<double>(1 << 20);
}

std::vector<double> dyadic_convex(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> cuts{0, 1u << 20};
  std::uniform_int_distribution<std::uint32_t> pick(0, 1u << 20);
  for (std::size_t i = 1; i < n; ++i) cuts.push_back(pick(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> weights;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    weights.push_back(static_cast<double>(cuts[i] - cuts[i - 1]) /
                      static_cast<double>(1 << 20));
  return weights;
}

TrustMatrix fixture_matrix() {
  GraphModel model = parse_graph(read_fixture("billing8.ptg"));
  return build_matrix(model.trust_edges, model.roster, PromiseType{"pay"});
}

void check_vector(Check& check, const std::vector<double>& got,
                  const std::vector<double>& want, double tol, const std::string& name) {
  check.require(got.size() == want.size(), name + ": size mismatch");
  for (std::size_t i = 0; i < want.size() && check.ok; ++i)
    check.require(std::abs(got[i] - want[i]) <= tol,
                  name + "[" + std::to_string(i + 1) + "] = " + std::to_string(got[i]) +
                      ", want " + std::to_string(want[i]) + " +/- " + std::to_string(tol));
}

// 1. Eight agents: eleven valuations reproduce the expected S and W within
//    +/-0.015 after max-normalization, in under a second.
Check criterion_1() {
  Check check;
  auto started = std::chrono::steady_clock::now();
  CommunityTrustResult result = community_trust(fixture_matrix());
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
  check.require(result.converged, "iteration did not converge");
  check_vector(check, result.trusting, {0.21, 0.31, 0.10, 0.10, 0.10, 1.00, 0.94, 0.50},
               0.015, "S8");
  check_vector(check, result.trustworthy, {0, 0, 0, 0, 0, 0.55, 0.65, 1.00}, 0.015, "W8");
  check.require(elapsed.count() < 1.0, "took " + std::to_string(elapsed.count()) + "s");
  if (check.ok) check.detail = "S8, W8 within 0.015; " + std::to_string(elapsed.count()) + "s";
  return check;
}

// 2. Removing agent 8: the reduced vectors match and the most-trustworthy
//    agent shifts from 8 to 7 exactly.
Check criterion_2() {
  Check check;
  TrustMatrix full = fixture_matrix();
  CommunityTrustResult before = community_trust(full);
  CommunityTrustResult after = community_trust(remove_agent(full, AgentId{"8"}));
  check.require(after.converged, "reduced iteration did not converge");
  check_vector(check, after.trusting, {0.37, 0.55, 0.17, 0.17, 0.17, 1.00, 0.92}, 0.015,
               "S7");
  check_vector(check, after.trustworthy, {0, 0, 0, 0, 0, 0.91, 1.00}, 0.015, "W7");
  auto argmax = [](const std::vector<double>& v) {
    return std::max_element(v.begin(), v.end()) - v.begin();
  };
  check.require(argmax(before.trustworthy) == 7, "full-graph argmax is not agent 8");
  check.require(argmax(after.trustworthy) == 6, "reduced argmax is not agent 7");
  if (check.ok) check.detail = "S7, W7 within 0.015; argmax W moved 8 -> 7";
  return check;
}

// 3. Service-level example: self-weight XOR gives 0.1667 +/- 0.0005
//    and AND over the incompatible pair is exactly zero.
Check criterion_3() {
  Check check;
  PromiseBody four = plain("respond", "4ms");
  PromiseBody five = plain("respond", "5ms");
  IncompatibilitySet inc;
  inc.declare(four, five);
  std::vector<BundleTerm> bundle{{four, 0.1}, {five, 0.2}};

  double xor_value = compose(bundle, CompositionMode::xor_mode(), inc);
  check.require(std::abs(xor_value - 0.1667) <= 0.0005,
                "XOR = " + std::to_string(xor_value));
  double and_value = compose(bundle, CompositionMode::and_mode(), inc);
  check.require(and_value == 0.0, "AND = " + std::to_string(and_value));
  if (check.ok) check.detail = "XOR = " + std::to_string(xor_value) + ", AND = 0";
  return check;
}

// 4. Ensemble pooling equals the pooled-frequency computation to 1e-12 for
//    1,000 random count pairs.
Check criterion_4() {
  Check check;
  std::mt19937 rng = fresh_rng();
  std::uniform_int_distribution<std::uint64_t> count(0, 100000);
  int tested = 0;
  double worst = 0.0;
  while (tested < 1000) {
    std::uint64_t n1 = count(rng), n0 = count(rng), m1 = count(rng), m0 = count(rng);
    if (n1 + n0 == 0 || m1 + m0 == 0) continue;
    ++tested;
    std::vector<Trial> trials{
        {static_cast<double>(n1) / static_cast<double>(n1 + n0), n1 + n0},
        {static_cast<double>(m1) / static_cast<double>(m1 + m0), m1 + m0}};
    double pooled =
        static_cast<double>(n1 + m1) / static_cast<double>(n1 + n0 + m1 + m0);
    double difference = std::abs(combine_ensembles(trials) - pooled);
    worst = std::max(worst, difference);
    check.require(difference <= 1e-12, "difference " + std::to_string(difference));
    if (!check.ok) break;
  }
  if (check.ok) {
    char detail[80];
    std::snprintf(detail, sizeof(detail), "1000 pairs, worst difference %.2e", worst);
    check.detail = detail;
  }
  return check;
}

// 5. For 200 random non-negative matrices (N <= 8) the iteration matches the
//    dense oracle: vector within 1e-6, eigenvalue within 1e-8.
Check criterion_5() {
  Check check;
  std::mt19937 rng = fresh_rng();
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::uniform_real_distribution<double> entry(0.0, 1.0);
  int compared = 0, skipped = 0;
  double worst_vector = 0.0, worst_value = 0.0;
  for (int round = 0; round < 200; ++round) {
    std::size_t n = size(rng);
    std::vector<AgentId> roster;
    for (std::size_t i = 0; i < n; ++i) roster.push_back(AgentId{"a" + std::to_string(i)});
    TrustMatrix matrix(roster, PromiseType{"pay"});
    bool sparse = round % 4 == 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!sparse || entry(rng) < 0.7) matrix.set(i, j, entry(rng));

    EigenResult iterated = principal_eigenvector(matrix);
    // Degenerate spectra and zero spectral radii have no unique principal
    // vector to compare against.
    if (iterated.degenerate || iterated.eigenvalue <= 1e-12) {
      ++skipped;
      continue;
    }
    check.require(iterated.converged, "round " + std::to_string(round) + " not converged");
    if (!check.ok) break;
    OracleEigenPair reference = dense_eigen_oracle(matrix);
    double value_diff = std::abs(iterated.eigenvalue - reference.eigenvalue);
    worst_value = std::max(worst_value, value_diff);
    check.require(value_diff <= 1e-8, "eigenvalue differs by " + std::to_string(value_diff));
    for (std::size_t i = 0; i < n; ++i) {
      double vector_diff = std::abs(iterated.vector[i] - reference.vector[i]);
      worst_vector = std::max(worst_vector, vector_diff);
      check.require(vector_diff <= 1e-6, "vector differs by " + std::to_string(vector_diff));
    }
    if (!check.ok) break;
    ++compared;
  }
  check.require(compared >= 190, "only compared " + std::to_string(compared));
  if (check.ok) {
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d matrices (skipped %d), worst deltas: vector %.2e, eigenvalue %.2e",
                  compared, skipped, worst_vector, worst_value);
    check.detail = detail;
  }
  return check;
}

// 6. 10,000 random value vectors (n <= 6): AND <= min, OR >= max, RANKED and
//    XOR within [min, max], NOT involution exact, everything in [0,1].
Check criterion_6() {
  Check check;
  std::mt19937 rng = fresh_rng();
  for (int round = 0; round < 10000 && check.ok; ++round) {
    std::size_t n = 1 + rng() % 6;
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(dyadic01(rng));
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());

    double and_v = compose_and(values);
    check.require(and_v >= 0.0 && and_v <= lo, "AND left [0, min]");
    double or_v = compose_or(values);
    check.require(or_v >= hi && or_v <= 1.0, "OR left [max, 1]");

    double ranked = compose_ranked(values, dyadic_convex(rng, n));
    check.require(ranked >= lo && ranked <= hi, "RANKED left [min, max]");

    if (hi > 0.0) {
      std::vector<XorTerm> terms;
      for (double v : values) terms.push_back({v, v});
      double xor_v = compose_xor_weighted(terms);
      check.require(xor_v >= lo && xor_v <= hi, "XOR left [min, max]");
    }

    for (double v : values)
      check.require(compose_not(compose_not(v)) == v, "NOT involution not exact");
  }
  if (check.ok) check.detail = "10000 vectors";
  return check;
}

// 7. Bayes update: uninformative fixed point exact, absorption exact,
//    monotone in P(e|H) over a 100-point grid.
Check criterion_7() {
  Check check;
  std::mt19937 rng = fresh_rng();
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  for (int i = 0; i < 500 && check.ok; ++i) {
    double p = uniform(rng), like = uniform(rng);
    check.require(bayes_update({p, like, like}, true).hypothesis.p_hypothesis == p,
                  "uninformative fixed point violated");
    check.require(bayes_update({p, like, like}, false).hypothesis.p_hypothesis == p,
                  "uninformative fixed point violated (negative)");
  }
  for (int i = 0; i < 500 && check.ok; ++i) {
    double like_h = uniform(rng), like_n = uniform(rng);
    for (bool positive : {true, false}) {
      check.require(
          bayes_update({1.0, like_h, like_n}, positive).hypothesis.p_hypothesis == 1.0,
          "absorption at 1 violated");
      check.require(
          bayes_update({0.0, like_h, like_n}, positive).hypothesis.p_hypothesis == 0.0,
          "absorption at 0 violated");
    }
  }
  for (int trial = 0; trial < 20 && check.ok; ++trial) {
    double prior = uniform(rng);
    double like_not = uniform(rng);
    double previous = -1.0;
    for (int k = 1; k <= 100; ++k) {
      double posterior =
          bayes_update({prior, k / 100.0, like_not}, true).hypothesis.p_hypothesis;
      check.require(posterior >= previous, "monotonicity violated");
      previous = posterior;
    }
  }
  if (check.ok) check.detail = "fixed point, absorption, monotone grid";
  return check;
}

// 8. Two relay routes through a 4-node graph deliver strictly different
//    borrowed-trust values for the same target promise.
Check criterion_8() {
  Check check;
  GraphModel model = parse_graph(
      "agent a\nagent b\nagent c\nagent d\nagent s\nagent r\n"
      "trust a -> s : deliver = 0.9\n"
      "trust b -> a : reputation = 1.0\n"
      "trust c -> a : reputation = 0.5\n"
      "trust d -> b : reputation = 0.8\n"
      "trust d -> c : reputation = 0.8\n");

  auto relay_trust = [&](const AgentId& truster, const AgentId& trustee) {
    for (const TrustEdge& e : model.trust_edges)
      if (e.truster == truster && e.trustee == trustee &&
          e.body.type() == PromiseType{"reputation"})
        return e.value;
    throw std::runtime_error("missing relay edge");
  };

  // a's own valuation of (s -deliver-> r) travels a->b->d and a->c->d; each
  // hop borrows through its trust in the previous relayer.
  const double valuation = 0.9;
  auto route = [&](const AgentId& middle) {
    ReputationMessage hop1 = make_reputation_message(
        AgentId{"a"}, middle, AgentId{"s"}, AgentId{"r"}, plain("deliver"), valuation);
    double at_middle = borrowed_trust(relay_trust(middle, AgentId{"a"}), hop1);
    ReputationMessage hop2 =
        make_reputation_message(middle, AgentId{"d"}, AgentId{"s"}, AgentId{"r"},
                                plain("deliver"), at_middle, {AgentId{"a"}, middle});
    return borrowed_trust(relay_trust(AgentId{"d"}, middle), hop2);
  };

  double via_b = route(AgentId{"b"});
  double via_c = route(AgentId{"c"});
  check.require(via_b != via_c, "routes delivered the same value");
  check.require(via_b > via_c, "expected the reliable route to dominate");
  if (check.ok)
    check.detail = "via b = " + std::to_string(via_b) + ", via c = " +
                   std::to_string(via_c);
  return check;
}

// 9. parse -> serialize -> parse is the identity on every fixture and on
//    both architecture scenario outputs.
Check criterion_9() {
  Check check;
  std::vector<std::pair<std::string, std::string>> documents;
  documents.emplace_back("billing8.ptg", read_fixture("billing8.ptg"));
  documents.emplace_back("mixed.ptg", read_fixture("mixed.ptg"));

  std::vector<AgentId> users{AgentId{"u1"}, AgentId{"u2"}, AgentId{"u3"}};
  documents.emplace_back(
      "ttp", serialize_graph(scenario_to_model(build_ttp_scenario(
                 users, AgentId{"ca"}, {users.begin(), users.end()}))));
  std::vector<Scenario> signings{build_wot_signing(AgentId{"a"}, AgentId{"b"}),
                                 build_wot_signing(AgentId{"b"}, AgentId{"c"})};
  documents.emplace_back(
      "wot", serialize_graph(scenario_to_model(merge_scenarios("wot", signings))));

  for (const auto& [name, text] : documents) {
    GraphModel first = parse_graph(text);
    std::string canonical = serialize_graph(first);
    GraphModel second = parse_graph(canonical);
    check.require(second == first, name + ": models differ after round-trip");
    check.require(serialize_graph(second) == canonical, name + ": not canonical");
  }
  if (check.ok) check.detail = "2 fixtures + ttp + wot";
  return check;
}

}  // namespace

int main(int argc, char** argv) {
  g_fixture_dir = argc > 1 ? argv[1] : "tests/fixtures";

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"billing example, 8 agents", criterion_1},
      {"billing example reduced to 7 agents", criterion_2},
      {"service-level XOR and incompatible AND", criterion_3},
      {"ensemble pooling identity", criterion_4},
      {"iteration vs dense oracle", criterion_5},
      {"composition property suite", criterion_6},
      {"bayes update properties", criterion_7},
      {"path-dependent reputation", criterion_8},
      {"graph file round-trips", criterion_9},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      check = criteria[i].second();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && check.ok;
    std::cout << (check.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
              << criteria[i].first << (check.detail.empty() ? "" : " (" + check.detail + ")")
              << '\n';
  }
  return all_ok ? 0 : 1;
}
