#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "ptrust/errors.hpp"
#include "ptrust/trust.hpp"

using namespace ptrust;
using ptrust::testing::error_code_of;

TEST_CASE("trust mirrors the promise: the receiver values the sender") {
  Promise promise(AgentId{"s"}, AgentId{"r"}, plain("pay"));
  TrustEdge edge = trust_from_expectation(promise, 0.3);
  CHECK(edge.truster == AgentId{"r"});
  CHECK(edge.trustee == AgentId{"s"});
  CHECK(edge.body == plain("pay"));
  CHECK(edge.value == doctest::Approx(0.3));

  CHECK(trust_from_expectation(promise, 0.0).value == 0.0);
  CHECK(error_code_of([&] { trust_from_expectation(promise, 1.2); }) == Errc::OutOfRange);
  CHECK(error_code_of([&] { trust_from_expectation(promise, -0.1); }) == Errc::OutOfRange);
}

TEST_CASE("AND multiplies") {
  CHECK(compose_and(std::vector<double>{0.1, 0.2}) == doctest::Approx(0.02));
  CHECK(compose_and(std::vector<double>{0.37}) == doctest::Approx(0.37));
  CHECK(compose_and(std::vector<double>{0.9, 0.0, 0.8}) == 0.0);
}

TEST_CASE("OR is exact inclusion-exclusion") {
  CHECK(compose_or(std::vector<double>{0.1, 0.2}) == doctest::Approx(0.28));
  CHECK(compose_or(std::vector<double>{0.37}) == doctest::Approx(0.37));
  CHECK(compose_or(std::vector<double>{0.4, 1.0, 0.2}) == 1.0);
}

TEST_CASE("weighted XOR reproduces the service-level example") {
  // E(4)=0.1, E(5)=0.2 under the self-weight policy.
  std::vector<XorTerm> terms{{0.1, 0.1}, {0.2, 0.2}};
  double combined = compose_xor_weighted(terms);
  CHECK(combined == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(std::abs(combined - 0.1667) < 5e-4);

  CHECK(compose_xor_weighted(std::vector<XorTerm>{{0.42, 7.0}}) == doctest::Approx(0.42));
  CHECK(compose_xor_weighted(std::vector<XorTerm>{{0.3, 1.0}, {0.5, 1.0}}) ==
        doctest::Approx(0.4));
  CHECK(error_code_of([] {
          compose_xor_weighted(std::vector<XorTerm>{{0.3, 0.0}, {0.5, 0.0}});
        }) == Errc::AllWeightsZero);
}

TEST_CASE("RANKED is a convex combination") {
  std::vector<double> values{0.1, 0.2};
  std::vector<double> weights{0.5, 0.5};
  CHECK(compose_ranked(values, weights) == doctest::Approx(0.15));
  CHECK(compose_ranked(std::vector<double>{0.8}, std::vector<double>{1.0}) ==
        doctest::Approx(0.8));
  CHECK(error_code_of([] {
          compose_ranked(std::vector<double>{0.1, 0.2}, std::vector<double>{0.4, 0.4});
        }) == Errc::WeightsNotConvex);
}

TEST_CASE("NOT complements") {
  CHECK(compose_not(0.3) == doctest::Approx(0.7));
  CHECK(compose_not(0.0) == 1.0);
  CHECK(compose_not(1.0) == 0.0);
  CHECK(compose_not(compose_not(0.3)) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("the dispatcher applies the incompatibility rules") {
  PromiseBody four = plain("respond", "4ms");
  PromiseBody five = plain("respond", "5ms");
  IncompatibilitySet inc;
  inc.declare(four, five);
  std::vector<BundleTerm> bundle{{four, 0.1}, {five, 0.2}};

  SUBCASE("AND over an incompatible pair is exactly zero") {
    CHECK(compose(bundle, CompositionMode::and_mode(), inc) == 0.0);
  }
  SUBCASE("AND over compatible bodies multiplies") {
    std::vector<BundleTerm> ok{{plain("pay"), 0.5}, {plain("deliver"), 0.5}};
    CHECK(compose(ok, CompositionMode::and_mode(), inc) == doctest::Approx(0.25));
  }
  SUBCASE("OR refuses incompatible bodies") {
    CHECK(error_code_of([&] { compose(bundle, CompositionMode::or_mode(), inc); }) ==
          Errc::IncompatibleOr);
  }
  SUBCASE("XOR is exactly for alternatives") {
    CHECK(compose(bundle, CompositionMode::xor_mode(), inc) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  }
  SUBCASE("explicit XOR weights override the self-weight policy") {
    CHECK(compose(bundle, CompositionMode::xor_mode({1.0, 1.0}), inc) ==
          doctest::Approx(0.15));
  }
  SUBCASE("NOT wants exactly one term") {
    CHECK(compose(std::vector<BundleTerm>{{four, 0.25}}, CompositionMode::not_mode(),
                  inc) == doctest::Approx(0.75));
    CHECK(error_code_of([&] { compose(bundle, CompositionMode::not_mode(), inc); }) ==
          Errc::WrongArity);
  }
  SUBCASE("empty bundles are rejected") {
    CHECK(error_code_of([&] { compose({}, CompositionMode::and_mode(), inc); }) ==
          Errc::EmptyBundle);
  }
  SUBCASE("values outside [0,1] are rejected") {
    std::vector<BundleTerm> bad{{four, 1.0001}};
    CHECK(error_code_of([&] { compose(bad, CompositionMode::and_mode(), inc); }) ==
          Errc::OutOfRange);
  }
}

TEST_CASE("composition properties over random vectors") {
  IncompatibilitySet inc;
  for (int round = 0; round < 1000; ++round) {
    std::size_t n = 1 + testing::rng()() % 6;
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(testing::dyadic01());
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());

    double and_v = compose_and(values);
    double or_v = compose_or(values);
    CHECK(and_v >= 0.0);
    CHECK(and_v <= lo);
    CHECK(or_v >= hi);
    CHECK(or_v <= 1.0);

    std::vector<double> weights = testing::dyadic_convex_weights(n);
    double ranked = compose_ranked(values, weights);
    CHECK(ranked >= lo);
    CHECK(ranked <= hi);

    if (hi > 0.0) {
      std::vector<XorTerm> terms;
      for (double v : values) terms.push_back({v, v});
      double xor_v = compose_xor_weighted(terms);
      CHECK(xor_v >= lo);
      CHECK(xor_v <= hi);
    }

    double x = values.front();
    CHECK(compose_not(compose_not(x)) == x);  // exact on the dyadic grid
  }
}

TEST_CASE("AND and OR are commutative and associative under regrouping") {
  for (int round = 0; round < 200; ++round) {
    std::vector<double> values;
    std::size_t n = 2 + testing::rng()() % 5;
    for (std::size_t i = 0; i < n; ++i) values.push_back(testing::uniform01());

    std::vector<double> shuffled = values;
    std::shuffle(shuffled.begin(), shuffled.end(), testing::rng());
    CHECK(compose_and(shuffled) == doctest::Approx(compose_and(values)).epsilon(1e-12));
    CHECK(compose_or(shuffled) == doctest::Approx(compose_or(values)).epsilon(1e-12));

    // Regroup: fold a prefix first, then combine with the rest.
    std::size_t split = 1 + testing::rng()() % (n - 1);
    std::vector<double> head(values.begin(), values.begin() + split);
    std::vector<double> tail(values.begin() + split, values.end());
    std::vector<double> grouped_and{compose_and(head), compose_and(tail)};
    CHECK(compose_and(grouped_and) == doctest::Approx(compose_and(values)).epsilon(1e-12));
    std::vector<double> grouped_or{compose_or(head), compose_or(tail)};
    CHECK(compose_or(grouped_or) == doctest::Approx(compose_or(values)).epsilon(1e-12));
  }
}
