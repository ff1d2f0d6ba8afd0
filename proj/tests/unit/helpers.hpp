#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ptrust/errors.hpp"
#include "ptrust/promise.hpp"

namespace ptrust::testing {

// Runs fn and reports which domain error it raised, if any.
template <class Fn>
std::optional<Errc> error_code_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const DomainError& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::mt19937& rng() {
  static std::mt19937 engine(20160901u);
  return engine;
}

inline double uniform01() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng());
}

// Value on the 2^-20 grid: every product/sum of a few of these is exactly
// representable, which keeps "exact" property checks honest.
inline double dyadic01() {
  return static_cast<double>(rng()() & 0xFFFFFu) / static_cast<double>(1 << 20);
}

// Convex weights as an integer partition of 2^20, so they sum to 1 exactly.
inline std::vector<double> dyadic_convex_weights(std::size_t n) {
  std::vector<std::uint32_t> cuts{0, 1u << 20};
  std::uniform_int_distribution<std::uint32_t> pick(0, 1u << 20);
  for (std::size_t i = 1; i < n; ++i) cuts.push_back(pick(rng()));
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> weights;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    weights.push_back(static_cast<double>(cuts[i] - cuts[i - 1]) /
                      static_cast<double>(1 << 20));
  return weights;
}

inline PromiseBody random_body() {
  static const std::vector<std::string> labels{"pay", "deliver", "web", "respond", "backup"};
  static const std::vector<Polarity> polarities{Polarity::Give, Polarity::Use,
                                                Polarity::Plain};
  std::uniform_int_distribution<std::size_t> label_pick(0, labels.size() - 1);
  std::uniform_int_distribution<std::size_t> pol_pick(0, polarities.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::string constraint;
  if (coin(rng())) constraint = std::to_string(rng()() % 10);
  return PromiseBody(PromiseType(labels[label_pick(rng())]),
                     polarities[pol_pick(rng())], constraint, coin(rng()) == 1);
}

}  // namespace ptrust::testing
