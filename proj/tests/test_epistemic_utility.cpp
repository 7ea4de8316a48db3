#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace juror;
using namespace juror::testing;

namespace {

std::vector<PropositionPair> single_pair(std::size_t ground, std::initializer_list<std::size_t> points) {
  return {PropositionPair{"s", make_point_set(ground, points)}};
}

DoxasticState state(std::initializer_list<Attitude> attitudes) { return DoxasticState{std::vector<Attitude>(attitudes)}; }

}  // namespace

TEST_CASE("score") {
  ScoreWeights weights(1, 3);
  auto pairs = single_pair(2, {0});
  CHECK(score({}, DoxasticState{}, 0, weights) == 0);
  CHECK(score(pairs, state({Attitude::kDisbelieve}), 0, weights) == 0);
  CHECK(score(pairs, state({Attitude::kBelieve}), 0, weights) == 1);
  CHECK(score(pairs, state({Attitude::kBelieve}), 1, weights) == -3);
  CHECK_THROWS_AS(score(pairs, DoxasticState{}, 0, weights), Error);
  CHECK_THROWS_AS(ScoreWeights(0, 1), Error);
  CHECK_THROWS_AS(ScoreWeights(1, -1), Error);
}

TEST_CASE("expected score of a single belief expands to pR - (1-p)W") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    ScoreWeights weights(random_rational_between(rng, 0, 5), random_rational_between(rng, 0, 5));
    Rational p = random_rational_closed(rng, 0, 1);
    Charge charge(BooleanSubalgebra::discrete(2), {p, 1 - p});
    auto pairs = single_pair(2, {0});
    CHECK(expected_score(pairs, state({Attitude::kBelieve}), charge, weights) ==
          p * weights.reward - (1 - p) * weights.penalty);
    CHECK(expected_score(pairs, state({Attitude::kDisbelieve}), charge, weights) == 0);
  }
}

TEST_CASE("at p = W/(R+W) belief and disbelief score the same") {
  ScoreWeights weights(2, 5);
  Rational t = belief_threshold(weights);
  CHECK(t == Rational(5, 7));
  Charge charge(BooleanSubalgebra::discrete(2), {t, 1 - t});
  auto pairs = single_pair(2, {0});
  CHECK(expected_score(pairs, state({Attitude::kBelieve}), charge, weights) ==
        expected_score(pairs, state({Attitude::kDisbelieve}), charge, weights));
}

TEST_CASE("optimal doxastic state thresholds at W/(R+W)") {
  ScoreWeights weights(1, 3);
  CHECK(belief_threshold(weights) == Rational(3, 4));
  auto pairs = single_pair(2, {0});

  Charge above(BooleanSubalgebra::discrete(2), {Rational(4, 5), Rational(1, 5)});
  auto best = optimal_doxastic_state(pairs, above, weights);
  CHECK(best.state == state({Attitude::kBelieve}));
  CHECK_FALSE(best.ties[0]);
  auto brute = brute_force_optimal(pairs, above, weights);
  REQUIRE(brute.size() == 1);
  CHECK(brute[0] == best.state);

  Charge at(BooleanSubalgebra::discrete(2), {Rational(3, 4), Rational(1, 4)});
  auto tie = optimal_doxastic_state(pairs, at, weights);
  CHECK(tie.state == state({Attitude::kBelieve}));
  CHECK(tie.ties[0]);
  CHECK(brute_force_optimal(pairs, at, weights).size() == 2);

  Charge below(BooleanSubalgebra::discrete(2), {Rational(1, 2), Rational(1, 2)});
  CHECK(optimal_doxastic_state(pairs, below, weights).state == state({Attitude::kDisbelieve}));
}

TEST_CASE("independent pairs: brute force is the product of per-pair maximizers") {
  // Two independent coins on a 4-point product space.
  Rational p(4, 5);
  Rational q(1, 3);
  Charge charge(BooleanSubalgebra::discrete(4), {p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q)});
  std::vector<PropositionPair> pairs = {{"first", make_point_set(4, {0, 1})}, {"second", make_point_set(4, {0, 2})}};
  ScoreWeights weights(1, 1);
  auto brute = brute_force_optimal(pairs, charge, weights);
  REQUIRE(brute.size() == 1);
  CHECK(brute[0] == state({Attitude::kBelieve, Attitude::kDisbelieve}));
}

TEST_CASE("closed form agrees with brute force on random charges") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t ground = static_cast<std::size_t>(uniform_int(rng, 2, 6));
    Charge charge(BooleanSubalgebra::discrete(ground), random_masses(rng, ground, 1));
    std::vector<PropositionPair> pairs;
    for (int k = 0, count = static_cast<int>(uniform_int(rng, 1, 4)); k < count; ++k) {
      pairs.push_back({"s" + std::to_string(k), random_subset(rng, ground)});
    }
    ScoreWeights weights(random_rational_between(rng, 0, 4, 12), random_rational_between(rng, 0, 4, 12));
    auto closed = optimal_doxastic_state(pairs, charge, weights);
    auto brute = brute_force_optimal(pairs, charge, weights);
    CHECK(std::find(brute.begin(), brute.end(), closed.state) != brute.end());
    const bool any_tie = std::any_of(closed.ties.begin(), closed.ties.end(), [](bool b) { return b; });
    if (!any_tie) {
      REQUIRE(brute.size() == 1);
      CHECK(brute[0] == closed.state);
    }
    CHECK(std::is_sorted(brute.begin(), brute.end()));
  }
}

TEST_CASE("trivial propositions are skipped unless requested") {
  std::vector<PropositionPair> pairs = {{"top", full_point_set(2)}};
  Charge charge = Charge::uniform_on_points(2);
  ScoreWeights weights(1, 1);
  CHECK(expected_score(pairs, state({Attitude::kBelieve}), charge, weights) == 0);
  CHECK(brute_force_optimal(pairs, charge, weights).size() == 2);
  ScoringOptions include{true};
  CHECK(expected_score(pairs, state({Attitude::kBelieve}), charge, weights, include) == 1);
  auto brute = brute_force_optimal(pairs, charge, weights, include);
  REQUIRE(brute.size() == 1);
  CHECK(brute[0] == optimal_doxastic_state(pairs, charge, weights, include).state);
}

TEST_CASE("brute force cap") {
  std::vector<PropositionPair> pairs(kMaxBruteForcePairs + 1, PropositionPair{"s", make_point_set(2, {0})});
  CHECK_THROWS_AS(brute_force_optimal(pairs, Charge::uniform_on_points(2), ScoreWeights(1, 1)), Error);
}

TEST_CASE("verdict threshold") {
  UtilityQuadruple costly_error{1, -9, 0, 0};
  CHECK(verdict_threshold(costly_error) == Rational(9, 10));
  ScoreWeights weights(2, 7);
  CHECK(verdict_threshold(UtilityQuadruple::from_weights(weights)) == belief_threshold(weights));
  CHECK(verdict_threshold(UtilityQuadruple{5, -2, -2, 5}) == Rational(1, 2));
  CHECK_THROWS_AS(verdict_threshold(UtilityQuadruple{1, 1, 1, 1}), Error);
  CHECK(UtilityQuadruple{1, -9, 0, 0}.prefers_accuracy());
  CHECK_FALSE(UtilityQuadruple{0, -9, 1, 0}.prefers_accuracy());
}

TEST_CASE("expected verdict utilities") {
  UtilityQuadruple u{3, -7, -1, 2};
  auto certain_guilt = expected_verdict_utilities(u, 1);
  CHECK(certain_guilt.convict == 3);
  CHECK(certain_guilt.acquit == -1);
  auto certain_innocence = expected_verdict_utilities(u, 0);
  CHECK(certain_innocence.convict == -7);
  CHECK(certain_innocence.acquit == 2);
  auto at = expected_verdict_utilities(u, verdict_threshold(u));
  CHECK(at.convict == at.acquit);
  CHECK_THROWS_AS(expected_verdict_utilities(u, Rational(3, 2)), Error);
}

TEST_CASE("threshold is the exact crossover on a dense grid") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    UtilityQuadruple u{random_rational_between(rng, 0, 10, 9), random_rational_between(rng, -10, 0, 9),
                       random_rational_between(rng, -10, 0, 9), random_rational_between(rng, 0, 10, 9)};
    REQUIRE(u.prefers_accuracy());
    Rational t = verdict_threshold(u);
    for (int k = 0; k <= 400; ++k) {
      Rational p(k, 400);
      auto e = expected_verdict_utilities(u, p);
      CHECK((e.convict >= e.acquit) == (p >= t));
    }
  }
}

TEST_CASE("threshold is invariant under positive affine maps") {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    UtilityQuadruple u{random_rational_between(rng, 0, 10), random_rational_between(rng, -10, 0),
                       random_rational_between(rng, -10, 0), random_rational_between(rng, 0, 10)};
    Rational shift = random_rational_between(rng, -20, 20);
    Rational scale = random_rational_between(rng, 0, 20);
    UtilityQuadruple moved{u.guilty_convict * scale + shift, u.innocent_convict * scale + shift,
                           u.guilty_acquit * scale + shift, u.innocent_acquit * scale + shift};
    CHECK(verdict_threshold(moved) == verdict_threshold(u));
  }
}
