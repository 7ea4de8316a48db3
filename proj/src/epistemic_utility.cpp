#include "juror/epistemic_utility.hpp"

#include "juror/error.hpp"

namespace juror {

ScoreWeights::ScoreWeights(Rational r, Rational w) : reward(std::move(r)), penalty(std::move(w)) {
  if (reward <= 0 || penalty <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "score weights must be positive, got R=" + to_string(reward) +
                                                 " W=" + to_string(penalty));
  }
}

Rational belief_threshold(const ScoreWeights& weights) {
  return weights.penalty / (weights.reward + weights.penalty);
}

namespace {

bool scored(const PropositionPair& pair, const ScoringOptions& options) {
  return options.include_trivial || !pair.is_trivial();
}

void check_shape(const std::vector<PropositionPair>& pairs, const DoxasticState& state) {
  if (state.attitudes.size() != pairs.size()) {
    throw Error(ErrorKind::kInvalidArgument, "doxastic state covers " + std::to_string(state.attitudes.size()) +
                                                 " pairs, expected " + std::to_string(pairs.size()));
  }
}

}  // namespace

Rational score(const std::vector<PropositionPair>& pairs, const DoxasticState& state, std::size_t world,
               const ScoreWeights& weights, const ScoringOptions& options) {
  check_shape(pairs, state);
  Rational total = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (state.attitudes[i] != Attitude::kBelieve || !scored(pairs[i], options)) continue;
    if (pairs[i].positive.test(world)) {
      total += weights.reward;
    } else {
      total -= weights.penalty;
    }
  }
  return total;
}

Rational expected_score(const std::vector<PropositionPair>& pairs, const DoxasticState& state, const Charge& charge,
                        const ScoreWeights& weights, const ScoringOptions& options) {
  check_shape(pairs, state);
  for (const auto& pair : pairs) {
    if (scored(pair, options) && !charge.algebra().is_expressible(pair.positive)) {
      throw Error(ErrorKind::kNotExpressible, "proposition '" + pair.id + "' is not a member of the algebra");
    }
  }
  Rational total = 0;
  const auto& atoms = charge.algebra().atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if (charge.mass(a) == 0) continue;
    // Every scored proposition is constant on the atom, so any point represents it.
    total += charge.mass(a) * score(pairs, state, atoms[a].find_first(), weights, options);
  }
  return total;
}

OptimalDoxasticState optimal_doxastic_state(const std::vector<PropositionPair>& pairs, const Charge& charge,
                                            const ScoreWeights& weights, const ScoringOptions& options) {
  const Rational threshold = belief_threshold(weights);
  OptimalDoxasticState out;
  out.state.attitudes.reserve(pairs.size());
  out.ties.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (!scored(pair, options)) {
      out.state.attitudes.push_back(Attitude::kBelieve);
      out.ties.push_back(true);
      continue;
    }
    Rational p = charge.measure(pair.positive);
    out.state.attitudes.push_back(p >= threshold ? Attitude::kBelieve : Attitude::kDisbelieve);
    out.ties.push_back(p == threshold);
  }
  return out;
}

std::vector<DoxasticState> brute_force_optimal(const std::vector<PropositionPair>& pairs, const Charge& charge,
                                               const ScoreWeights& weights, const ScoringOptions& options) {
  if (pairs.size() > kMaxBruteForcePairs) {
    throw Error(ErrorKind::kCapExceeded, std::to_string(pairs.size()) + " pairs exceed the brute-force cap of " +
                                             std::to_string(kMaxBruteForcePairs));
  }
  const std::size_t k = pairs.size();
  std::vector<DoxasticState> best;
  Rational best_score;
  // Bit (k-1-i) set means pair i is disbelieved, so counting upward walks the
  // states in lexicographic order.
  for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
    DoxasticState state;
    state.attitudes.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      state.attitudes[i] = ((code >> (k - 1 - i)) & 1U) ? Attitude::kDisbelieve : Attitude::kBelieve;
    }
    Rational value = expected_score(pairs, state, charge, weights, options);
    if (best.empty() || value > best_score) {
      best.clear();
      best_score = value;
      best.push_back(std::move(state));
    } else if (value == best_score) {
      best.push_back(std::move(state));
    }
  }
  return best;
}

UtilityQuadruple UtilityQuadruple::from_weights(const ScoreWeights& weights) {
  return {weights.reward, -weights.penalty, 0, 0};
}

Rational verdict_threshold(const UtilityQuadruple& u) {
  Rational denominator = u.guilty_convict - u.innocent_convict - u.guilty_acquit + u.innocent_acquit;
  if (denominator == 0) {
    throw Error(ErrorKind::kDegenerateUtilities, "GC - NGC - GA + NGA is zero");
  }
  return (u.innocent_acquit - u.innocent_convict) / denominator;
}

VerdictUtilities expected_verdict_utilities(const UtilityQuadruple& u, const Rational& p_guilt) {
  if (!is_probability(p_guilt)) {
    throw Error(ErrorKind::kOutOfRange, "probability of guilt " + to_string(p_guilt) + " not in [0,1]");
  }
  return {p_guilt * u.guilty_convict + (1 - p_guilt) * u.innocent_convict,
          p_guilt * u.guilty_acquit + (1 - p_guilt) * u.innocent_acquit};
}

}  // namespace juror
