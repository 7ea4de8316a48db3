#pragma once

#include "juror/charges.hpp"
#include "juror/rational.hpp"
#include "juror/world_model.hpp"

#include <string>
#include <vector>

namespace juror {

// A proposition over a finite world set together with its negation.
struct PropositionPair {
  std::string id;
  PointSet positive;

  PointSet negative() const { return ~positive; }
  bool is_trivial() const { return positive.none() || positive.all(); }
};

// Per pair, the agent either believes the proposition (juror reading: votes to
// convict) or does not (votes to acquit). Only believed propositions are scored.
enum class Attitude { kBelieve, kDisbelieve };

struct DoxasticState {
  std::vector<Attitude> attitudes;  // one per pair

  friend bool operator==(const DoxasticState&, const DoxasticState&) = default;
  friend auto operator<=>(const DoxasticState&, const DoxasticState&) = default;
};

struct ScoreWeights {
  Rational reward;   // R > 0, for a true belief
  Rational penalty;  // W > 0, charged for a false belief

  // Throws InvalidArgument unless both are strictly positive.
  ScoreWeights(Rational reward, Rational penalty);
};

struct ScoringOptions {
  // Pairs whose proposition is the empty set or the whole world set are skipped
  // unless this is set.
  bool include_trivial = false;
};

// W / (R + W)
Rational belief_threshold(const ScoreWeights& weights);

// Sum over believed propositions of +R if true at `world`, -W otherwise.
Rational score(const std::vector<PropositionPair>& pairs, const DoxasticState& state, std::size_t world,
               const ScoreWeights& weights, const ScoringOptions& options = {});

// Sum over atoms of mass * score. Every scored proposition must be a member of
// the charge's algebra (NotExpressible otherwise).
Rational expected_score(const std::vector<PropositionPair>& pairs, const DoxasticState& state, const Charge& charge,
                        const ScoreWeights& weights, const ScoringOptions& options = {});

struct OptimalDoxasticState {
  DoxasticState state;
  // ties[i]: both attitudes toward pair i maximize expected score. Ties
  // resolve toward belief.
  std::vector<bool> ties;
};

// Believe exactly the propositions with probability >= W / (R + W).
OptimalDoxasticState optimal_doxastic_state(const std::vector<PropositionPair>& pairs, const Charge& charge,
                                            const ScoreWeights& weights, const ScoringOptions& options = {});

inline constexpr std::size_t kMaxBruteForcePairs = 16;

// Every complete state maximizing expected score, in lexicographic order
// (kBelieve before kDisbelieve). Throws CapExceeded above kMaxBruteForcePairs.
std::vector<DoxasticState> brute_force_optimal(const std::vector<PropositionPair>& pairs, const Charge& charge,
                                               const ScoreWeights& weights, const ScoringOptions& options = {});

// Utilities of the four verdict outcomes.
struct UtilityQuadruple {
  Rational guilty_convict;    // GC
  Rational innocent_convict;  // NGC
  Rational guilty_acquit;     // GA
  Rational innocent_acquit;   // NGA

  // The (R, W) score as verdict utilities: (R, -W, 0, 0).
  static UtilityQuadruple from_weights(const ScoreWeights& weights);

  // GC > GA and NGA > NGC; the threshold then lies in [0, 1].
  bool prefers_accuracy() const { return guilty_convict > guilty_acquit && innocent_acquit > innocent_convict; }
};

// (NGA - NGC) / (GC - NGC - GA + NGA). Throws DegenerateUtilities when the
// denominator is zero.
Rational verdict_threshold(const UtilityQuadruple& u);

struct VerdictUtilities {
  Rational convict;  // E(U; C)
  Rational acquit;   // E(U; A)
};

VerdictUtilities expected_verdict_utilities(const UtilityQuadruple& u, const Rational& p_guilt);

}  // namespace juror
