#pragma once

#include "juror/charges.hpp"
#include "juror/rational.hpp"
#include "juror/world_model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace juror {

// Odds "a to b", equivalent to probability a / (a + b).
class Odds {
 public:
  // Throws InvalidArgument unless both components are positive.
  Odds(Rational in_favor, Rational against);
  static Odds from_probability(const Rational& p);
  // "a:b" with exact rational components.
  static Odds parse(std::string_view text);

  const Rational& in_favor() const noexcept { return in_favor_; }
  const Rational& against() const noexcept { return against_; }
  Rational probability() const { return in_favor_ / (in_favor_ + against_); }
  Rational ratio() const { return in_favor_ / against_; }

  // Scaled so the smaller component is 1: 8:10 becomes 1:1.25.
  Odds canonical() const;
  // Canonical form, exact decimals where they terminate: "4:1", "1:1.25".
  std::string to_string() const;

  // Same ratio.
  friend bool operator==(const Odds& a, const Odds& b) { return a.ratio() == b.ratio(); }

 private:
  Rational in_favor_;
  Rational against_;
};

// Bayes in odds form: prior odds times the likelihood ratio, canonicalized.
// Throws NonpositiveRatio unless likelihood_ratio > 0.
Odds posterior_odds(const Odds& prior, const Rational& likelihood_ratio);

struct SuspectPool {
  Integer size;      // |X| >= 1
  Integer matching;  // |E_T|, 0 <= |E_T| <= |X|
  bool defendant_matches = false;

  // Throws InvalidArgument on a violated bound.
  void validate() const;
};

// 1 / |X|
Rational uniform_guilt_prior(const SuspectPool& pool);

// Infallible witness: 0 if the defendant is outside E_T, else 1 / |E_T|.
// Throws EmptyMatchWithMatchingDefendant when the defendant matches an empty set.
Rational certain_witness_posterior(const SuspectPool& pool);

struct FallibleWitnessReport {
  Rational prior;
  Rational posterior;
  // The testimonial event is the whole pool, so conditioning changes nothing.
  bool degenerate_update = true;
};

FallibleWitnessReport fallible_witness_event(const SuspectPool& pool);

inline constexpr std::array<std::string_view, 8> kBloodTypes = {"A+", "A-", "AB+", "AB-", "B+", "B-", "O+", "O-"};

// Sample tuples (b_X, b_Y, p) over the eight blood types and a paternity flag.
// Each tuple is an atom covering two finer worlds that differ only in whether
// X was abroad around Y's conception; the sample space cannot see that fact.
struct SpannSpace {
  static constexpr std::size_t kSampleCount = 8 * 8 * 2;
  static constexpr std::size_t kGroundSize = kSampleCount * 2;

  BooleanSubalgebra algebra;  // one atom per sample tuple
  Charge prior;               // uniform over sample tuples
  PointSet paternity;         // tuples with p = true, as fine worlds
  PointSet alibi;             // fine worlds where X was abroad

  static std::size_t sample_index(std::size_t blood_x, std::size_t blood_y, bool parent);
  static std::size_t point(std::size_t sample, bool abroad) { return 2 * sample + (abroad ? 1 : 0); }
  std::size_t paternity_sample_count() const;
};

SpannSpace build_spann_space();

struct LikelihoodReport {
  Rational given_h;      // P(E | H)
  Rational given_not_h;  // P(E | not H)
  Rational standard;     // P(E | H) / P(E | not H)
  Rational impact;       // P(E | H) / P(E)
  Rational impact_bound; // 1 / P(H); impact never exceeds it
  bool relevant = false; // standard != 1
};

// Throws UndefinedRatio when P(H) is 0 or 1, or when P(E) or P(E | not H) is 0.
LikelihoodReport likelihood_ratio(const Charge& charge, const PointSet& evidence, const PointSet& hypothesis);

struct RateBoundConfig {
  Rational gamma;  // ratio slack, > 0
  Rational theta;  // verdict threshold, in (0, 1)

  // Throws InvalidArgument on a violated bound.
  void validate() const;
};

struct TestimonyCount {
  // Smallest m with (1/2)(1 + gamma)^m >= theta.
  std::size_t count = 0;
  // Smallest m with (1/2)(1 + gamma)^m > theta, i.e. m > log(2 theta) / log(1 + gamma).
  std::size_t strict_count = 0;
  // log(2 theta) / log(1 + gamma), display only.
  double log_bound = 0.0;
  // theta <= 1/2: the even-odds prior already meets the threshold.
  bool poi_violating = false;
};

TestimonyCount min_convicting_testimony_count(const RateBoundConfig& cfg);

struct RateBoundedPrior {
  Charge prior;                     // on a subalgebra of the world space
  std::vector<PointSet> chain;      // chain[k]: worlds whose transcript holds t_1..t_k
  std::vector<Rational> posteriors; // posteriors[k] = P(E_G | chain[k]), posteriors[0] = 1/2
};

// Starting from P(E_G) = 1/2, adjoins the nested events "t_1..t_k all heard"
// one at a time, each via a conditional extension that multiplies the guilt
// posterior by min(1 + gamma, theta / current). Throws CatalogTooSmall when
// the catalog has fewer testimonies than the required count.
RateBoundedPrior build_ratio_bounded_convicting_prior(const TestimonyCatalog& catalog, const RateBoundConfig& cfg);

struct ChainAudit {
  bool ok = false;
  std::vector<Rational> posteriors;  // re-measured from the prior
  std::vector<Rational> ratios;      // posteriors[k+1] / posteriors[k]
  std::string failure;
};

// Re-measures the chain and checks P(E_G) = 1/2, every ratio within
// [1/(1+gamma), 1+gamma] and a final posterior >= theta.
ChainAudit audit_rate_bounded_prior(const WorldSpace& space, const RateBoundedPrior& built, const RateBoundConfig& cfg);

}  // namespace juror
