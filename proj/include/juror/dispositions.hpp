#pragma once

#include "juror/charges.hpp"
#include "juror/rational.hpp"
#include "juror/world_model.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace juror {

enum class Verdict { kConvict, kAcquit };

// A total map from transcripts to verdicts, stored as the set of transcripts
// that convict; every other transcript acquits.
class Disposition {
 public:
  // Throws ForeignTestimony if a convicting transcript is not over the catalog.
  Disposition(TestimonyCatalog catalog, std::set<Transcript> convicting);

  static Disposition from_predicate(TestimonyCatalog catalog, const std::function<bool(Transcript)>& convicts);
  // Convicts on every nonempty transcript.
  static Disposition always_convict_nonempty(TestimonyCatalog catalog);
  // Convicts iff at least `witnesses` testimonies are heard.
  static Disposition at_least(TestimonyCatalog catalog, std::size_t witnesses);

  const TestimonyCatalog& catalog() const noexcept { return catalog_; }
  const std::set<Transcript>& convicting() const noexcept { return convicting_; }
  std::vector<Transcript> acquitting() const;

  Verdict verdict(Transcript transcript) const {
    return convicting_.contains(transcript) ? Verdict::kConvict : Verdict::kAcquit;
  }

 private:
  TestimonyCatalog catalog_;
  std::set<Transcript> convicting_;
};

// Presumption of innocence: the empty transcript acquits.
bool check_poi(const Disposition& f);
// Willingness to convict: some transcript convicts.
bool check_wtc(const Disposition& f);

struct TranscriptPosterior {
  Transcript transcript;
  Verdict verdict;
  Rational posterior;
};

struct RationalizationCertificate {
  Charge prior;  // on the world space of the disposition's catalog
  Rational theta;
  Rational guilt_prior;
  std::vector<TranscriptPosterior> posteriors;  // binary-counting transcript order
};

// Builds the mixture of the convict-supported and acquit-supported priors with
// weight 1/2. Posteriors are theta on convicting transcripts and 1 - theta on
// acquitting ones. Requires PoI, WtC and 1/2 < theta < 1.
RationalizationCertificate rationalize(const Disposition& f, const Rational& theta);

struct VerificationResult {
  bool holds = false;
  std::optional<Transcript> witness;  // first transcript where the biconditional fails
  std::optional<Rational> witness_posterior;
};

// Checks f(T) = C <=> P(E_G | E_T) >= theta for every transcript, computing the
// conditionals directly from atom masses. Throws ZeroTranscriptMass when some
// E_T has probability zero and CatalogMismatch when `prior` does not live on
// the disposition's world space.
VerificationResult verify_rationalization(const Disposition& f, const Rational& theta, const Charge& prior);

// P(E_G | E_T) is neither 0 nor 1 for every transcript of positive mass.
bool is_open_door(const WorldSpace& space, const Charge& prior);

// Weight used for theta <= 1/2, where the always-convict construction needs a
// threshold above one half.
inline const Rational kMinimumPosnerTheta{51, 100};

// Prior with P(E_G) = 1/2 and P(E_G | E_T) >= theta for every nonempty T.
// Accepts 0 < theta < 1; for theta <= 1/2 the construction runs at
// kMinimumPosnerTheta. An empty catalog gets the uniform prior.
Charge posner_even_odds_prior(const TestimonyCatalog& catalog, const Rational& theta);

}  // namespace juror
