#include "juror/dispositions.hpp"

#include "juror/error.hpp"

namespace juror {

Disposition::Disposition(TestimonyCatalog catalog, std::set<Transcript> convicting)
    : catalog_(std::move(catalog)), convicting_(std::move(convicting)) {
  for (Transcript t : convicting_) {
    if (t.mask() >= catalog_.transcript_count()) {
      throw Error(ErrorKind::kForeignTestimony, "convicting transcript references testimony outside the catalog");
    }
  }
}

Disposition Disposition::from_predicate(TestimonyCatalog catalog, const std::function<bool(Transcript)>& convicts) {
  std::set<Transcript> convicting;
  for (std::size_t m = 0; m < catalog.transcript_count(); ++m) {
    auto t = Transcript::from_mask(static_cast<std::uint32_t>(m));
    if (convicts(t)) convicting.insert(t);
  }
  return Disposition(std::move(catalog), std::move(convicting));
}

Disposition Disposition::always_convict_nonempty(TestimonyCatalog catalog) {
  return from_predicate(std::move(catalog), [](Transcript t) { return !t.empty(); });
}

Disposition Disposition::at_least(TestimonyCatalog catalog, std::size_t witnesses) {
  return from_predicate(std::move(catalog), [witnesses](Transcript t) { return t.size() >= witnesses; });
}

std::vector<Transcript> Disposition::acquitting() const {
  std::vector<Transcript> out;
  for (std::size_t m = 0; m < catalog_.transcript_count(); ++m) {
    auto t = Transcript::from_mask(static_cast<std::uint32_t>(m));
    if (!convicting_.contains(t)) out.push_back(t);
  }
  return out;
}

bool check_poi(const Disposition& f) { return !f.convicting().contains(Transcript{}); }

bool check_wtc(const Disposition& f) { return !f.convicting().empty(); }

namespace {

// Mass `on_guilty` / count on (T,G) and `on_innocent` / count on (T,I) for the
// transcripts selected by `support`.
Charge supported_prior(const WorldSpace& space, const Disposition& f, Verdict support, const Rational& on_guilty,
                       const Rational& on_innocent) {
  std::vector<Rational> masses(space.size(), Rational(0));
  std::size_t count = 0;
  for (Transcript t : space.transcripts()) {
    if (f.verdict(t) == support) ++count;
  }
  const Rational share(1, static_cast<long long>(count));
  for (Transcript t : space.transcripts()) {
    if (f.verdict(t) != support) continue;
    masses[space.index_of({t, Guilt::kGuilty})] = on_guilty * share;
    masses[space.index_of({t, Guilt::kInnocent})] = on_innocent * share;
  }
  return Charge(BooleanSubalgebra::discrete(space.size()), std::move(masses));
}

}  // namespace

RationalizationCertificate rationalize(const Disposition& f, const Rational& theta) {
  if (!check_poi(f)) throw Error(ErrorKind::kAxiomViolation, "PoI fails: the empty transcript convicts");
  if (!check_wtc(f)) throw Error(ErrorKind::kAxiomViolation, "WtC fails: no transcript convicts");
  if (theta <= Rational(1, 2) || theta >= 1) {
    throw Error(ErrorKind::kThetaOutOfRange, "theta " + to_string(theta) + " not in (1/2, 1)");
  }

  WorldSpace space(f.catalog());
  Charge convict_side = supported_prior(space, f, Verdict::kConvict, theta, 1 - theta);
  Charge acquit_side = supported_prior(space, f, Verdict::kAcquit, 1 - theta, theta);
  // alpha * theta + (1 - alpha) * (1 - theta) = 1/2 has the solution alpha = 1/2.
  Charge prior = mix(Rational(1, 2), convict_side, acquit_side);

  const PointSet guilt = space.guilt_event();
  RationalizationCertificate cert{prior, theta, prior.measure(guilt), {}};
  cert.posteriors.reserve(space.transcript_count());
  for (Transcript t : space.transcripts()) {
    cert.posteriors.push_back({t, f.verdict(t), conditional(prior, guilt, space.event_of_transcript(t)).value});
  }
  return cert;
}

namespace {

struct TranscriptMasses {
  Rational total;
  Rational guilty;
};

// Sums atom masses over E_T and E_T n E_G without going through Charge::measure.
TranscriptMasses transcript_masses(const WorldSpace& space, const Charge& prior, Transcript t) {
  const std::size_t g = space.index_of({t, Guilt::kGuilty});
  const std::size_t i = space.index_of({t, Guilt::kInnocent});
  TranscriptMasses sums{0, 0};
  const auto& atoms = prior.algebra().atoms();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const bool has_g = atoms[a].test(g);
    const bool has_i = atoms[a].test(i);
    if (!has_g && !has_i) continue;
    if (atoms[a].count() > static_cast<std::size_t>(has_g) + static_cast<std::size_t>(has_i)) {
      throw Error(ErrorKind::kNotExpressible, "prior cannot express the event of the transcript of world " +
                                                  space.describe(g));
    }
    sums.total += prior.mass(a);
    // An atom holding both worlds makes the guilt split inexpressible.
    if (has_g && has_i) {
      throw Error(ErrorKind::kNotExpressible, "prior cannot separate guilt within a transcript");
    }
    if (has_g) sums.guilty += prior.mass(a);
  }
  return sums;
}

}  // namespace

VerificationResult verify_rationalization(const Disposition& f, const Rational& theta, const Charge& prior) {
  WorldSpace space(f.catalog());
  if (prior.ground_size() != space.size()) {
    throw Error(ErrorKind::kCatalogMismatch, "prior has " + std::to_string(prior.ground_size()) +
                                                 " points, world space has " + std::to_string(space.size()));
  }
  for (Transcript t : space.transcripts()) {
    TranscriptMasses sums = transcript_masses(space, prior, t);
    if (sums.total == 0) {
      throw Error(ErrorKind::kZeroTranscriptMass,
                  "transcript " + space.describe(space.index_of({t, Guilt::kGuilty})) + " has probability 0");
    }
    Rational posterior = sums.guilty / sums.total;
    const bool convicts_by_threshold = posterior >= theta;
    if (convicts_by_threshold != (f.verdict(t) == Verdict::kConvict)) {
      return {false, t, posterior};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

bool is_open_door(const WorldSpace& space, const Charge& prior) {
  if (prior.ground_size() != space.size()) {
    throw Error(ErrorKind::kCatalogMismatch, "prior does not live on this world space");
  }
  for (Transcript t : space.transcripts()) {
    TranscriptMasses sums = transcript_masses(space, prior, t);
    if (sums.total == 0) continue;
    if (sums.guilty == 0 || sums.guilty == sums.total) return false;
  }
  return true;
}

Charge posner_even_odds_prior(const TestimonyCatalog& catalog, const Rational& theta) {
  if (theta <= 0 || theta >= 1) throw Error(ErrorKind::kThetaOutOfRange, "theta " + to_string(theta) + " not in (0, 1)");
  if (catalog.size() == 0) return Charge::uniform_on_points(WorldSpace(catalog).size());
  const Rational effective = theta > Rational(1, 2) ? theta : kMinimumPosnerTheta;
  return rationalize(Disposition::always_convict_nonempty(catalog), effective).prior;
}

}  // namespace juror
