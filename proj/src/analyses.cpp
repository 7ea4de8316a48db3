#include "juror/analyses.hpp"

#include "juror/error.hpp"

#include <cmath>

namespace juror {

Odds::Odds(Rational in_favor, Rational against) : in_favor_(std::move(in_favor)), against_(std::move(against)) {
  if (in_favor_ <= 0 || against_ <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "odds components must be positive, got " + juror::to_string(in_favor_) +
                                                 ":" + juror::to_string(against_));
  }
}

Odds Odds::from_probability(const Rational& p) {
  if (p <= 0 || p >= 1) throw Error(ErrorKind::kInvalidArgument, "odds need 0 < p < 1, got " + juror::to_string(p));
  return Odds(p, 1 - p);
}

Odds Odds::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::kParseError, "odds must look like a:b, got '" + std::string(text) + "'");
  }
  Rational a = parse_rational(text.substr(0, colon));
  Rational b = parse_rational(text.substr(colon + 1));
  if (a <= 0 || b <= 0) throw Error(ErrorKind::kParseError, "odds components must be positive");
  return Odds(a, b);
}

Odds Odds::canonical() const {
  const Rational& smaller = in_favor_ < against_ ? in_favor_ : against_;
  return Odds(in_favor_ / smaller, against_ / smaller);
}

std::string Odds::to_string() const {
  Odds c = canonical();
  return to_exact_decimal(c.in_favor_) + ":" + to_exact_decimal(c.against_);
}

Odds posterior_odds(const Odds& prior, const Rational& likelihood_ratio) {
  if (likelihood_ratio <= 0) {
    throw Error(ErrorKind::kNonpositiveRatio, "likelihood ratio " + to_string(likelihood_ratio) + " is not positive");
  }
  return Odds(prior.in_favor() * likelihood_ratio, prior.against()).canonical();
}

void SuspectPool::validate() const {
  if (size < 1) throw Error(ErrorKind::kInvalidArgument, "suspect pool must be nonempty");
  if (matching < 0 || matching > size) {
    throw Error(ErrorKind::kInvalidArgument, "matching count must lie in [0, |X|]");
  }
}

Rational uniform_guilt_prior(const SuspectPool& pool) {
  pool.validate();
  return Rational(Integer(1), pool.size);
}

Rational certain_witness_posterior(const SuspectPool& pool) {
  pool.validate();
  if (!pool.defendant_matches) return 0;
  if (pool.matching == 0) {
    throw Error(ErrorKind::kEmptyMatchWithMatchingDefendant, "defendant matches but the matching set is empty");
  }
  return Rational(Integer(1), pool.matching);
}

FallibleWitnessReport fallible_witness_event(const SuspectPool& pool) {
  Rational prior = uniform_guilt_prior(pool);
  // A possibly mistaken witness is consistent with every member of X, so
  // E_T = X and the posterior is P(E_G | X) = P(E_G).
  return {prior, prior, true};
}

std::size_t SpannSpace::sample_index(std::size_t blood_x, std::size_t blood_y, bool parent) {
  return (blood_x * kBloodTypes.size() + blood_y) * 2 + (parent ? 1 : 0);
}

std::size_t SpannSpace::paternity_sample_count() const {
  std::size_t count = 0;
  for (const auto& atom : algebra.atoms()) {
    if (atom.is_subset_of(paternity)) ++count;
  }
  return count;
}

SpannSpace build_spann_space() {
  std::vector<PointSet> atoms;
  atoms.reserve(SpannSpace::kSampleCount);
  PointSet paternity(SpannSpace::kGroundSize);
  PointSet alibi(SpannSpace::kGroundSize);
  for (std::size_t x = 0; x < kBloodTypes.size(); ++x) {
    for (std::size_t y = 0; y < kBloodTypes.size(); ++y) {
      for (bool parent : {false, true}) {
        const std::size_t sample = SpannSpace::sample_index(x, y, parent);
        PointSet atom(SpannSpace::kGroundSize);
        atom.set(SpannSpace::point(sample, false));
        atom.set(SpannSpace::point(sample, true));
        if (parent) paternity |= atom;
        alibi.set(SpannSpace::point(sample, true));
        atoms.push_back(std::move(atom));
      }
    }
  }
  auto algebra = BooleanSubalgebra::from_partition(SpannSpace::kGroundSize, std::move(atoms));
  Charge prior = Charge::uniform_on_atoms(algebra);
  return {std::move(algebra), std::move(prior), std::move(paternity), std::move(alibi)};
}

LikelihoodReport likelihood_ratio(const Charge& charge, const PointSet& evidence, const PointSet& hypothesis) {
  const Rational p_h = charge.measure(hypothesis);
  if (p_h == 0 || p_h == 1) {
    throw Error(ErrorKind::kUndefinedRatio, "P(H) = " + to_string(p_h) + " leaves a conditional undefined");
  }
  const Rational p_e = charge.measure(evidence);
  if (p_e == 0) throw Error(ErrorKind::kUndefinedRatio, "P(E) = 0");
  const PointSet not_h = ~hypothesis;
  const Rational given_h = charge.measure(evidence & hypothesis) / p_h;
  const Rational given_not_h = charge.measure(evidence & not_h) / (1 - p_h);
  if (given_not_h == 0) throw Error(ErrorKind::kUndefinedRatio, "P(E | not H) = 0");

  LikelihoodReport report{given_h, given_not_h, given_h / given_not_h, given_h / p_e, 1 / p_h, false};
  report.relevant = report.standard != 1;
  return report;
}

void RateBoundConfig::validate() const {
  if (gamma <= 0) throw Error(ErrorKind::kInvalidArgument, "gamma must be positive, got " + to_string(gamma));
  if (theta <= 0 || theta >= 1) {
    throw Error(ErrorKind::kThetaOutOfRange, "theta " + to_string(theta) + " not in (0, 1)");
  }
}

TestimonyCount min_convicting_testimony_count(const RateBoundConfig& cfg) {
  cfg.validate();
  TestimonyCount out;
  const Rational growth = 1 + cfg.gamma;
  Rational reached(1, 2);
  while (reached < cfg.theta) {
    reached *= growth;
    ++out.count;
  }
  reached = Rational(1, 2);
  while (reached <= cfg.theta) {
    reached *= growth;
    ++out.strict_count;
  }
  out.log_bound = std::log(2.0 * static_cast<double>(cfg.theta)) / std::log(static_cast<double>(growth));
  out.poi_violating = cfg.theta <= Rational(1, 2);
  return out;
}

RateBoundedPrior build_ratio_bounded_convicting_prior(const TestimonyCatalog& catalog, const RateBoundConfig& cfg) {
  const std::size_t steps = min_convicting_testimony_count(cfg).count;
  if (catalog.size() < steps) {
    throw Error(ErrorKind::kCatalogTooSmall, "need " + std::to_string(steps) + " testimonies, catalog has " +
                                                 std::to_string(catalog.size()));
  }
  const WorldSpace space(catalog);
  const PointSet guilt = space.guilt_event();
  const PointSet all = full_point_set(space.size());

  const std::array<PointSet, 1> generators = {guilt};
  Charge prior(BooleanSubalgebra::generated(space.size(), generators), {Rational(1, 2), Rational(1, 2)});
  RateBoundedPrior out{prior, {all}, {Rational(1, 2)}};

  std::uint32_t heard = 0;
  for (std::size_t k = 1; k <= steps; ++k) {
    heard |= std::uint32_t{1} << (k - 1);
    const PointSet& previous = out.chain.back();
    PointSet next = space.superset_event(Transcript::from_mask(heard));
    const Rational& current = out.posteriors.back();
    Rational target = current * (1 + cfg.gamma);
    if (target > cfg.theta) target = cfg.theta;

    // Inside `previous` the algebra has exactly two atoms, guilty and
    // innocent, and `next` splits both; outside it nothing changes.
    const Rational previous_mass = out.prior.measure(previous);
    Charge local = condition(out.prior, previous);
    Charge local_extended = extend_with_conditional(local, guilt, next, target);

    const auto& atoms = local_extended.algebra().atoms();
    std::vector<PointSet> blocks;
    std::vector<Rational> masses;
    blocks.reserve(atoms.size());
    masses.reserve(atoms.size());
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      blocks.push_back(atoms[a]);
      if (atoms[a].is_subset_of(previous)) {
        masses.push_back(previous_mass * local_extended.mass(a));
      } else {
        masses.push_back(out.prior.measure(atoms[a]));
      }
    }
    out.prior = Charge(BooleanSubalgebra::from_partition(space.size(), std::move(blocks)), std::move(masses));
    out.chain.push_back(std::move(next));
    out.posteriors.push_back(std::move(target));
  }
  return out;
}

ChainAudit audit_rate_bounded_prior(const WorldSpace& space, const RateBoundedPrior& built, const RateBoundConfig& cfg) {
  ChainAudit audit;
  const PointSet guilt = space.guilt_event();
  const Rational upper = 1 + cfg.gamma;
  const Rational lower = 1 / upper;
  for (const auto& event : built.chain) {
    audit.posteriors.push_back(conditional(built.prior, guilt, event).value);
  }
  if (audit.posteriors.front() != Rational(1, 2)) {
    audit.failure = "prior probability of guilt is " + to_string(audit.posteriors.front());
    return audit;
  }
  for (std::size_t k = 1; k < audit.posteriors.size(); ++k) {
    if (!built.chain[k].is_subset_of(built.chain[k - 1])) {
      audit.failure = "chain is not nested at step " + std::to_string(k);
      return audit;
    }
    Rational ratio = audit.posteriors[k] / audit.posteriors[k - 1];
    audit.ratios.push_back(ratio);
    if (ratio < lower || ratio > upper) {
      audit.failure = "ratio " + to_string(ratio) + " at step " + std::to_string(k) + " outside bound";
      return audit;
    }
  }
  if (audit.posteriors.back() < cfg.theta) {
    audit.failure = "final posterior " + to_string(audit.posteriors.back()) + " below theta";
    return audit;
  }
  audit.ok = true;
  return audit;
}

}  // namespace juror
