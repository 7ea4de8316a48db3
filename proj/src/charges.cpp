#include "juror/charges.hpp"

#include "juror/error.hpp"

#include <algorithm>
#include <numeric>

namespace juror {

Charge::Charge(BooleanSubalgebra algebra, std::vector<Rational> masses)
    : algebra_(std::move(algebra)), masses_(std::move(masses)) {
  if (masses_.size() != algebra_.atom_count()) {
    throw Error(ErrorKind::kInvalidArgument, "charge has " + std::to_string(masses_.size()) + " masses for " +
                                                 std::to_string(algebra_.atom_count()) + " atoms");
  }
  Rational total = 0;
  for (const auto& m : masses_) {
    if (m < 0) throw Error(ErrorKind::kInvalidArgument, "negative atom mass " + to_string(m));
    total += m;
  }
  if (total != 1) throw Error(ErrorKind::kInvalidArgument, "atom masses sum to " + to_string(total) + ", not 1");
}

Charge Charge::uniform_on_atoms(BooleanSubalgebra algebra) {
  const auto k = algebra.atom_count();
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "no probability charge on an empty ground set");
  std::vector<Rational> masses(k, Rational(1, static_cast<long long>(k)));
  return Charge(std::move(algebra), std::move(masses));
}

Charge Charge::uniform_on_points(std::size_t ground_size) {
  return uniform_on_atoms(BooleanSubalgebra::discrete(ground_size));
}

Rational Charge::measure(const PointSet& event) const {
  auto atoms = algebra_.decompose(event);
  if (!atoms) throw Error(ErrorKind::kNotExpressible, "event {" + format_points(event) + "} is not a union of atoms");
  Rational total = 0;
  for (std::size_t i : *atoms) total += masses_[i];
  return total;
}

ConditionalResult conditional(const Charge& charge, const PointSet& target, const PointSet& given) {
  Rational given_mass = charge.measure(given);
  if (given_mass == 0) {
    throw Error(ErrorKind::kZeroConditioningEvent, "conditioning event {" + format_points(given) + "} has mass 0");
  }
  return {charge.measure(target & given) / given_mass, given_mass};
}

Charge condition(const Charge& charge, const PointSet& event) {
  Rational event_mass = charge.measure(event);
  if (event_mass == 0) {
    throw Error(ErrorKind::kZeroConditioningEvent, "conditioning event {" + format_points(event) + "} has mass 0");
  }
  const auto& atoms = charge.algebra().atoms();
  std::vector<Rational> masses(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    masses[i] = atoms[i].is_subset_of(event) ? Rational(charge.mass(i) / event_mass) : Rational(0);
  }
  return Charge(charge.algebra(), std::move(masses));
}

Charge mix(const Rational& alpha, const Charge& p, const Charge& q) {
  if (!is_probability(alpha)) throw Error(ErrorKind::kOutOfRange, "mixture weight " + to_string(alpha) + " not in [0,1]");
  if (!(p.algebra() == q.algebra())) throw Error(ErrorKind::kAlgebraMismatch, "mixed charges live on different algebras");
  std::vector<Rational> masses(p.masses().size());
  for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = alpha * p.mass(i) + (1 - alpha) * q.mass(i);
  return Charge(p.algebra(), std::move(masses));
}

InnerOuter inner_outer(const Charge& charge, const PointSet& set) {
  if (set.size() != charge.ground_size()) throw Error(ErrorKind::kInvalidArgument, "set over a different ground set");
  InnerOuter bounds{0, 0};
  const auto& atoms = charge.algebra().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!atoms[i].intersects(set)) continue;
    bounds.upper += charge.mass(i);
    if (atoms[i].is_subset_of(set)) bounds.lower += charge.mass(i);
  }
  return bounds;
}

namespace {

// Builds the charge on `charge.algebra().adjoin(set)`. Atoms inside `set` keep
// their mass, atoms outside get none toward `set`; each atom that `set` splits
// and that `eligible` selects receives from `budget` up to its own mass, in
// canonical order, the rest of its mass going to the part outside `set`.
// `budgets` pairs each eligibility mask with its own target amount.
struct SplitBudget {
  std::vector<bool> eligible;
  Rational amount;
};

Charge split_atoms(const Charge& charge, const PointSet& set, std::vector<SplitBudget> budgets) {
  const auto& atoms = charge.algebra().atoms();
  std::vector<PointSet> blocks;
  std::vector<Rational> masses;
  blocks.reserve(atoms.size() * 2);
  masses.reserve(atoms.size() * 2);

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    PointSet inside = atoms[i] & set;
    PointSet outside = atoms[i] - set;
    if (inside.none() || outside.none()) {
      blocks.push_back(atoms[i]);
      masses.push_back(charge.mass(i));
      continue;
    }
    Rational to_inside = 0;
    for (auto& budget : budgets) {
      if (!budget.eligible[i]) continue;
      to_inside = std::min(charge.mass(i), budget.amount);
      budget.amount -= to_inside;
      break;
    }
    blocks.push_back(std::move(inside));
    masses.push_back(to_inside);
    blocks.push_back(std::move(outside));
    masses.push_back(charge.mass(i) - to_inside);
  }
  for (const auto& budget : budgets) {
    if (budget.amount != 0) throw Error(ErrorKind::kOutOfRange, "split budget not exhausted");
  }

  // from_partition sorts the blocks; keep masses aligned with them.
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return blocks[a].find_first() < blocks[b].find_first(); });
  std::vector<PointSet> sorted_blocks;
  std::vector<Rational> sorted_masses;
  sorted_blocks.reserve(order.size());
  sorted_masses.reserve(order.size());
  for (std::size_t idx : order) {
    sorted_blocks.push_back(std::move(blocks[idx]));
    sorted_masses.push_back(std::move(masses[idx]));
  }
  return Charge(BooleanSubalgebra::from_partition(charge.ground_size(), std::move(sorted_blocks)),
                std::move(sorted_masses));
}

}  // namespace

Charge extend_charge(const Charge& charge, const PointSet& set, const Rational& value) {
  InnerOuter bounds = inner_outer(charge, set);
  if (value < bounds.lower || value > bounds.upper) {
    throw Error(ErrorKind::kOutOfRange, "value " + to_string(value) + " outside [" + to_string(bounds.lower) + ", " +
                                            to_string(bounds.upper) + "]");
  }
  std::vector<bool> all(charge.algebra().atom_count(), true);
  return split_atoms(charge, set, {SplitBudget{std::move(all), value - bounds.lower}});
}

bool is_strictly_independent(const Charge& charge, const PointSet& set) {
  if (set.size() != charge.ground_size()) return false;
  const auto& atoms = charge.algebra().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (charge.mass(i) == 0) continue;
    if (!atoms[i].intersects(set) || atoms[i].is_subset_of(set)) return false;
  }
  return true;
}

Charge extend_with_conditional(const Charge& charge, const PointSet& target, const PointSet& given,
                               const Rational& theta) {
  if (!is_probability(theta)) throw Error(ErrorKind::kOutOfRange, "theta " + to_string(theta) + " not in [0,1]");
  auto target_atoms = charge.algebra().decompose(target);
  if (!target_atoms) throw Error(ErrorKind::kNotExpressible, "target event is not a member of the algebra");
  Rational p_target = charge.measure(target);
  if (p_target == 0 || p_target == 1) {
    throw Error(ErrorKind::kDegeneratePrior, "target event has probability " + to_string(p_target));
  }
  if (!is_strictly_independent(charge, given)) {
    throw Error(ErrorKind::kNotIndependent, "conditioning event does not split every positive-mass atom");
  }

  // rho_in / (rho_in + rho_out) = theta with rho_in <= P(A), rho_out <= 1 - P(A),
  // taken at half the largest feasible scale.
  Rational scale;
  if (theta == 0) {
    scale = 1 - p_target;
  } else if (theta == 1) {
    scale = p_target;
  } else {
    scale = std::min(Rational(p_target / theta), Rational((1 - p_target) / (1 - theta)));
  }
  scale /= 2;
  Rational rho_in = theta * scale;
  Rational rho_out = (1 - theta) * scale;

  // Within each positive-mass atom, the part outside `given` is nonempty, so
  // the inner bound of `given` restricted to A (or A^c) is 0 and the outer
  // bound is P(A) (or 1 - P(A)).
  std::vector<bool> in_target(charge.algebra().atom_count(), false);
  for (std::size_t i : *target_atoms) in_target[i] = true;
  std::vector<bool> in_complement(in_target.size());
  for (std::size_t i = 0; i < in_target.size(); ++i) in_complement[i] = !in_target[i];

  // Zero-mass atoms contained in `given` carry nothing, so the budgets stay exact.
  return split_atoms(charge, given,
                     {SplitBudget{std::move(in_target), rho_in}, SplitBudget{std::move(in_complement), rho_out}});
}

bool restricts_to(const Charge& fine, const Charge& coarse) {
  if (fine.ground_size() != coarse.ground_size()) return false;
  const auto& atoms = coarse.algebra().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!fine.algebra().is_expressible(atoms[i])) return false;
    if (fine.measure(atoms[i]) != coarse.mass(i)) return false;
  }
  return true;
}

Charge refine_uniformly(const Charge& charge) {
  std::vector<Rational> masses(charge.ground_size());
  const auto& atoms = charge.algebra().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Rational share = charge.mass(i) / static_cast<long long>(atoms[i].count());
    for (auto p = atoms[i].find_first(); p != PointSet::npos; p = atoms[i].find_next(p)) masses[p] = share;
  }
  return Charge(BooleanSubalgebra::discrete(charge.ground_size()), std::move(masses));
}

}  // namespace juror
