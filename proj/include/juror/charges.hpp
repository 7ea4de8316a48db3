#pragma once

#include "juror/rational.hpp"
#include "juror/world_model.hpp"

#include <vector>

namespace juror {

// A finitely additive probability on a finite Boolean algebra, given by the
// mass of each atom. Masses are nonnegative and sum to exactly one; the value
// of a member is the sum of its atoms' masses.
class Charge {
 public:
  // Throws InvalidArgument on a negative mass, a total other than one, or a
  // mass count that differs from the atom count.
  Charge(BooleanSubalgebra algebra, std::vector<Rational> masses);

  // Equal mass on every atom.
  static Charge uniform_on_atoms(BooleanSubalgebra algebra);
  // Equal mass on every point of the ground set (discrete algebra).
  static Charge uniform_on_points(std::size_t ground_size);

  const BooleanSubalgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& masses() const noexcept { return masses_; }
  const Rational& mass(std::size_t atom) const { return masses_.at(atom); }
  std::size_t ground_size() const noexcept { return algebra_.ground_size(); }

  // Throws NotExpressible if `event` is not a union of atoms.
  Rational measure(const PointSet& event) const;

  friend bool operator==(const Charge&, const Charge&) = default;

 private:
  BooleanSubalgebra algebra_;
  std::vector<Rational> masses_;
};

inline Rational measure(const Charge& charge, const PointSet& event) { return charge.measure(event); }

struct ConditionalResult {
  Rational value;
  Rational conditioning_mass;
};

// P(target | given). Throws ZeroConditioningEvent when P(given) = 0.
ConditionalResult conditional(const Charge& charge, const PointSet& target, const PointSet& given);

// The posterior T -> P(E n T) / P(E) on the same algebra.
Charge condition(const Charge& charge, const PointSet& event);

// alpha * p + (1 - alpha) * q, atomwise.
Charge mix(const Rational& alpha, const Charge& p, const Charge& q);

struct InnerOuter {
  Rational lower;  // mass of the atoms inside the set
  Rational upper;  // mass of the atoms meeting the set
};

InnerOuter inner_outer(const Charge& charge, const PointSet& set);

// Extension to the algebra generated by charge.algebra() and `set` that agrees
// with `charge` on the old algebra and gives `set` the value `value`. Split
// atoms are filled in canonical atom order. Throws OutOfRange unless
// lower <= value <= upper.
Charge extend_charge(const Charge& charge, const PointSet& set, const Rational& value);

// Every positive-mass atom meets both `set` and its complement.
bool is_strictly_independent(const Charge& charge, const PointSet& set);

// Extension to the algebra generated by charge.algebra() and `given` with
// P~(target | given) = theta exactly. `target` must be a member with mass
// strictly between 0 and 1 and `given` strictly independent.
Charge extend_with_conditional(const Charge& charge, const PointSet& target, const PointSet& given,
                               const Rational& theta);

// True when every atom of coarse.algebra() is a member of fine.algebra() and
// receives the same value from both charges.
bool restricts_to(const Charge& fine, const Charge& coarse);

// Spreads each atom's mass evenly over its points, giving a charge on the full
// powerset that restricts to `charge`.
Charge refine_uniformly(const Charge& charge);

}  // namespace juror
