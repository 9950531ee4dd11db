#pragma once

// Residue-field fixing problem for an alcove-stabilizer element.
//
// The unit group of a finite field with q elements is cyclic of order
// N = q - 1 and is modelled additively as Z/N: an element is its discrete
// logarithm. A point of the torus X^vee (x) k^x is a coordinate vector over a
// basis of X^vee with entries in Z/N.

#include <cstdint>
#include <optional>
#include <vector>

#include "weylrep/affine.hpp"
#include "weylrep/chevalley.hpp"
#include "weylrep/lattice.hpp"
#include "weylrep/random.hpp"

namespace weylrep {

struct UnitGroup {
  std::int64_t order;  // N = q - 1

  static UnitGroup for_field(std::int64_t q);
  std::int64_t reduce(std::int64_t x) const { return mod(x, order); }
  /// Logarithm of -1: N/2 when N is even, 0 in characteristic 2.
  std::int64_t minus_one() const { return order % 2 == 0 ? order / 2 : 0; }
  std::int64_t sign(int s) const { return s == 1 ? 0 : minus_one(); }
};

/// lambda_0, ..., lambda_l as logarithms. Every residue is a unit, so every
/// tuple is admissible.
struct GenericFunctional {
  std::vector<std::int64_t> lambdas;
};

GenericFunctional random_functional(int rank, const UnitGroup& units, Rng& rng);

struct FixerSystem {
  UnitGroup units{1};
  CocharLattice lattice;
  OmegaElement omega;
  /// targets[i]: required value of alpha_i(t) for affine node i (node 0 is -theta).
  std::vector<std::int64_t> targets;
  /// c_D(sigma) for the highest-root relation, as a sign.
  int character = 1;
  /// The marks-weighted sum of the targets equals the logarithm of c_D(sigma).
  bool consistent = false;
};

/// targets[i] = -lambda_i + lambda_{sigma(i)} + log c(S(sigma), alpha_i).
FixerSystem build_system(const ScalarTable& scalars, const CocharLattice& lat,
                         const OmegaElement& omega, const GenericFunctional& lambda,
                         const UnitGroup& units);

/// alpha_i(t) for each affine node i, for t given by coordinates over the
/// lattice basis.
std::vector<std::int64_t> evaluate_roots(const RootSystem& rs, const CocharLattice& lat,
                                         const std::vector<std::int64_t>& coords,
                                         const UnitGroup& units);

/// A torus point solving rows 1..l, checked against row 0 as well.
std::optional<std::vector<std::int64_t>> solve(const RootSystem& rs, const FixerSystem& system);

/// Same, for arbitrary targets on rows 1..l (row 0 ignored).
std::optional<std::vector<std::int64_t>> solve_targets(const RootSystem& rs,
                                                       const CocharLattice& lat,
                                                       const std::vector<std::int64_t>& targets,
                                                       const UnitGroup& units);

/// Root-lattice character chi = sum c_i alpha_i, coefficients mod d, whose
/// value on the big torus computes the connecting map into k^x / (k^x)^d.
/// Normalized so chi takes the value 1 on the first minuscule fundamental
/// coweight that generates the quotient. Throws std::invalid_argument unless
/// small is contained in big with cyclic quotient.
struct ConnectingCharacter {
  std::int64_t d = 1;
  std::vector<std::int64_t> coeffs;
};
ConnectingCharacter connecting_character(const RootSystem& rs, const CocharLattice& small,
                                         const CocharLattice& big);

/// Value of chi on a coweight (fundamental-coweight coordinates).
std::int64_t evaluate_character(const ConnectingCharacter& chi, const Coweight& v);

struct ObstructionClass {
  std::int64_t modulus = 1;  // gcd(d, N): k^x / (k^x)^d is cyclic of this order
  std::int64_t value = 0;
};

/// The class of the adjoint solution under the connecting map for
/// `lat` inside the coweight lattice.
ObstructionClass obstruction(const RootSystem& rs, const CocharLattice& lat,
                             const FixerSystem& adjoint_system);

/// Obstruction of arbitrary targets on rows 1..l.
ObstructionClass obstruction_of_targets(const RootSystem& rs, const CocharLattice& lat,
                                        const std::vector<std::int64_t>& targets,
                                        const UnitGroup& units);

}  // namespace weylrep
