#include "weylrep/fixer.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "weylrep/errors.hpp"
#include "weylrep/smith.hpp"

namespace weylrep {

namespace {

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t x = 0, y = 0;
  if (ext_gcd(mod(a, n), n, x, y) != 1) return 0;
  return mod(x, n);
}

}  // namespace

UnitGroup UnitGroup::for_field(std::int64_t q) {
  if (!is_prime_power(q))
    throw std::invalid_argument("field size must be a prime power, got " + std::to_string(q));
  return UnitGroup{q - 1};
}

GenericFunctional random_functional(int rank, const UnitGroup& units, Rng& rng) {
  GenericFunctional f;
  f.lambdas.resize(rank + 1);
  for (auto& l : f.lambdas) l = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(units.order)));
  return f;
}

FixerSystem build_system(const ScalarTable& scalars, const CocharLattice& lat,
                         const OmegaElement& omega, const GenericFunctional& lambda,
                         const UnitGroup& units) {
  const RootSystem& rs = scalars.roots();
  const int nodes = rs.rank() + 1;
  if (static_cast<int>(lambda.lambdas.size()) != nodes)
    throw std::invalid_argument("functional needs " + std::to_string(nodes) + " values");

  FixerSystem sys{units, lat, omega, {}, 1, false};
  sys.targets.resize(nodes);
  for (int i = 0; i < nodes; ++i) {
    int c = c_word(scalars, omega.sigma, affine_root(rs, i));
    sys.targets[i] = units.reduce(-lambda.lambdas[i] + lambda.lambdas[omega.diagram_perm[i]] +
                                  units.sign(c));
  }
  sys.character = evaluate_character(scalars, highest_root_relation(rs), omega.sigma);

  std::int64_t total = 0;
  for (int i = 0; i < nodes; ++i) total += affine_mark(rs, i) * sys.targets[i];
  sys.consistent = units.reduce(total) == units.sign(sys.character);
  return sys;
}

std::vector<std::int64_t> evaluate_roots(const RootSystem& rs, const CocharLattice& lat,
                                         const std::vector<std::int64_t>& coords,
                                         const UnitGroup& units) {
  const int l = rs.rank();
  if (static_cast<int>(coords.size()) != lat.rank())
    throw std::invalid_argument("torus point has the wrong number of coordinates");
  std::vector<std::int64_t> out(l + 1, 0);
  for (int i = 0; i < l; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < lat.rank(); ++j) v = units.reduce(v + units.reduce(coords[j]) * lat.basis()(j, i));
    out[i + 1] = v;
  }
  std::int64_t zero = 0;
  for (int i = 0; i < l; ++i) zero += affine_mark(rs, i + 1) * out[i + 1];
  out[0] = units.reduce(-zero);
  return out;
}

std::optional<std::vector<std::int64_t>> solve_targets(const RootSystem& rs,
                                                       const CocharLattice& lat,
                                                       const std::vector<std::int64_t>& targets,
                                                       const UnitGroup& units) {
  const int l = rs.rank();
  if (static_cast<int>(targets.size()) != l + 1)
    throw std::invalid_argument("expected one target per affine node");
  IntMatrix m(l, lat.rank());
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < lat.rank(); ++j) m(i, j) = lat.basis()(j, i);
  std::vector<std::int64_t> b(targets.begin() + 1, targets.end());
  for (auto& x : b) x = units.reduce(x);
  return solve_mod(m, b, units.order);
}

std::optional<std::vector<std::int64_t>> solve(const RootSystem& rs, const FixerSystem& system) {
  auto x = solve_targets(rs, system.lattice, system.targets, system.units);
  if (!x) return std::nullopt;
  auto values = evaluate_roots(rs, system.lattice, *x, system.units);
  for (int i = 1; i <= rs.rank(); ++i)
    if (values[i] != system.units.reduce(system.targets[i]))
      throw InvariantViolation("modular solver returned a non-solution");
  if (values[0] != system.units.reduce(system.targets[0])) return std::nullopt;
  return x;
}

ConnectingCharacter connecting_character(const RootSystem& rs, const CocharLattice& small,
                                         const CocharLattice& big) {
  const int l = rs.rank();
  if (small.rank() != l || big.rank() != l) throw InvariantViolation("lattice of wrong rank");
  for (int i = 0; i < l; ++i)
    if (!big.contains(small.basis().row(i)))
      throw std::invalid_argument(small.name() + " is not contained in " + big.name());

  // Small basis written over the big basis.
  RatMatrix k_rat = to_rational(small.basis()) * inverse(to_rational(big.basis()));
  IntMatrix k(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const Rational& r = k_rat(i, j);
      if (r.denominator() != 1) throw InvariantViolation("inclusion matrix is not integral");
      k(i, j) = r.numerator();
    }
  SmithForm snf = smith_normal_form(k);
  auto diag = snf.diagonal();
  for (int i = 0; i + 1 < l; ++i)
    if (diag[i] != 1)
      throw std::invalid_argument(big.name() + " / " + small.name() + " is not cyclic");

  ConnectingCharacter chi;
  chi.d = diag[l - 1];
  chi.coeffs.assign(l, 0);
  if (chi.d == 1) return chi;

  // f(y) = (y V)_last mod d cuts out small inside big (y in big coordinates).
  std::vector<std::int64_t> f(l);
  for (int j = 0; j < l; ++j) f[j] = mod(snf.v(j, l - 1), chi.d);
  // Root character c with <c, y B> = f(y): B c = f (mod d).
  auto c = solve_mod(big.basis(), f, chi.d);
  if (!c) throw std::invalid_argument("quotient character does not come from the root lattice");
  chi.coeffs = *c;

  for (int g : big.minuscule_generators()) {
    std::int64_t inv = inverse_mod(chi.coeffs[g], chi.d);
    if (inv == 0) continue;
    for (auto& x : chi.coeffs) x = mod(x * inv, chi.d);
    break;
  }
  return chi;
}

std::int64_t evaluate_character(const ConnectingCharacter& chi, const Coweight& v) {
  if (v.size() != chi.coeffs.size()) throw std::invalid_argument("coweight of wrong rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s = mod(s + mod(v[i], chi.d) * chi.coeffs[i], chi.d);
  return s;
}

ObstructionClass obstruction_of_targets(const RootSystem& rs, const CocharLattice& lat,
                                        const std::vector<std::int64_t>& targets,
                                        const UnitGroup& units) {
  if (static_cast<int>(targets.size()) != rs.rank() + 1)
    throw std::invalid_argument("expected one target per affine node");
  ConnectingCharacter chi = connecting_character(rs, lat, coweight_lattice(rs));
  ObstructionClass out;
  out.modulus = std::gcd(chi.d, units.order);
  // The adjoint solution has alpha_i(t) = target_i, i.e. coweight coordinates = targets.
  std::int64_t v = 0;
  for (int i = 0; i < rs.rank(); ++i) v += chi.coeffs[i] * units.reduce(targets[i + 1]);
  out.value = mod(v, out.modulus);
  return out;
}

ObstructionClass obstruction(const RootSystem& rs, const CocharLattice& lat,
                             const FixerSystem& adjoint_system) {
  return obstruction_of_targets(rs, lat, adjoint_system.targets, adjoint_system.units);
}

}  // namespace weylrep
