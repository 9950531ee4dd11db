#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "support.hpp"
#include "weylrep/fixer.hpp"
#include "weylrep/smith.hpp"

using namespace weylrep;
using weylrep::testing::make;

namespace {

IntMatrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.below(2 * bound + 1) - bound;
  return m;
}

// Odometer over (Z/n)^k.
bool next_tuple(std::vector<std::int64_t>& v, std::int64_t n) {
  for (auto& x : v) {
    if (++x < n) return true;
    x = 0;
  }
  return false;
}

bool cyclic_quotient(const CocharLattice& lat, const RootSystem& rs) {
  try {
    connecting_character(rs, lat, coweight_lattice(rs));
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Coweight coordinates of epsilon_i^vee in type D (0-based i).
Coweight epsilon_coweight(int l, int i) {
  Coweight v(l, 0);
  for (int j = 0; j + 1 < l; ++j) v[j] = (i == j) - (i == j + 1);
  v[l - 1] = (i == l - 2) + (i == l - 1);
  return v;
}

}  // namespace

TEST(Smith, NormalFormIsUnimodularAndDivisible) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + rng.below(5), c = 1 + rng.below(5);
    const IntMatrix a = random_matrix(rng, r, c, 6);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(std::llabs(determinant(s.u)), 1);
    EXPECT_EQ(std::llabs(determinant(s.v)), 1);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      EXPECT_GE(diag[i], 0);
      if (i + 1 < diag.size() && diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0);
      if (diag[i] == 0 && i + 1 < diag.size()) EXPECT_EQ(diag[i + 1], 0);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
  }
}

TEST(Smith, HermiteFormSpansTheSameLattice) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng.below(4);
    IntMatrix a = random_matrix(rng, n + 2, n, 5);
    const IntMatrix h = hermite_normal_form(a);
    if (h.rows() != static_cast<std::size_t>(n)) continue;
    // Every row of a is an integral combination of h, and |det h| equals the
    // gcd of the maximal minors, i.e. the product of the Smith invariants.
    const RatMatrix inv = inverse(to_rational(h));
    for (int i = 0; i < n + 2; ++i) {
      IntMatrix row(1, n);
      for (int j = 0; j < n; ++j) row(0, j) = a(i, j);
      const RatMatrix coords = to_rational(row) * inv;
      for (int j = 0; j < n; ++j) EXPECT_EQ(coords(0, j).denominator(), 1);
    }
    std::int64_t prod = 1;
    for (auto d : smith_normal_form(a).diagonal()) prod *= d;
    EXPECT_EQ(std::llabs(determinant(h)), prod);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) EXPECT_EQ(h(i, j), 0);
    }
  }
}

TEST(Smith, SolveModAgreesWithBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::int64_t n = 2 + rng.below(11);
    const int rows = 1 + rng.below(3), cols = 1 + rng.below(3);
    const IntMatrix m = random_matrix(rng, rows, cols, 7);
    std::vector<std::int64_t> b(rows);
    for (auto& x : b) x = rng.below(static_cast<int>(n));
    bool exists = false;
    std::vector<std::int64_t> x(cols, 0);
    do {
      bool ok = true;
      for (int i = 0; i < rows && ok; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < cols; ++j) s += m(i, j) * x[j];
        ok = mod(s - b[i], n) == 0;
      }
      exists = exists || ok;
    } while (!exists && next_tuple(x, n));
    const auto sol = solve_mod(m, b, n);
    ASSERT_EQ(sol.has_value(), exists);
    if (sol)
      for (int i = 0; i < rows; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < cols; ++j) s += m(i, j) * (*sol)[j];
        EXPECT_EQ(mod(s - b[i], n), 0);
      }
  }
}

TEST(Lattice, NamesAndIndices) {
  auto d4 = make("D4");
  std::set<std::string> names;
  for (const auto& lat : intermediate_lattices(*d4)) names.insert(lat.name());
  EXPECT_EQ(names, (std::set<std::string>{"simply-connected", "adjoint", "SO", "half-spin",
                                          "half-spin'"}));
  auto a5 = make("A5");
  std::vector<std::int64_t> idx;
  for (const auto& lat : intermediate_lattices(*a5)) idx.push_back(lat.index());
  EXPECT_EQ(idx, (std::vector<std::int64_t>{1, 2, 3, 6}));
  EXPECT_EQ(lattice_by_name(*a5, "SL_6/mu_2").index(), 2);
  EXPECT_EQ(lattice_by_name(*a5, "sc"), coroot_lattice(*a5));
  EXPECT_THROW(lattice_by_name(*a5, "SO"), std::invalid_argument);
  EXPECT_EQ(intermediate_lattices(*make("E8")).size(), 1u);
}

TEST(Lattice, CorootCoordinates) {
  auto rs = make("B3");
  const auto sc = coroot_lattice(*rs);
  const RatMatrix c = sc.coroot_coordinates(*rs);
  // The simply-connected basis is an integral basis of the coroot lattice.
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) EXPECT_EQ(c(i, j).denominator(), 1);
  EXPECT_EQ(std::llabs(determinant(sc.basis())), determinant(rs->datum().cartan));
}

TEST(Fixer, ConnectingCharacterForPGL3) {
  auto rs = make("A2");
  const auto chi = connecting_character(*rs, coroot_lattice(*rs), coweight_lattice(*rs));
  EXPECT_EQ(chi.d, 3);
  EXPECT_EQ(chi.coeffs, (std::vector<std::int64_t>{1, 2}));
}

TEST(Fixer, CharacterKernelIsTheSmallLattice) {
  for (const auto& label : {"A3", "A5", "D5", "E6", "B3", "C4", "E7"}) {
    auto rs = make(label);
    const int l = rs->rank();
    const auto big = coweight_lattice(*rs);
    for (const auto& small : intermediate_lattices(*rs)) {
      if (!cyclic_quotient(small, *rs)) continue;
      const auto chi = connecting_character(*rs, small, big);
      EXPECT_EQ(chi.d, big.index() / small.index()) << label;
      std::vector<std::int64_t> v(l, 0);
      do {
        Coweight c(v.begin(), v.end());
        for (auto& x : c) x -= 1;  // box [-1, 1]^l
        EXPECT_EQ(evaluate_character(chi, c) == 0, small.contains(c)) << label;
      } while (next_tuple(v, 3));
    }
  }
  auto d4 = make("D4");
  EXPECT_THROW(connecting_character(*d4, coroot_lattice(*d4), coweight_lattice(*d4)),
               std::invalid_argument);
}

TEST(Fixer, ConnectingMapBruteForce) {
  // The image of T_small(k) in T_big(k) is the kernel of chi modulo d-th powers.
  for (const auto& label : all_type_labels(5)) {
    auto rs = make(label);
    const int l = rs->rank();
    const auto lattices = intermediate_lattices(*rs);
    for (const auto& small : lattices)
      for (const auto& big : lattices) {
        if (small.index() >= big.index() || big.index() % small.index()) continue;
        bool inside = true;
        for (int i = 0; i < l; ++i) inside = inside && big.contains(small.basis().row(i));
        if (!inside) continue;
        ConnectingCharacter chi;
        try {
          chi = connecting_character(*rs, small, big);
        } catch (const std::invalid_argument&) {
          continue;
        }
        // Small basis in big coordinates.
        const RatMatrix k = to_rational(small.basis()) * inverse(to_rational(big.basis()));
        for (std::int64_t q : {3, 4, 5, 7, 8, 9, 13}) {
          const std::int64_t n = q - 1;
          if (std::pow(static_cast<double>(n), l) > 60000) continue;
          const std::int64_t g = std::gcd(chi.d, n);
          std::set<std::vector<std::int64_t>> image;
          std::vector<std::int64_t> z(l, 0);
          do {
            std::vector<std::int64_t> y(l, 0);
            for (int i = 0; i < l; ++i)
              for (int j = 0; j < l; ++j) y[j] = mod(y[j] + z[i] * k(i, j).numerator(), n);
            // chi on the big torus point: coweight coordinates y B.
            std::int64_t val = 0;
            for (int j = 0; j < l; ++j)
              for (int i = 0; i < l; ++i) val += y[j] * big.basis()(j, i) * chi.coeffs[i];
            ASSERT_EQ(mod(val, g), 0) << label << " " << small.name() << " in " << big.name();
            image.insert(y);
          } while (next_tuple(z, n));
          std::int64_t total = 1;
          for (int i = 0; i < l; ++i) total *= n;
          EXPECT_EQ(static_cast<std::int64_t>(image.size()), total / g)
              << label << " " << small.name() << " in " << big.name() << " q=" << q;
        }
      }
  }
}

TEST(Fixer, EveryGenericFunctionalHasAWitness) {
  Rng rng(31);
  for (const auto& label : all_type_labels(5)) {
    auto rs = make(label);
    const ScalarTable t(StructureConstants::extraspecial(rs));
    for (const auto& lat : intermediate_lattices(*rs))
      for (const auto& e : omega_group(rs, lat))
        for (std::int64_t q : {5, 7, 13}) {
          const auto units = UnitGroup::for_field(q);
          for (int k = 0; k < 10; ++k) {
            const auto lambda = random_functional(rs->rank(), units, rng);
            const FixerSystem sys = build_system(t, lat, e, lambda, units);
            ASSERT_TRUE(sys.consistent) << label;
            const auto x = solve(*rs, sys);
            ASSERT_TRUE(x) << label << " " << lat.name() << " node " << e.node << " q=" << q;
            const auto vals = evaluate_roots(*rs, lat, *x, units);
            for (int i = 0; i <= rs->rank(); ++i) EXPECT_EQ(vals[i], sys.targets[i]);
            if (cyclic_quotient(lat, *rs))
              EXPECT_EQ(obstruction_of_targets(*rs, lat, sys.targets, units).value, 0);
          }
        }
  }
}

TEST(Fixer, SolvableExactlyWhenObstructionVanishes) {
  Rng rng(41);
  for (const auto& label : all_type_labels(5)) {
    auto rs = make(label);
    for (const auto& lat : intermediate_lattices(*rs)) {
      if (!cyclic_quotient(lat, *rs)) continue;
      for (std::int64_t q : {4, 5, 7, 9, 13}) {
        const auto units = UnitGroup::for_field(q);
        for (int k = 0; k < 25; ++k) {
          std::vector<std::int64_t> targets(rs->rank() + 1);
          for (auto& x : targets) x = rng.below(static_cast<int>(units.order));
          const bool solvable = solve_targets(*rs, lat, targets, units).has_value();
          const auto obs = obstruction_of_targets(*rs, lat, targets, units);
          EXPECT_EQ(solvable, obs.value == 0) << label << " " << lat.name() << " q=" << q;
        }
      }
    }
  }
}

TEST(Fixer, SpecialOrthogonalRecipe) {
  Rng rng(53);
  for (int l : {4, 5, 6, 7}) {
    auto rs = make("D" + std::to_string(l));
    const ScalarTable t(StructureConstants::extraspecial(rs));
    const auto lat = lattice_by_name(*rs, "SO");
    OmegaElement e;
    for (const auto& x : omega_group(rs, lat))
      if (x.node == 1) e = x;
    ASSERT_EQ(e.node, 1);
    for (std::int64_t q : {5, 7, 13}) {
      const auto units = UnitGroup::for_field(q);
      const auto lambda = random_functional(l, units, rng);
      const auto& lam = lambda.lambdas;
      const FixerSystem sys = build_system(t, lat, e, lambda, units);
      const int c1 = c_word(t, e.sigma, rs->simple_root(0));
      std::vector<std::int64_t> eps(l, 0);
      eps[l - 1] = -lam[l] + lam[l - 1];
      eps[0] = -lam[1] + lam[0] + units.sign(c1);
      Coweight v(l, 0);
      for (int i = 0; i < l; ++i) {
        const Coweight ei = epsilon_coweight(l, i);
        for (int j = 0; j < l; ++j) v[j] += eps[i] * ei[j];
      }
      ASSERT_TRUE(lat.contains(v));
      std::int64_t zero = 0;
      for (int j = 0; j < l; ++j) {
        EXPECT_EQ(units.reduce(v[j]), sys.targets[j + 1]) << "D" << l << " row " << j + 1;
        zero += affine_mark(*rs, j + 1) * v[j];
      }
      EXPECT_EQ(units.reduce(-zero), sys.targets[0]);
      EXPECT_TRUE(solve(*rs, sys));
    }
  }
}

TEST(Fixer, RejectsBadInput) {
  EXPECT_THROW(UnitGroup::for_field(6), std::invalid_argument);
  EXPECT_THROW(UnitGroup::for_field(1), std::invalid_argument);
  EXPECT_EQ(UnitGroup::for_field(8).minus_one(), 0);
  EXPECT_EQ(UnitGroup::for_field(7).minus_one(), 3);
  auto rs = make("A2");
  const ScalarTable t(StructureConstants::extraspecial(rs));
  const auto lat = coweight_lattice(*rs);
  const auto e = omega_group(rs, lat)[1];
  EXPECT_THROW(build_system(t, lat, e, GenericFunctional{{1, 2}}, UnitGroup::for_field(5)),
               std::invalid_argument);
}
