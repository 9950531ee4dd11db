#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"
#include "weylrep/affine.hpp"

using namespace weylrep;
using weylrep::testing::make;

namespace {

// Permutation of affine nodes from cycle notation given as node lists.
std::vector<int> from_cycles(int nodes, const std::vector<std::vector<int>>& cyc) {
  std::vector<int> perm(nodes);
  for (int k = 0; k < nodes; ++k) perm[k] = k;
  for (const auto& c : cyc)
    for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
  return perm;
}

const OmegaElement& element_for(const std::vector<OmegaElement>& omega, int node) {
  for (const auto& e : omega)
    if (e.node == node) return e;
  throw std::logic_error("no element for node");
}

// Independent recomputation of the triple set: partition the positive roots
// by their R and S coefficients and test every sum.
struct Triples {
  std::map<Coeffs, int> f01, f10, f11;
  std::size_t count = 0;
};

Triples enumerate_triples(const RootSystem& rs, int r, int s) {
  Triples t;
  std::vector<Coeffs> p01, p10, p11;
  for (RootIndex x = 0; x < rs.num_positive(); ++x) {
    const Coeffs& c = rs.root(x);
    if (c[r] == 0 && c[s] == 1) p01.push_back(c);
    if (c[r] == 1 && c[s] == 0) p10.push_back(c);
    if (c[r] == 1 && c[s] == 1) p11.push_back(c);
  }
  for (const auto& c : p01) t.f01[c] = 0;
  for (const auto& c : p10) t.f10[c] = 0;
  for (const auto& c : p11) t.f11[c] = 0;
  for (const auto& a : p01)
    for (const auto& b : p10) {
      Coeffs g(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) g[i] = a[i] + b[i];
      if (!rs.find(g)) continue;
      ++t.count;
      ++t.f01[a];
      ++t.f10[b];
      ++t.f11[g];
    }
  return t;
}

bool constant(const std::map<Coeffs, int>& m, int v) {
  for (const auto& [k, x] : m)
    if (x != v) return false;
  return true;
}

}  // namespace

TEST(Affine, DiagramAutomorphismPathAgreesWithBruteForce) {
  for (const auto& label : {"A2", "A3", "A4", "B3", "C3", "D4", "D5", "E6"}) {
    auto rs = make(label);
    auto group = enumerate_group(rs, 60000);
    ASSERT_TRUE(group) << label;
    for (int node : minuscule_indices(*rs))
      EXPECT_EQ(omega_sigma(rs, node + 1), omega_sigma_bruteforce(*group, node + 1)) << label;
  }
}

TEST(Affine, OmegaGroupMatchesLatticeQuotient) {
  for (const auto& label : all_type_labels(7)) {
    auto rs = make(label);
    for (const auto& lat : intermediate_lattices(*rs)) {
      const auto omega = omega_group(rs, lat);
      EXPECT_EQ(static_cast<std::int64_t>(omega.size()), lat.index()) << label << " " << lat.name();
      EXPECT_TRUE(omega.front().sigma.is_identity());
      std::set<WeylElement> elems;
      for (const auto& e : omega) elems.insert(e.sigma);
      for (const auto& x : omega)
        for (const auto& y : omega) EXPECT_TRUE(elems.count(x.sigma * y.sigma)) << label;
    }
  }
}

TEST(Affine, D5Generator) {
  auto rs = make("D5");
  const auto omega = omega_group(rs, coweight_lattice(*rs));
  ASSERT_EQ(omega.size(), 4u);
  const auto& e = element_for(omega, 5);
  // (alpha_1 alpha_4 -theta alpha_5)(alpha_2 alpha_3)
  EXPECT_EQ(e.diagram_perm, from_cycles(6, {{1, 4, 0, 5}, {2, 3}}));
  EXPECT_EQ(cycle_string(e.diagram_perm), "(a1 a4 -theta a5)(a2 a3)");
  EXPECT_EQ(e.sigma.order(), 4);
}

TEST(Affine, E6Generator) {
  auto rs = make("E6");
  const auto omega = omega_group(rs, coweight_lattice(*rs));
  const auto& e = element_for(omega, 6);
  // (alpha_1 -theta alpha_6)(alpha_3 alpha_2 alpha_5)(alpha_4)
  EXPECT_EQ(e.diagram_perm, from_cycles(7, {{1, 0, 6}, {3, 2, 5}, {4}}));
  EXPECT_EQ(e.sigma.order(), 3);
}

TEST(Affine, D5Decomposition) {
  auto rs = make("D5");
  const SigmaRSDatum d = sigma_rs(omega_sigma(rs, 5));
  EXPECT_EQ(rs->root(d.r), (Coeffs{0, 0, 0, 1, 0}));
  EXPECT_EQ(rs->root(d.s), (Coeffs{1, 0, 0, 0, 0}));
  EXPECT_EQ(d.part(0, 0).size(), 6u);
  EXPECT_EQ(d.part(0, 1).size(), 4u);
  EXPECT_EQ(d.part(1, 0).size(), 6u);
  EXPECT_EQ(d.part(1, 1).size(), 4u);
  EXPECT_EQ(d.triples.size(), 12u);
  EXPECT_EQ(d.a, 3);
  EXPECT_EQ(d.b, 2);
  EXPECT_EQ(d.c, 3);
  EXPECT_EQ(rs->coxeter_number(), 8);
  EXPECT_TRUE(fibers_constant(d));
  EXPECT_TRUE(sigma_rs_violations(d).empty());

  // Rows of the triple table are the part (1,0), columns the part (0,1).
  const std::vector<Coeffs> rows{{0, 0, 0, 1, 0}, {0, 0, 1, 1, 0}, {0, 1, 1, 1, 0},
                                 {0, 0, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 1, 2, 1, 1}};
  const std::vector<Coeffs> cols{{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 1, 0, 1}};
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rs->root(d.part(1, 0)[i]), rows[i]);
  for (std::size_t j = 0; j < cols.size(); ++j) EXPECT_EQ(rs->root(d.part(0, 1)[j]), cols[j]);

  // 8 F_w = 3 [ht - 2 ht(w) + ht(w^2)]
  for (RootIndex a = 0; a < rs->num_roots(); ++a) {
    EXPECT_EQ(8 * f_functional(d.w, d.w, a),
              3 * (rs->height(a) - 2 * rs->height(d.w(a)) + rs->height(d.w(d.w(a)))));
    EXPECT_TRUE(check_formula2(d, a));
  }
  EXPECT_EQ(fw_at_r(d.w), 6);
}

TEST(Affine, E6Decomposition) {
  auto rs = make("E6");
  const SigmaRSDatum d = sigma_rs(omega_sigma(rs, 6));
  EXPECT_EQ(rs->root(d.r), (Coeffs{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(rs->root(d.s), (Coeffs{0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(d.a, 4);
  EXPECT_EQ(d.b, 4);
  EXPECT_EQ(d.c, 4);
  EXPECT_EQ(rs->coxeter_number(), 12);
  EXPECT_TRUE(fibers_constant(d));
  for (RootIndex a = 0; a < rs->num_roots(); ++a)
    EXPECT_EQ(12 * f_functional(d.w, d.w, a),
              4 * (rs->height(a) - 2 * rs->height(d.w(a)) + rs->height(d.w(d.w(a)))));
}

TEST(Affine, ConstantFibersAgainstEnumeration) {
  for (const std::string label : {"A2", "A3", "A4", "A5", "A6", "A7", "A8", "D5", "D7", "E6"}) {
    auto rs = make(label);
    for (const auto& e : omega_group(rs, coweight_lattice(*rs))) {
      if (e.sigma.order() < 3) continue;
      const SigmaRSDatum d = sigma_rs(e.sigma);
      const Triples t = enumerate_triples(*rs, d.r, d.s);
      EXPECT_EQ(t.count, d.triples.size()) << label;
      EXPECT_TRUE(constant(t.f01, d.a)) << label << " node " << e.node;
      EXPECT_TRUE(constant(t.f10, d.b)) << label << " node " << e.node;
      EXPECT_TRUE(constant(t.f11, d.c)) << label << " node " << e.node;
      EXPECT_EQ(d.a, d.c) << label;
      EXPECT_EQ(d.a + d.b + d.c, rs->coxeter_number()) << label;
      EXPECT_TRUE(sigma_rs_violations(d).empty()) << label;
    }
  }
}

TEST(Affine, FwAtREven) {
  for (const auto& label : all_type_labels(6)) {
    auto rs = make(label);
    for (const auto& e : omega_group(rs, coweight_lattice(*rs))) {
      if (e.sigma.is_identity()) continue;
      const int f = fw_at_r(e.sigma);
      EXPECT_EQ(f % 2, 0) << label << " node " << e.node;
      // For an involution the flipping set is the whole inversion set.
      if (e.sigma.order() == 2) EXPECT_EQ(f, rs->coxeter_number()) << label;
    }
  }
}

TEST(Affine, TypeDOrderFourFamily) {
  for (int l = 4; l <= 8; ++l) {
    auto rs = make("D" + std::to_string(l));
    int order_four = 0;
    for (const auto& e : omega_group(rs, coweight_lattice(*rs))) {
      if (e.sigma.order() != 4) continue;
      ++order_four;
      EXPECT_EQ(fw_at_r(e.sigma), 2 * l - 4) << "D" << l;
    }
    // P^vee / Q^vee is cyclic of order 4 exactly for odd rank.
    EXPECT_EQ(order_four, l % 2 ? 2 : 0) << "D" << l;
  }
}

TEST(Affine, RefusesSmallOrders) {
  auto rs = make("A1");
  EXPECT_THROW(sigma_rs(omega_sigma(rs, 1)), std::invalid_argument);
  auto d4 = make("D4");
  EXPECT_THROW(sigma_rs(omega_sigma(d4, 1)), std::invalid_argument);
  EXPECT_THROW(sigma_rs(WeylElement::simple(d4, 0)), std::invalid_argument);
  EXPECT_THROW(fw_at_r(WeylElement::identity(d4)), std::invalid_argument);
}

TEST(Affine, CyclesAndStrings) {
  EXPECT_EQ(cycles({0, 2, 1}), (std::vector<std::vector<int>>{{0}, {1, 2}}));
  EXPECT_EQ(cycle_string({0, 1, 2}), "()");
  EXPECT_EQ(cycle_string({1, 0, 2}, true), "(a1 -theta)(a2)");
  EXPECT_EQ(affine_mark(*make("E8"), 0), 1);
  EXPECT_EQ(affine_mark(*make("E8"), 4), 6);
}
