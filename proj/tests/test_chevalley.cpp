#include <gtest/gtest.h>

#include "support.hpp"
#include "weylrep/chevalley.hpp"
#include "weylrep/affine.hpp"
#include "weylrep/random.hpp"
#include "weylrep_tools/io.hpp"

using namespace weylrep;
using weylrep::testing::make;

namespace {

std::vector<std::int64_t> unit(int dim, int i) {
  std::vector<std::int64_t> v(dim, 0);
  v[i] = 1;
  return v;
}

std::vector<int> random_signs(const RootSystem& rs, Rng& rng) {
  std::vector<int> s(rs.num_positive());
  for (auto& x : s) x = rng.below(2) ? -1 : 1;
  return s;
}

// Ad(S(w)) from the generator matrices along the stored reduced word.
IntMatrix ad_word(const ScalarTable& t, const WeylElement& w) {
  const int dim = w.roots().rank() + static_cast<int>(w.roots().num_roots());
  IntMatrix m = IntMatrix::identity(dim);
  for (int s : w.word()) m = m * t.ad_generator(s);
  return m;
}

StructureConstants load_fixture(const std::string& name) {
  return io::constants_from_json(make("B2"), io::read_json_file(weylrep::testing::golden_path(name)));
}

}  // namespace

TEST(Chevalley, ExtraspecialTablesAreValid) {
  for (const auto& label : all_type_labels(7)) {
    auto rs = make(label);
    const auto sc = StructureConstants::extraspecial(rs);
    EXPECT_TRUE(sc.structural_violations().empty()) << label;
    EXPECT_TRUE(sc.jacobi_violations().empty()) << label;
    const ScalarTable t(sc);
    EXPECT_TRUE(t.violations().empty()) << label;
  }
}

TEST(Chevalley, G2Constants) {
  auto rs = make("G2");
  const auto sc = StructureConstants::extraspecial(rs);
  // Bourbaki G2: alpha_1 short, alpha_2 long. N(a1, a2) is the extraspecial value 1;
  // going up the string the magnitudes are 2 and 3.
  const RootIndex a1 = rs->index_of({1, 0}), a2 = rs->index_of({0, 1});
  EXPECT_EQ(sc.n(a1, a2), 1);
  EXPECT_EQ(std::abs(sc.n(a1, rs->index_of({1, 1}))), 2);
  EXPECT_EQ(std::abs(sc.n(a1, rs->index_of({2, 1}))), 3);
}

TEST(Chevalley, RescalingPreservesValidity) {
  Rng rng(8);
  for (const auto& label : {"B3", "G2", "F4", "C3"}) {
    auto rs = make(label);
    const auto base = StructureConstants::extraspecial(rs);
    for (int k = 0; k < 3; ++k) {
      const auto sc = base.rescaled(random_signs(*rs, rng), "random");
      EXPECT_TRUE(sc.structural_violations().empty()) << label;
      EXPECT_TRUE(sc.jacobi_violations().empty()) << label;
    }
  }
}

TEST(Chevalley, JacobiDetectsCorruption) {
  const auto bad = load_fixture("B2_corrupted_constants.json");
  EXPECT_TRUE(bad.structural_violations().empty());
  const auto v = bad.jacobi_violations(5);
  ASSERT_FALSE(v.empty());
  for (const auto& t : v) {
    EXPECT_LT(t.a, t.b);
    EXPECT_LT(t.b, t.c);
  }
}

TEST(Chevalley, BracketIsALieBracket) {
  for (const auto& label : {"B2", "G2"}) {
    auto rs = make(label);
    const auto sc = StructureConstants::extraspecial(rs);
    const int dim = sc.dimension();
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        auto x = sc.bracket(unit(dim, i), unit(dim, j));
        auto y = sc.bracket(unit(dim, j), unit(dim, i));
        for (int k = 0; k < dim; ++k) ASSERT_EQ(x[k], -y[k]);
        for (int m = 0; m < dim; ++m) {
          auto t1 = sc.bracket(unit(dim, i), sc.bracket(unit(dim, j), unit(dim, m)));
          auto t2 = sc.bracket(unit(dim, j), sc.bracket(unit(dim, m), unit(dim, i)));
          auto t3 = sc.bracket(unit(dim, m), sc.bracket(unit(dim, i), unit(dim, j)));
          for (int k = 0; k < dim; ++k) ASSERT_EQ(t1[k] + t2[k] + t3[k], 0) << label;
        }
      }
  }
}

TEST(Chevalley, GeneratorsActAsAutomorphisms) {
  for (const auto& label : {"B2", "G2", "A3"}) {
    auto rs = make(label);
    const auto sc = StructureConstants::extraspecial(rs);
    const ScalarTable t(sc);
    const int dim = sc.dimension();
    for (int s = 0; s < rs->rank(); ++s) {
      const IntMatrix& g = t.ad_generator(s);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          const auto lhs = g.apply(sc.bracket(unit(dim, i), unit(dim, j)));
          const auto rhs = sc.bracket(g.col(i), g.col(j));
          ASSERT_EQ(lhs, rhs) << label;
        }
      // n_s^2 = alpha_s^vee(-1) acts on e_a by (-1)^<a, alpha_s^vee>.
      const IntMatrix sq = g * g;
      for (RootIndex a = 0; a < rs->num_roots(); ++a) {
        const int sign = rs->pairing(a, rs->simple_root(s)) % 2 ? -1 : 1;
        EXPECT_EQ(sq(rs->rank() + a, rs->rank() + a), sign);
      }
    }
  }
}

TEST(Chevalley, CWordMatchesAdjointMatrices) {
  Rng rng(2024);
  for (const auto& label : {"B3", "C3", "F4", "G2"}) {
    auto rs = make(label);
    const ScalarTable t(StructureConstants::extraspecial(rs));
    for (int trial = 0; trial < 25; ++trial) {
      const WeylElement w = random_element(rs, rng);
      const IntMatrix m = ad_word(t, w);
      for (RootIndex a = 0; a < rs->num_roots(); ++a) {
        const auto col = m.col(rs->rank() + a);
        for (std::size_t i = 0; i < col.size(); ++i) {
          const bool target = i == rs->rank() + w(a);
          ASSERT_EQ(col[i], target ? c_word(t, w, a) : 0) << label;
        }
      }
    }
  }
}

TEST(Chevalley, HighestRootCharacterIsTrivial) {
  Rng rng(77);
  for (const auto& label : all_type_labels(6)) {
    auto rs = make(label);
    const auto base = StructureConstants::extraspecial(rs);
    const auto rel = highest_root_relation(*rs);
    ASSERT_TRUE(is_dependence_relation(*rs, rel));
    for (const auto& sc : {base, base.rescaled(random_signs(*rs, rng), "random")}) {
      const ScalarTable t(sc);
      for (const auto& e : omega_group(rs, coweight_lattice(*rs))) {
        ASSERT_TRUE(fixes(e.sigma, rel));
        EXPECT_EQ(evaluate_character(t, rel, e.sigma), 1) << label << " node " << e.node;
      }
    }
  }
}

TEST(Chevalley, CitedB2TableGivesNontrivialCharacter) {
  const auto sc = load_fixture("B2_cited_constants.json");
  EXPECT_TRUE(sc.structural_violations().empty());
  EXPECT_TRUE(sc.jacobi_violations().empty());
  const auto& rs = sc.root_system();
  const ScalarTable t(sc);
  // alpha short simple, beta long simple, s the reflection in beta.
  const RootIndex alpha = rs->index_of({0, 1});
  const RootIndex gamma = rs->index_of({1, 1});
  const RootIndex theta = rs->index_of({1, 2});
  const WeylElement s = WeylElement::simple(rs, 0);
  EXPECT_EQ(c_word(t, s, alpha), 1);
  EXPECT_EQ(c_word(t, s, gamma), -1);
  EXPECT_EQ(c_word(t, s, theta), 1);
  DependenceRelation d{{{1, alpha}, {1, gamma}, {-1, theta}}};
  ASSERT_TRUE(is_dependence_relation(*rs, d));
  ASSERT_TRUE(fixes(s, d));
  EXPECT_EQ(evaluate_character(t, d, s), -1);
  // The same relation under the default convention: the character does not
  // depend on the sign choice.
  EXPECT_EQ(evaluate_character(ScalarTable(StructureConstants::extraspecial(rs)), d, s), -1);
}

TEST(Chevalley, DependenceRelationGuards) {
  auto rs = make("A2");
  const ScalarTable t(StructureConstants::extraspecial(rs));
  DependenceRelation not_zero{{{1, 0}, {1, 1}}};
  EXPECT_FALSE(is_dependence_relation(*rs, not_zero));
  const auto rel = highest_root_relation(*rs);
  EXPECT_THROW(evaluate_character(t, rel, WeylElement::simple(rs, 0)), std::invalid_argument);
}

TEST(Chevalley, FixtureRoundTrip) {
  auto rs = make("F4");
  const auto sc = StructureConstants::extraspecial(rs);
  const auto again = io::constants_from_json(rs, io::constants_json(sc));
  for (const auto& e : sc.entries()) EXPECT_EQ(again.n(e.a, e.b), e.value);
  EXPECT_THROW(io::constants_from_json(make("B3"), io::constants_json(sc)), std::invalid_argument);
  auto doc = io::constants_json(sc);
  doc["entries"].erase(doc["entries"].begin());
  EXPECT_THROW(io::constants_from_json(rs, doc), std::invalid_argument);
}
