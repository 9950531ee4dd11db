#pragma once

// Chevalley bases, the conjugation scalars of canonical representatives, and
// the characters attached to dependence relations.
//
// The Lie algebra basis is h_0..h_{l-1} (simple coroots) followed by one root
// vector e_r per root, at position l + r. Brackets:
//   [h_i, e_r] = <r, alpha_i^vee> e_r,  [e_r, e_-r] = h_r (the coroot of r),
//   [e_r, e_s] = N(r, s) e_{r+s} when r + s is a root.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weylrep/weyl.hpp"

namespace weylrep {

struct ConstantEntry {
  RootIndex a;
  RootIndex b;
  int value;
};

struct JacobiViolation {
  RootIndex a, b, c;
};

class StructureConstants {
 public:
  /// Extraspecial-pair construction: N = +(p + 1) on every extraspecial pair,
  /// the rest forced by the Jacobi identity. Validated before returning.
  static StructureConstants extraspecial(std::shared_ptr<const RootSystem> rs);

  /// Table supplied from outside (fixtures). Entries must cover every pair
  /// whose sum is a root; nothing is validated here.
  static StructureConstants from_entries(std::shared_ptr<const RootSystem> rs,
                                         const std::vector<ConstantEntry>& entries,
                                         std::string convention_id);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  const std::string& convention() const { return convention_; }

  /// N(a, b), zero when a + b is not a root.
  int n(RootIndex a, RootIndex b) const { return table_[a * rs_->num_roots() + b]; }

  /// Every pair (a, b) with a + b a root, in index order.
  std::vector<ConstantEntry> entries() const;

  /// Multiplies each root vector e_a (and e_-a) by signs[a] for positive a.
  StructureConstants rescaled(const std::vector<int>& signs, std::string convention_id) const;

  /// Root triples on which the Jacobi identity fails, up to `limit` of them.
  std::vector<JacobiViolation> jacobi_violations(std::size_t limit = 1) const;

  /// Antisymmetry, N(-a,-b) = -N(a,b), and |N(a,b)| = q + 1 with q the length
  /// of the a-string below b. Human-readable, empty when all hold.
  std::vector<std::string> structural_violations() const;

  int dimension() const { return rs_->rank() + static_cast<int>(rs_->num_roots()); }

  /// Bracket of two vectors in the Chevalley basis.
  std::vector<std::int64_t> bracket(const std::vector<std::int64_t>& x,
                                    const std::vector<std::int64_t>& y) const;

  /// Matrix of ad(e_r); column j is [e_r, basis_j].
  IntMatrix ad_root_vector(RootIndex r) const;

 private:
  StructureConstants(std::shared_ptr<const RootSystem> rs, std::string convention);

  std::shared_ptr<const RootSystem> rs_;
  std::string convention_;
  std::vector<int> table_;
};

/// Ad of the canonical generators n_s = exp(e_s) exp(-e_-s) exp(e_s) and the
/// scalars c(s, a) with Ad(n_s) e_a = c(s, a) e_{s(a)}.
class ScalarTable {
 public:
  /// Throws InvariantViolation if an exponential is not integral or a root
  /// vector is not sent to a signed root vector.
  explicit ScalarTable(const StructureConstants& constants);

  const RootSystem& roots() const { return *rs_; }
  const std::string& convention() const { return convention_; }

  int c_generator(int s, RootIndex a) const { return c_[s * rs_->num_roots() + a]; }

  /// Integer matrix of Ad(n_s) on the Chevalley basis.
  const IntMatrix& ad_generator(int s) const { return ad_n_[s]; }

  /// c(s,a) c(s,-a) = 1 and the Chevalley property, as readable failures.
  std::vector<std::string> violations() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::string convention_;
  std::vector<IntMatrix> ad_n_;
  std::vector<int> c_;
};

/// Scalar of Ad(S(w)) on e_a, composed along the stored reduced word with the
/// rightmost generator acting first: c(n n', a) = c(n, w'(a)) c(n', a).
int c_word(const ScalarTable& table, const WeylElement& w, RootIndex a);

struct DependenceRelation {
  std::vector<std::pair<int, RootIndex>> terms;  // (multiplicity, root)
};

/// Sum of m_i a_i is zero and the roots are distinct.
bool is_dependence_relation(const RootSystem& rs, const DependenceRelation& d);

/// w permutes the roots of d and preserves multiplicities.
bool fixes(const WeylElement& w, const DependenceRelation& d);

/// Product of c_word(w, a_i)^{m_i}. Throws std::invalid_argument if w does not fix d.
int evaluate_character(const ScalarTable& table, const DependenceRelation& d, const WeylElement& w);

/// (1, -theta) together with (m_i, alpha_i).
DependenceRelation highest_root_relation(const RootSystem& rs);

}  // namespace weylrep
