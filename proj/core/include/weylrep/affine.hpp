#pragma once

// Alcove stabilizers and the R/S decomposition of the positive roots.
//
// Affine nodes are labelled 0..l: node 0 is the affine simple gradient
// alpha_0 = -theta, node k >= 1 is the simple root with 0-based index k - 1.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "weylrep/lattice.hpp"
#include "weylrep/weyl.hpp"

namespace weylrep {

RootIndex affine_root(const RootSystem& rs, int node);

/// m_0 = 1, m_k = coefficient of alpha_{k-1} in theta.
int affine_mark(const RootSystem& rs, int node);

/// Node of sigma(alpha_node), or -1 if it is not an affine simple gradient.
int affine_image(const WeylElement& sigma, int node);

/// True iff sigma permutes {alpha_0, ..., alpha_l}.
bool permutes_affine_simple(const WeylElement& sigma);

/// Permutations of {0..l} preserving the extended Cartan matrix.
std::vector<std::vector<int>> affine_diagram_automorphisms(const RootSystem& rs);

/// The Weyl element sending alpha_0 to alpha_node and permuting the affine
/// simple gradients. Found by testing affine diagram automorphisms for
/// membership in W; throws InvariantViolation if none qualifies.
WeylElement omega_sigma(std::shared_ptr<const RootSystem> rs, int node);

/// Same element by exhaustive search through an enumerated group.
WeylElement omega_sigma_bruteforce(const std::vector<WeylElement>& group, int node);

struct OmegaElement {
  int node = 0;          // affine node that sigma sends alpha_0 to
  Coweight class_rep;    // fundamental coweight of that node (zero for node 0)
  WeylElement sigma;
  std::vector<int> diagram_perm;  // diagram_perm[k] = node of sigma(alpha_k)
};

/// One element per class of X^vee / Q^vee, identity first. Every sigma is
/// post-verified (permutes the affine nodes, order equals the orbit size of
/// node 0, marks preserved, class-to-element map multiplicative).
std::vector<OmegaElement> omega_group(std::shared_ptr<const RootSystem> rs,
                                      const CocharLattice& lat);

/// Disjoint cycles of a permutation of {0..n-1}, fixed points included,
/// each cycle starting at its smallest entry.
std::vector<std::vector<int>> cycles(const std::vector<int>& perm);

/// Cycle notation with alpha_k and -theta labels, e.g. "(a1 a4 -theta a5)(a2 a3)".
std::string cycle_string(const std::vector<int>& diagram_perm, bool show_fixed = false);

struct SigmaTriple {
  RootIndex alpha;  // in part (0,1)
  RootIndex beta;   // in part (1,0)
  RootIndex gamma;  // alpha + beta, in part (1,1)
};

struct SigmaRSDatum {
  WeylElement w;
  RootIndex r = 0;  // w(R) = -theta
  RootIndex s = 0;  // w(S) = R
  /// parts[2 * b_R + b_S]: positive roots by their R and S coefficients.
  std::array<RootSet, 4> parts;
  std::vector<SigmaTriple> triples;
  /// Fiber sizes over each element of parts (0,1), (1,0), (1,1), in part order.
  std::vector<int> fibers01, fibers10, fibers11;
  /// Fiber sizes over the extremal elements S, R, theta.
  int a = 0, b = 0, c = 0;

  const RootSet& part(int br, int bs) const { return parts[2 * br + bs]; }
};

/// Builds the R/S datum for w in prW(Omega) of order at least 3. Throws
/// std::invalid_argument if the order is smaller or w does not permute the
/// affine simple gradients.
SigmaRSDatum sigma_rs(const WeylElement& w);

bool fibers_constant(const SigmaRSDatum& d);

/// Descriptions that fail: partition, inversion set, flipping set, extremal
/// elements, and a F01 + b F10 = c F11 as coroot vectors. Empty when all hold.
std::vector<std::string> sigma_rs_violations(const SigmaRSDatum& d);

/// h * F_w(a) = c * [ht(a) - 2 ht(w a) + ht(w^2 a)] together with a = c and a + b + c = h.
bool check_formula2(const SigmaRSDatum& d, RootIndex a);

/// F_w(R) for R = w^-1(-theta); requires w to permute the affine nodes and w != 1.
int fw_at_r(const WeylElement& w);

bool check_fw_even(const WeylElement& w);

}  // namespace weylrep
