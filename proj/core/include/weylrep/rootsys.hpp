#pragma once

// Irreducible reduced root systems with exact integer data.
//
// Conventions:
//   * Simple roots are numbered as in the Bourbaki plates; the C++ API uses
//     0-based indices (alpha_1 is simple index 0).
//   * cartan(i, j) = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
//   * Roots are stored in simple-root coordinates, coroots in simple-coroot
//     coordinates. Positive roots occupy indices [0, P) ordered by height and
//     then lexicographically descending coefficients (so simple roots come
//     first, in Bourbaki order); index i + P holds the negative of root i.

#include <cstdint>
#include <optional>
#include <string>
#include <map>
#include <utility>
#include <vector>

#include "weylrep/matrix.hpp"

namespace weylrep {

using RootIndex = std::uint16_t;
using Coeffs = std::vector<int>;

struct CartanDatum {
  char type = 'A';
  int rank = 1;
  IntMatrix cartan;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

/// Hard-coded Bourbaki Cartan matrix for an irreducible type. Throws
/// std::invalid_argument for unsupported (type, rank) pairs.
CartanDatum cartan_datum(char type, int rank);

/// Parses labels such as "D5" or "e6".
CartanDatum cartan_datum(const std::string& label);

/// Every (type, rank) label this library knows, with rank <= max_rank.
std::vector<std::string> all_type_labels(int max_rank);

struct RootString {
  int p = 0;  // b + i*a in Phi for 0 <= i <= p
  int q = 0;  // b - i*a in Phi for 0 <= i <= q
  friend bool operator==(const RootString&, const RootString&) = default;
};

class RootSystem {
 public:
  /// Closure construction from a Cartan datum. Throws std::invalid_argument
  /// on malformed, reducible or non-positive-definite matrices.
  explicit RootSystem(CartanDatum datum);

  const CartanDatum& datum() const { return datum_; }
  char type() const { return datum_.type; }
  int rank() const { return datum_.rank; }
  std::string label() const { return datum_.label(); }

  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }

  const Coeffs& root(RootIndex i) const { return roots_[i]; }
  const Coeffs& coroot(RootIndex i) const { return coroots_[i]; }
  std::optional<RootIndex> find(const Coeffs& coeffs) const;
  RootIndex index_of(const Coeffs& coeffs) const;

  bool is_positive(RootIndex i) const { return i < num_positive(); }
  RootIndex negate(RootIndex i) const {
    const auto p = num_positive();
    return static_cast<RootIndex>(i < p ? i + p : i - p);
  }
  RootIndex simple_root(int i) const { return static_cast<RootIndex>(i); }
  bool is_simple(RootIndex i) const { return i < rank(); }

  int height(RootIndex i) const { return heights_[i]; }

  /// <a, b^vee>.
  int pairing(RootIndex a, RootIndex b) const { return pairing_[a * num_roots() + b]; }

  /// 2(a|b) for the invariant form normalized so short roots have (a|a) = 1
  /// in simply-laced and doubly-laced types (1 or 3 ratios in G2).
  std::int64_t form(const Coeffs& a, const Coeffs& b) const;

  /// Index of a + b, if it is a root.
  std::optional<RootIndex> sum(RootIndex a, RootIndex b) const {
    const int s = sum_[a * num_roots() + b];
    return s < 0 ? std::nullopt : std::optional<RootIndex>(static_cast<RootIndex>(s));
  }

  /// Image of root `a` under the simple reflection s_i.
  RootIndex reflect(int i, RootIndex a) const { return reflections_[i][a]; }
  const std::vector<RootIndex>& reflection_perm(int i) const { return reflections_[i]; }

  /// Coroot coordinates reduced mod 2, packed as a bitmask.
  std::uint32_t coroot_bits(RootIndex i) const { return coroot_bits_[i]; }

  RootIndex highest_root() const { return highest_; }
  int coxeter_number() const { return coxeter_; }

  /// Marks m_1..m_l: coefficients of the highest root.
  const Coeffs& marks() const { return roots_[highest_]; }

  /// 2*rho-check = sum of positive coroots, in simple-coroot coordinates.
  const Coeffs& rho_check_twice() const { return rho_check_twice_; }

  /// Length squared (a|a) of simple root i, scaled to integers.
  int simple_length(int i) const { return lengths_[i]; }

  /// The a-string through b. Throws std::invalid_argument if b = +-a.
  RootString root_string(RootIndex a, RootIndex b) const;

  /// Pairing of a root with an arbitrary coroot-lattice vector
  /// (simple-coroot coordinates).
  std::int64_t pair_with_coroot_vector(const Coeffs& root_coeffs,
                                       const std::vector<std::int64_t>& coroot_coeffs) const;

 private:
  CartanDatum datum_;
  std::vector<int> lengths_;  // (alpha_i|alpha_i), integer normalized
  std::vector<Coeffs> roots_;
  std::vector<Coeffs> coroots_;
  std::vector<int> heights_;
  std::vector<int> pairing_;
  std::vector<int> sum_;
  std::vector<std::vector<RootIndex>> reflections_;
  std::vector<std::uint32_t> coroot_bits_;
  std::map<Coeffs, RootIndex> lookup_;
  Coeffs rho_check_twice_;
  RootIndex highest_ = 0;
  int coxeter_ = 0;
};

/// Condition (2) of the simply-laced characterization: every pairing of
/// non-proportional roots lies in {-1, 0, 1}.
bool is_simply_laced(const RootSystem& rs);

/// All four simply-laced characterizations, evaluated independently:
/// no multiple bonds, small pairings, symmetric Cartan matrix, equal lengths.
struct SimplyLacedConditions {
  bool no_multiple_bonds;
  bool small_pairings;
  bool symmetric_cartan;
  bool equal_lengths;
};
SimplyLacedConditions simply_laced_conditions(const RootSystem& rs);

int height(const RootSystem& rs, RootIndex a);

std::string format_coeffs(const Coeffs& c);

}  // namespace weylrep
