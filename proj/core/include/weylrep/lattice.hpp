#pragma once

// Cocharacter lattices between the coroot lattice and the coweight lattice.
//
// Vectors are written in fundamental-coweight coordinates, where everything
// is integral: the coweight lattice is Z^l, alpha_i^vee is row i of the Cartan
// matrix, and <alpha_j, v> is simply v_j.

#include <cstdint>
#include <string>
#include <vector>

#include "weylrep/matrix.hpp"
#include "weylrep/rootsys.hpp"

namespace weylrep {

using Coweight = std::vector<std::int64_t>;

Coweight fundamental_coweight(int rank, int i);

/// Coweight of a simple coroot alpha_i^vee.
Coweight simple_coroot_coweight(const RootSystem& rs, int i);

/// True iff v lies in the coroot lattice.
bool in_coroot_lattice(const RootSystem& rs, const Coweight& v);

/// Simple indices i (0-based) with mark 1; their fundamental coweights
/// represent the nonzero classes of P^vee / Q^vee.
std::vector<int> minuscule_indices(const RootSystem& rs);

/// Affine-node label of the class of v in P^vee / Q^vee: 0 for the trivial
/// class, otherwise i + 1 where omega_i^vee is the minuscule representative.
int class_node(const RootSystem& rs, const Coweight& v);

class CocharLattice {
 public:
  /// The lattice generated by the coroot lattice and `extra`.
  static CocharLattice generated(const RootSystem& rs, const std::vector<Coweight>& extra,
                                 std::string name);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(basis_.rows()); }

  /// Hermite-normal-form basis, one row per basis vector.
  const IntMatrix& basis() const { return basis_; }

  /// The same basis written in simple-coroot coordinates (rational in general).
  RatMatrix coroot_coordinates(const RootSystem& rs) const;

  /// [X^vee : Q^vee].
  std::int64_t index() const { return index_; }

  bool contains(const Coweight& v) const;

  /// Generators of X^vee / Q^vee as minuscule simple indices (0-based).
  const std::vector<int>& minuscule_generators() const { return generators_; }

  friend bool operator==(const CocharLattice& x, const CocharLattice& y) {
    return x.basis_ == y.basis_;
  }

 private:
  std::string name_;
  IntMatrix basis_;
  RatMatrix inverse_;
  std::int64_t index_ = 1;
  std::vector<int> generators_;
};

CocharLattice coroot_lattice(const RootSystem& rs);
CocharLattice coweight_lattice(const RootSystem& rs);

/// Every lattice between Q^vee and P^vee, named, in increasing index order.
std::vector<CocharLattice> intermediate_lattices(const RootSystem& rs);

/// Looks a lattice up by name ("simply-connected", "adjoint", "SO",
/// "half-spin", "half-spin'", "SL_n/mu_m"; "sc" and "ad" are accepted).
CocharLattice lattice_by_name(const RootSystem& rs, const std::string& name);

}  // namespace weylrep
