#pragma once

// Integer normal forms with retained unimodular transforms.

#include <cstdint>
#include <optional>
#include <vector>

#include "weylrep/matrix.hpp"

namespace weylrep {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  std::vector<std::int64_t> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form: the nonzero rows of the result form a basis
/// of the row lattice of `a` in upper-triangular echelon form with positive
/// pivots and reduced entries above each pivot. Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Solves M x = b (mod n) over Z/n. Returns one solution with entries in
/// [0, n) or std::nullopt if there is none.
std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& m,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t n);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a x + b y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

}  // namespace weylrep
