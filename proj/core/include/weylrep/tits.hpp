#pragma once

// The extension of W by Q^vee (x) F_2 generated by lifts of the simple
// reflections, subject only to: lifts along reduced words multiply without
// correction, and each generator squares to its coroot at -1.

#include <cstdint>

#include "weylrep/weyl.hpp"

namespace weylrep {

/// Element of Q^vee (x) F_2 in simple-coroot coordinates: bit i is the
/// coefficient of alpha_i^vee mod 2.
using TorusPart = std::uint32_t;

/// Mod-2 reduction of w acting on the coroot lattice.
TorusPart act(const WeylElement& w, TorusPart t);

/// Sum of b^vee mod 2 over a set of roots.
TorusPart coroot_sum(const RootSystem& rs, const RootSet& roots);

/// Normal form t * S(w), torus part on the left.
struct TitsElement {
  TorusPart torus = 0;
  WeylElement weyl;

  friend bool operator==(const TitsElement& x, const TitsElement& y) {
    return x.torus == y.torus && x.weyl == y.weyl;
  }
};

/// The canonical lift of w: torus part zero.
TitsElement canonical(const WeylElement& w);

/// Group law. The right factor is absorbed one generator at a time along its
/// stored reduced word; every length decrease contributes a coroot at -1.
TitsElement multiply(const TitsElement& x, const TitsElement& y);

TitsElement inverse(const TitsElement& x);

/// Product of the generator lifts along an arbitrary (not necessarily reduced) word.
TitsElement lift_word(std::shared_ptr<const RootSystem> rs, const Word& word);

/// Torus part of S(uv)^-1 S(u) S(v). Throws InvariantViolation if the Weyl part
/// of that product is not trivial.
TorusPart cocycle(const WeylElement& u, const WeylElement& v);

/// Sum of b^vee mod 2 over the flipping set of (u, v).
TorusPart predicted_cocycle(const WeylElement& u, const WeylElement& v);

bool check_cocycle_formula(const WeylElement& u, const WeylElement& v);

/// <a, t> mod 2 for a torus part t.
int pair_mod2(const RootSystem& rs, RootIndex a, TorusPart t);

}  // namespace weylrep
