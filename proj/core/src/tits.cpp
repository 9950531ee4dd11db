#include "weylrep/tits.hpp"

#include "weylrep/errors.hpp"

namespace weylrep {

TorusPart act(const WeylElement& w, TorusPart t) {
  const RootSystem& rs = w.roots();
  TorusPart out = 0;
  for (int i = 0; t != 0; ++i, t >>= 1)
    if (t & 1u) out ^= rs.coroot_bits(w(rs.simple_root(i)));
  return out;
}

TorusPart coroot_sum(const RootSystem& rs, const RootSet& roots) {
  TorusPart out = 0;
  for (RootIndex b : roots) out ^= rs.coroot_bits(b);
  return out;
}

TitsElement canonical(const WeylElement& w) { return {0, w}; }

TitsElement multiply(const TitsElement& x, const TitsElement& y) {
  const RootSystem& rs = x.weyl.roots();
  TorusPart torus = x.torus ^ act(x.weyl, y.torus);
  std::vector<RootIndex> cur = x.weyl.perm();
  std::vector<RootIndex> next(cur.size());
  for (int s : y.weyl.word()) {
    const RootIndex image = cur[rs.simple_root(s)];
    // Length drops: S(cur) S(s) = S(cur s) alpha_s^vee(-1), and moving the
    // coroot to the left conjugates it by cur s, which is cur(alpha_s^vee) mod 2.
    if (!rs.is_positive(image)) torus ^= rs.coroot_bits(image);
    const auto& refl = rs.reflection_perm(s);
    for (std::size_t a = 0; a < cur.size(); ++a) next[a] = cur[refl[a]];
    cur.swap(next);
  }
  return {torus, WeylElement::from_perm(x.weyl.root_system(), std::move(cur))};
}

TitsElement inverse(const TitsElement& x) {
  const WeylElement wi = x.weyl.inverse();
  const TitsElement z = multiply(canonical(x.weyl), canonical(wi));
  if (!z.weyl.is_identity()) throw InvariantViolation("S(w) S(w^-1) has nontrivial Weyl part");
  return {act(wi, z.torus ^ x.torus), wi};
}

TitsElement lift_word(std::shared_ptr<const RootSystem> rs, const Word& word) {
  TitsElement acc = canonical(WeylElement::identity(rs));
  for (int s : word) acc = multiply(acc, canonical(WeylElement::simple(rs, s)));
  return acc;
}

TorusPart cocycle(const WeylElement& u, const WeylElement& v) {
  const TitsElement prod = multiply(canonical(u), canonical(v));
  const TitsElement lhs = multiply(inverse(canonical(u * v)), prod);
  if (!lhs.weyl.is_identity())
    throw InvariantViolation("cocycle product has nontrivial Weyl part");
  return lhs.torus;
}

TorusPart predicted_cocycle(const WeylElement& u, const WeylElement& v) {
  return coroot_sum(v.roots(), flipping_set(u, v));
}

bool check_cocycle_formula(const WeylElement& u, const WeylElement& v) {
  return cocycle(u, v) == predicted_cocycle(u, v);
}

int pair_mod2(const RootSystem& rs, RootIndex a, TorusPart t) {
  const auto& c = rs.root(a);
  const auto& cartan = rs.datum().cartan;
  int s = 0;
  for (int i = 0; t != 0; ++i, t >>= 1) {
    if (!(t & 1u)) continue;
    for (int j = 0; j < rs.rank(); ++j) s += c[j] * static_cast<int>(cartan(i, j));
  }
  return ((s % 2) + 2) % 2;
}

}  // namespace weylrep
