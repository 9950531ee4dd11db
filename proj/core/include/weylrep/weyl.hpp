#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "weylrep/random.hpp"
#include "weylrep/rootsys.hpp"

namespace weylrep {

/// Sorted list of positive-root indices.
using RootSet = std::vector<RootIndex>;
using Word = std::vector<int>;

/// A Weyl group element, stored as its permutation of the root list together
/// with a canonical reduced word (0-based simple indices).
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(std::shared_ptr<const RootSystem> rs);
  static WeylElement simple(std::shared_ptr<const RootSystem> rs, int i);
  /// Product s_{word[0]} s_{word[1]} ... (the last letter acts first).
  static WeylElement from_word(std::shared_ptr<const RootSystem> rs, const Word& word);
  /// Throws std::invalid_argument unless perm is induced by an element of W.
  static WeylElement from_perm(std::shared_ptr<const RootSystem> rs, std::vector<RootIndex> perm);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }

  RootIndex operator()(RootIndex a) const { return perm_[a]; }
  const std::vector<RootIndex>& perm() const { return perm_; }

  /// Reduced word; the rightmost letter is the smallest right descent.
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  /// Action on simple-root coordinates: column j holds w(alpha_j).
  IntMatrix matrix() const;
  Coeffs apply(const Coeffs& v) const;

  WeylElement inverse() const;
  int order() const;

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend bool operator==(const WeylElement& u, const WeylElement& v) { return u.perm_ == v.perm_; }
  friend bool operator!=(const WeylElement& u, const WeylElement& v) { return !(u == v); }
  friend bool operator<(const WeylElement& u, const WeylElement& v) { return u.perm_ < v.perm_; }

 private:
  WeylElement(std::shared_ptr<const RootSystem> rs, std::vector<RootIndex> perm);

  std::shared_ptr<const RootSystem> rs_;
  std::vector<RootIndex> perm_;
  Word word_;
};

/// { a > 0 : w(a) < 0 }.
RootSet inversion_set(const WeylElement& w);

/// { a > 0 : v(a) < 0 and u(v(a)) > 0 }.
RootSet flipping_set(const WeylElement& u, const WeylElement& v);

/// Sum over b in the flipping set of (u, v) of <a, b^vee>.
int f_functional(const WeylElement& u, const WeylElement& v, RootIndex a);

/// Inversion-set sum of <a, b^vee> against ht(a) - ht(w(a)).
bool check_formula1(const WeylElement& w, RootIndex a);

/// w^2 maps the flipping set of (w, w) onto that of (w^-1, w^-1).
bool check_symmetry(const WeylElement& w);

/// Breadth-first enumeration of W. Returns std::nullopt if the group has more
/// than `budget` elements. Elements come out sorted by length, then by word.
std::optional<std::vector<WeylElement>> enumerate_group(std::shared_ptr<const RootSystem> rs,
                                                        std::size_t budget);

/// |W| = l! * det(Cartan) * product of marks; used for sizing decisions
/// without enumeration.
std::uint64_t group_order(const RootSystem& rs);

/// Pseudo-random element: a random word of a fixed generous length.
WeylElement random_element(std::shared_ptr<const RootSystem> rs, Rng& rng);

/// The longest element w0.
WeylElement longest_element(std::shared_ptr<const RootSystem> rs);

}  // namespace weylrep
