#include "weylrep/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace weylrep {

namespace {

std::vector<RootIndex> identity_perm(std::size_t n) {
  std::vector<RootIndex> p(n);
  std::iota(p.begin(), p.end(), RootIndex{0});
  return p;
}

// An element of W is determined by the images of the simple roots.
std::string simple_key(const std::vector<RootIndex>& perm, int rank) {
  return std::string(reinterpret_cast<const char*>(perm.data()),
                     static_cast<std::size_t>(rank) * sizeof(RootIndex));
}

}  // namespace

WeylElement::WeylElement(std::shared_ptr<const RootSystem> rs, std::vector<RootIndex> perm)
    : rs_(std::move(rs)), perm_(std::move(perm)) {
  const RootSystem& r = *rs_;
  const int n = r.rank();
  std::vector<RootIndex> cur = perm_;
  std::vector<RootIndex> scratch(cur.size());
  Word rev;
  const std::size_t max_len = r.num_positive();
  while (true) {
    int descent = -1;
    for (int i = 0; i < n; ++i)
      if (!r.is_positive(cur[i])) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    if (rev.size() >= max_len) throw std::invalid_argument("permutation is not a Weyl group element");
    const auto& s = r.reflection_perm(descent);
    for (std::size_t a = 0; a < cur.size(); ++a) scratch[a] = cur[s[a]];
    cur.swap(scratch);
    rev.push_back(descent);
  }
  for (std::size_t a = 0; a < cur.size(); ++a)
    if (cur[a] != a) throw std::invalid_argument("permutation is not a Weyl group element");
  word_.assign(rev.rbegin(), rev.rend());
}

WeylElement WeylElement::identity(std::shared_ptr<const RootSystem> rs) {
  const auto n = rs->num_roots();
  return WeylElement(std::move(rs), identity_perm(n));
}

WeylElement WeylElement::simple(std::shared_ptr<const RootSystem> rs, int i) {
  if (i < 0 || i >= rs->rank()) throw std::invalid_argument("simple index out of range");
  auto perm = rs->reflection_perm(i);
  return WeylElement(std::move(rs), std::move(perm));
}

WeylElement WeylElement::from_word(std::shared_ptr<const RootSystem> rs, const Word& word) {
  std::vector<RootIndex> perm = identity_perm(rs->num_roots());
  std::vector<RootIndex> next(perm.size());
  for (int i : word) {
    if (i < 0 || i >= rs->rank()) throw std::invalid_argument("simple index out of range");
    const auto& s = rs->reflection_perm(i);
    for (std::size_t a = 0; a < perm.size(); ++a) next[a] = perm[s[a]];
    perm.swap(next);
  }
  return WeylElement(std::move(rs), std::move(perm));
}

WeylElement WeylElement::from_perm(std::shared_ptr<const RootSystem> rs,
                                   std::vector<RootIndex> perm) {
  if (perm.size() != rs->num_roots()) throw std::invalid_argument("permutation has wrong size");
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t a = 0; a < perm.size(); ++a) {
    if (perm[a] >= perm.size() || hit[perm[a]])
      throw std::invalid_argument("not a permutation of the roots");
    hit[perm[a]] = true;
    if (perm[rs->negate(static_cast<RootIndex>(a))] != rs->negate(perm[a]))
      throw std::invalid_argument("permutation does not commute with negation");
  }
  return WeylElement(std::move(rs), std::move(perm));
}

IntMatrix WeylElement::matrix() const {
  const int n = rs_->rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const Coeffs& img = rs_->root(perm_[j]);
    for (int i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return m;
}

Coeffs WeylElement::apply(const Coeffs& v) const {
  const int n = rs_->rank();
  Coeffs out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    const Coeffs& img = rs_->root(perm_[j]);
    for (int i = 0; i < n; ++i) out[i] += v[j] * img[i];
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  std::vector<RootIndex> inv(perm_.size());
  for (std::size_t a = 0; a < perm_.size(); ++a) inv[perm_[a]] = static_cast<RootIndex>(a);
  return WeylElement(rs_, std::move(inv));
}

int WeylElement::order() const {
  std::vector<RootIndex> cur = perm_;
  std::vector<RootIndex> next(cur.size());
  int k = 1;
  auto is_id = [&] {
    for (std::size_t a = 0; a < cur.size(); ++a)
      if (cur[a] != a) return false;
    return true;
  };
  while (!is_id()) {
    for (std::size_t a = 0; a < cur.size(); ++a) next[a] = perm_[cur[a]];
    cur.swap(next);
    ++k;
  }
  return k;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.rs_ != v.rs_ && u.rs_->label() != v.rs_->label())
    throw std::invalid_argument("Weyl elements of different root systems");
  std::vector<RootIndex> p(u.perm_.size());
  for (std::size_t a = 0; a < p.size(); ++a) p[a] = u.perm_[v.perm_[a]];
  return WeylElement(u.rs_, std::move(p));
}

RootSet inversion_set(const WeylElement& w) {
  const auto& r = w.roots();
  RootSet out;
  for (RootIndex a = 0; a < r.num_positive(); ++a)
    if (!r.is_positive(w(a))) out.push_back(a);
  return out;
}

RootSet flipping_set(const WeylElement& u, const WeylElement& v) {
  const auto& r = v.roots();
  RootSet out;
  for (RootIndex a = 0; a < r.num_positive(); ++a) {
    const RootIndex va = v(a);
    if (!r.is_positive(va) && r.is_positive(u(va))) out.push_back(a);
  }
  return out;
}

int f_functional(const WeylElement& u, const WeylElement& v, RootIndex a) {
  const auto& r = v.roots();
  int s = 0;
  for (RootIndex b : flipping_set(u, v)) s += r.pairing(a, b);
  return s;
}

bool check_formula1(const WeylElement& w, RootIndex a) {
  const auto& r = w.roots();
  int lhs = 0;
  for (RootIndex b : inversion_set(w)) lhs += r.pairing(a, b);
  return lhs == r.height(a) - r.height(w(a));
}

bool check_symmetry(const WeylElement& w) {
  const WeylElement w2 = w * w;
  const WeylElement wi = w.inverse();
  RootSet image;
  for (RootIndex b : flipping_set(w, w)) image.push_back(w2(b));
  std::sort(image.begin(), image.end());
  return image == flipping_set(wi, wi);
}

std::optional<std::vector<WeylElement>> enumerate_group(std::shared_ptr<const RootSystem> rs,
                                                        std::size_t budget) {
  if (group_order(*rs) > budget) return std::nullopt;
  const int n = rs->rank();
  std::vector<WeylElement> all;
  std::unordered_set<std::string> seen;
  std::vector<WeylElement> level{WeylElement::identity(rs)};
  seen.insert(simple_key(level.front().perm(), n));
  while (!level.empty()) {
    std::sort(level.begin(), level.end(),
              [](const WeylElement& x, const WeylElement& y) { return x.word() < y.word(); });
    all.insert(all.end(), level.begin(), level.end());
    std::vector<WeylElement> next;
    for (const auto& w : level)
      for (int i = 0; i < n; ++i) {
        if (!rs->is_positive(w(rs->simple_root(i)))) continue;
        WeylElement ws = w * WeylElement::simple(rs, i);
        if (seen.insert(simple_key(ws.perm(), n)).second) next.push_back(std::move(ws));
      }
    level = std::move(next);
  }
  if (all.size() != group_order(*rs)) throw std::logic_error("Weyl group enumeration miscounted");
  return all;
}

std::uint64_t group_order(const RootSystem& rs) {
  std::uint64_t order = static_cast<std::uint64_t>(determinant(rs.datum().cartan));
  for (int i = 1; i <= rs.rank(); ++i) order *= static_cast<std::uint64_t>(i);
  for (int m : rs.marks()) order *= static_cast<std::uint64_t>(m);
  return order;
}

WeylElement random_element(std::shared_ptr<const RootSystem> rs, Rng& rng) {
  const int n = rs->rank();
  const std::size_t len = 4 * rs->num_positive() + 8;
  Word word(len);
  for (auto& x : word) x = rng.below(n);
  return WeylElement::from_word(std::move(rs), word);
}

WeylElement longest_element(std::shared_ptr<const RootSystem> rs) {
  WeylElement w = WeylElement::identity(rs);
  while (true) {
    int ascent = -1;
    for (int i = 0; i < rs->rank(); ++i)
      if (rs->is_positive(w(rs->simple_root(i)))) {
        ascent = i;
        break;
      }
    if (ascent < 0) return w;
    w = w * WeylElement::simple(rs, ascent);
  }
}

}  // namespace weylrep
