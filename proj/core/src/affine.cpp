#include "weylrep/affine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "weylrep/errors.hpp"

namespace weylrep {

RootIndex affine_root(const RootSystem& rs, int node) {
  if (node < 0 || node > rs.rank()) throw std::invalid_argument("affine node out of range");
  return node == 0 ? rs.negate(rs.highest_root()) : rs.simple_root(node - 1);
}

int affine_mark(const RootSystem& rs, int node) {
  return node == 0 ? 1 : rs.marks().at(node - 1);
}

int affine_image(const WeylElement& sigma, int node) {
  const RootSystem& rs = sigma.roots();
  const RootIndex img = sigma(affine_root(rs, node));
  if (rs.is_simple(img)) return img + 1;
  if (img == rs.negate(rs.highest_root())) return 0;
  return -1;
}

bool permutes_affine_simple(const WeylElement& sigma) {
  for (int k = 0; k <= sigma.roots().rank(); ++k)
    if (affine_image(sigma, k) < 0) return false;
  return true;
}

std::vector<std::vector<int>> affine_diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank() + 1;
  std::vector<std::vector<int>> ext(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ext[i][j] = rs.pairing(affine_root(rs, j), affine_root(rs, i));

  std::vector<std::vector<int>> out;
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> extend = [&](int k) {
    if (k == n) {
      out.push_back(pi);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = ext[t][pi[j]] == ext[k][j] && ext[pi[j]][t] == ext[j][k];
      if (!ok || ext[t][t] != ext[k][k]) continue;
      pi[k] = t;
      used[t] = true;
      extend(k + 1);
      used[t] = false;
      pi[k] = -1;
    }
  };
  extend(0);
  return out;
}

WeylElement omega_sigma(std::shared_ptr<const RootSystem> rs, int node) {
  const int n = rs->rank();
  if (node == 0) return WeylElement::identity(rs);
  std::vector<WeylElement> found;
  for (const auto& pi : affine_diagram_automorphisms(*rs)) {
    if (pi[0] != node) continue;
    // Linear map sending alpha_k to the gradient at node pi(k + 1).
    std::vector<Coeffs> images(n);
    for (int k = 0; k < n; ++k) images[k] = rs->root(affine_root(*rs, pi[k + 1]));
    std::vector<RootIndex> perm(rs->num_roots());
    bool ok = true;
    for (RootIndex a = 0; a < rs->num_roots() && ok; ++a) {
      Coeffs c(n, 0);
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[j] += rs->root(a)[k] * images[k][j];
      const auto idx = rs->find(c);
      if (!idx) ok = false;
      else perm[a] = *idx;
    }
    if (!ok) continue;
    try {
      // The descent walk inside from_perm decides membership in W.
      found.push_back(WeylElement::from_perm(rs, std::move(perm)));
    } catch (const std::invalid_argument&) {
    }
  }
  if (found.size() != 1)
    throw InvariantViolation("expected exactly one Weyl element permuting the affine nodes "
                             "with alpha_0 -> node " + std::to_string(node) + ", found " +
                             std::to_string(found.size()));
  return found.front();
}

WeylElement omega_sigma_bruteforce(const std::vector<WeylElement>& group, int node) {
  if (group.empty()) throw std::invalid_argument("empty group");
  std::vector<WeylElement> found;
  for (const auto& w : group)
    if (affine_image(w, 0) == node && permutes_affine_simple(w)) found.push_back(w);
  if (found.size() != 1)
    throw InvariantViolation("brute-force search found " + std::to_string(found.size()) +
                             " candidates for node " + std::to_string(node));
  return found.front();
}

std::vector<OmegaElement> omega_group(std::shared_ptr<const RootSystem> rs,
                                      const CocharLattice& lat) {
  const int n = rs->rank();
  std::vector<int> nodes{0};
  for (int i : lat.minuscule_generators()) nodes.push_back(i + 1);

  std::vector<OmegaElement> out;
  for (int node : nodes) {
    OmegaElement e;
    e.node = node;
    e.class_rep = node == 0 ? Coweight(n, 0) : fundamental_coweight(n, node - 1);
    e.sigma = omega_sigma(rs, node);
    for (int k = 0; k <= n; ++k) {
      const int img = affine_image(e.sigma, k);
      if (img < 0)
        throw InvariantViolation("sigma for node " + std::to_string(node) +
                                 " does not permute the affine simple gradients");
      e.diagram_perm.push_back(img);
      if (affine_mark(*rs, k) != affine_mark(*rs, img))
        throw InvariantViolation("sigma does not preserve marks");
    }
    int orbit = 1;
    for (int k = e.diagram_perm[0]; k != 0; k = e.diagram_perm[k]) ++orbit;
    if (orbit != e.sigma.order())
      throw InvariantViolation("order of sigma differs from the orbit size of the affine node");
    out.push_back(std::move(e));
  }

  std::map<int, const OmegaElement*> by_node;
  for (const auto& e : out) by_node[e.node] = &e;
  for (const auto& x : out)
    for (const auto& y : out) {
      Coweight sum = x.class_rep;
      for (int i = 0; i < n; ++i) sum[i] += y.class_rep[i];
      const int z = class_node(*rs, sum);
      auto it = by_node.find(z);
      if (it == by_node.end() || x.sigma * y.sigma != it->second->sigma)
        throw InvariantViolation("class-to-sigma map is not multiplicative");
    }
  return out;
}

std::vector<std::vector<int>> cycles(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int k = static_cast<int>(i); !seen[k]; k = perm[k]) {
      seen[k] = true;
      cyc.push_back(k);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string cycle_string(const std::vector<int>& diagram_perm, bool show_fixed) {
  // Each cycle starts at its lowest simple node, with -theta ranked last.
  const int n = static_cast<int>(diagram_perm.size());
  auto key = [n](int k) { return k == 0 ? n : k; };
  auto all = cycles(diagram_perm);
  for (auto& cyc : all)
    std::rotate(cyc.begin(),
                std::min_element(cyc.begin(), cyc.end(),
                                 [&](int x, int y) { return key(x) < key(y); }),
                cyc.end());
  std::sort(all.begin(), all.end(),
            [&](const auto& x, const auto& y) { return key(x.front()) < key(y.front()); });
  std::ostringstream os;
  for (const auto& cyc : all) {
    if (cyc.size() == 1 && !show_fixed) continue;
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      if (cyc[i] == 0) os << "-theta";
      else os << 'a' << cyc[i];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

SigmaRSDatum sigma_rs(const WeylElement& w) {
  const RootSystem& rs = w.roots();
  if (!permutes_affine_simple(w))
    throw std::invalid_argument("element does not permute the affine simple gradients");
  if (w.order() < 3)
    throw std::invalid_argument("element has order " + std::to_string(w.order()) +
                                "; the R/S decomposition needs order at least 3");
  SigmaRSDatum d;
  d.w = w;
  const WeylElement wi = w.inverse();
  d.r = wi(rs.negate(rs.highest_root()));
  d.s = wi(d.r);
  if (!rs.is_simple(d.r) || !rs.is_simple(d.s))
    throw InvariantViolation("R or S is not a simple root");

  for (RootIndex x = 0; x < rs.num_positive(); ++x) {
    const int br = rs.root(x)[d.r];
    const int bs = rs.root(x)[d.s];
    if (br < 0 || br > 1 || bs < 0 || bs > 1)
      throw InvariantViolation("R or S coefficient outside {0, 1}");
    d.parts[2 * br + bs].push_back(x);
  }

  const RootSet& p01 = d.part(0, 1);
  const RootSet& p10 = d.part(1, 0);
  const RootSet& p11 = d.part(1, 1);
  std::map<RootIndex, int> f01, f10, f11;
  for (RootIndex x : p01)
    for (RootIndex y : p10)
      if (auto g = rs.sum(x, y)) {
        if (!std::binary_search(p11.begin(), p11.end(), *g))
          throw InvariantViolation("sum of (0,1) and (1,0) roots outside part (1,1)");
        d.triples.push_back({x, y, *g});
        ++f01[x];
        ++f10[y];
        ++f11[*g];
      }
  for (RootIndex x : p01) d.fibers01.push_back(f01[x]);
  for (RootIndex x : p10) d.fibers10.push_back(f10[x]);
  for (RootIndex x : p11) d.fibers11.push_back(f11[x]);
  d.a = f01[d.s];
  d.b = f10[d.r];
  d.c = f11[rs.highest_root()];
  return d;
}

bool fibers_constant(const SigmaRSDatum& d) {
  auto flat = [](const std::vector<int>& v, int target) {
    return std::all_of(v.begin(), v.end(), [&](int x) { return x == target; });
  };
  return flat(d.fibers01, d.a) && flat(d.fibers10, d.b) && flat(d.fibers11, d.c);
}

std::vector<std::string> sigma_rs_violations(const SigmaRSDatum& d) {
  const RootSystem& rs = d.w.roots();
  std::vector<std::string> bad;

  RootSet all;
  for (const auto& p : d.parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  if (all.size() != rs.num_positive() || std::adjacent_find(all.begin(), all.end()) != all.end())
    bad.push_back("parts do not partition the positive roots");

  RootSet inv = d.part(1, 0);
  inv.insert(inv.end(), d.part(1, 1).begin(), d.part(1, 1).end());
  std::sort(inv.begin(), inv.end());
  if (inv != inversion_set(d.w)) bad.push_back("inversion set differs from parts (1,0) + (1,1)");
  if (d.part(1, 0) != flipping_set(d.w, d.w)) bad.push_back("flipping set differs from part (1,0)");

  auto leq = [&](RootIndex x, RootIndex y) {
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.root(x)[i] > rs.root(y)[i]) return false;
    return true;
  };
  for (RootIndex x : d.part(0, 1))
    if (!leq(d.s, x)) bad.push_back("S is not minimal in part (0,1)");
  for (RootIndex x : d.part(1, 0))
    if (!leq(d.r, x)) bad.push_back("R is not minimal in part (1,0)");
  for (RootIndex x : d.part(1, 1))
    if (!leq(x, rs.highest_root())) bad.push_back("theta is not maximal in part (1,1)");

  auto coroot_total = [&](const RootSet& part) {
    std::vector<long> v(rs.rank(), 0);
    for (RootIndex x : part)
      for (int i = 0; i < rs.rank(); ++i) v[i] += rs.coroot(x)[i];
    return v;
  };
  const auto f01 = coroot_total(d.part(0, 1));
  const auto f10 = coroot_total(d.part(1, 0));
  const auto f11 = coroot_total(d.part(1, 1));
  for (int i = 0; i < rs.rank(); ++i)
    if (d.a * f01[i] + d.b * f10[i] != d.c * f11[i]) {
      bad.push_back("a F01 + b F10 != c F11");
      break;
    }
  return bad;
}

bool check_formula2(const SigmaRSDatum& d, RootIndex a) {
  const RootSystem& rs = d.w.roots();
  const int h = rs.coxeter_number();
  long fw = 0;
  for (RootIndex b : d.part(1, 0)) fw += rs.pairing(a, b);
  const RootIndex wa = d.w(a);
  const RootIndex wwa = d.w(wa);
  const long rhs = static_cast<long>(d.c) * (rs.height(a) - 2L * rs.height(wa) + rs.height(wwa));
  return h * fw == rhs && d.a == d.c && d.a + d.b + d.c == h;
}

int fw_at_r(const WeylElement& w) {
  const RootSystem& rs = w.roots();
  if (w.is_identity()) throw std::invalid_argument("F_w(R) needs a nontrivial element");
  if (!permutes_affine_simple(w))
    throw std::invalid_argument("element does not permute the affine simple gradients");
  const RootIndex r = w.inverse()(rs.negate(rs.highest_root()));
  return f_functional(w, w, r);
}

bool check_fw_even(const WeylElement& w) { return fw_at_r(w) % 2 == 0; }

}  // namespace weylrep
