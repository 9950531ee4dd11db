#include "weylrep/chevalley.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "weylrep/errors.hpp"

namespace weylrep {

StructureConstants::StructureConstants(std::shared_ptr<const RootSystem> rs, std::string convention)
    : rs_(std::move(rs)),
      convention_(std::move(convention)),
      table_(rs_->num_roots() * rs_->num_roots(), 0) {}

StructureConstants StructureConstants::extraspecial(std::shared_ptr<const RootSystem> rs) {
  StructureConstants sc(rs, "extraspecial");
  const RootSystem& r = *rs;
  const auto nr = static_cast<RootIndex>(r.num_roots());
  const auto np = static_cast<RootIndex>(r.num_positive());
  std::vector<Rational> pos(static_cast<std::size_t>(nr) * nr, Rational(0));
  auto norm = [&](RootIndex x) { return Rational(r.form(r.root(x), r.root(x))); };

  // Any pair, reduced to positive pairs with a smaller sum via the
  // antisymmetry, negation and cyclic (r + s + t = 0) rules.
  std::function<Rational(RootIndex, RootIndex)> get = [&](RootIndex x, RootIndex y) -> Rational {
    const auto sum = r.sum(x, y);
    if (!sum) return 0;
    const bool px = r.is_positive(x), py = r.is_positive(y);
    if (px && py) return pos[x * nr + y];
    if (!px && !py) return -get(r.negate(x), r.negate(y));
    if (!px) return -get(y, x);
    const RootIndex t = r.negate(*sum);
    if (r.is_positive(*sum)) return norm(t) / norm(x) * -get(r.negate(y), *sum);
    return norm(t) / norm(y) * get(t, x);
  };

  for (RootIndex xi = 0; xi < np; ++xi) {
    if (r.is_simple(xi)) continue;
    RootIndex alpha = np;
    for (RootIndex x = 0; x < np && alpha == np; ++x) {
      const auto d = r.sum(xi, r.negate(x));
      if (d && r.is_positive(*d)) alpha = x;
    }
    const RootIndex beta = *r.sum(xi, r.negate(alpha));
    const Rational n_ab = r.root_string(alpha, beta).q + 1;
    pos[alpha * nr + beta] = n_ab;
    pos[beta * nr + alpha] = -n_ab;
    for (RootIndex x = 0; x < np; ++x) {
      const auto y_opt = r.sum(xi, r.negate(x));
      if (!y_opt || !r.is_positive(*y_opt) || *y_opt <= x || x == alpha) continue;
      const RootIndex y = *y_opt;
      Rational val = 0;
      if (auto d = r.sum(beta, r.negate(x)))
        val += get(beta, r.negate(x)) * get(alpha, r.negate(y)) / norm(*d);
      if (auto d = r.sum(alpha, r.negate(x)))
        val += get(r.negate(x), alpha) * get(beta, r.negate(y)) / norm(*d);
      val *= norm(xi) / n_ab;
      pos[x * nr + y] = val;
      pos[y * nr + x] = -val;
    }
  }

  for (RootIndex x = 0; x < nr; ++x)
    for (RootIndex y = 0; y < nr; ++y) {
      const Rational v = get(x, y);
      if (v.denominator() != 1) throw InvariantViolation("non-integral structure constant");
      sc.table_[x * nr + y] = static_cast<int>(v.numerator());
    }

  const auto structural = sc.structural_violations();
  if (!structural.empty()) throw InvariantViolation("structure constants: " + structural.front());
  if (!sc.jacobi_violations().empty())
    throw InvariantViolation("structure constants violate the Jacobi identity");
  return sc;
}

StructureConstants StructureConstants::from_entries(std::shared_ptr<const RootSystem> rs,
                                                    const std::vector<ConstantEntry>& entries,
                                                    std::string convention_id) {
  StructureConstants sc(rs, std::move(convention_id));
  const auto nr = rs->num_roots();
  std::vector<bool> set(nr * nr, false);
  for (const auto& e : entries) {
    if (e.a >= nr || e.b >= nr) throw std::invalid_argument("root index out of range");
    if (!rs->sum(e.a, e.b))
      throw std::invalid_argument("constant given for a pair whose sum is not a root");
    sc.table_[e.a * nr + e.b] = e.value;
    set[e.a * nr + e.b] = true;
  }
  for (RootIndex a = 0; a < nr; ++a)
    for (RootIndex b = 0; b < nr; ++b)
      if (rs->sum(a, b) && !set[a * nr + b])
        throw std::invalid_argument("missing constant for pair " + format_coeffs(rs->root(a)) +
                                    ", " + format_coeffs(rs->root(b)));
  return sc;
}

std::vector<ConstantEntry> StructureConstants::entries() const {
  std::vector<ConstantEntry> out;
  const auto nr = static_cast<RootIndex>(rs_->num_roots());
  for (RootIndex a = 0; a < nr; ++a)
    for (RootIndex b = 0; b < nr; ++b)
      if (rs_->sum(a, b)) out.push_back({a, b, n(a, b)});
  return out;
}

StructureConstants StructureConstants::rescaled(const std::vector<int>& signs,
                                                std::string convention_id) const {
  if (signs.size() != rs_->num_positive()) throw std::invalid_argument("one sign per positive root");
  auto eps = [&](RootIndex x) {
    return signs[rs_->is_positive(x) ? x : rs_->negate(x)];
  };
  StructureConstants out(rs_, std::move(convention_id));
  const auto nr = static_cast<RootIndex>(rs_->num_roots());
  for (RootIndex a = 0; a < nr; ++a)
    for (RootIndex b = 0; b < nr; ++b)
      if (auto s = rs_->sum(a, b)) out.table_[a * nr + b] = eps(a) * eps(b) * eps(*s) * n(a, b);
  return out;
}

std::vector<std::int64_t> StructureConstants::bracket(const std::vector<std::int64_t>& x,
                                                      const std::vector<std::int64_t>& y) const {
  const int l = rs_->rank();
  const int dim = dimension();
  const auto& cartan = rs_->datum().cartan;
  std::vector<std::int64_t> out(dim, 0);
  std::vector<int> ny;
  for (int j = 0; j < dim; ++j)
    if (y[j] != 0) ny.push_back(j);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j : ny) {
      const std::int64_t k = x[i] * y[j];
      if (i < l && j < l) continue;
      if (i < l || j < l) {
        // [h_p, e_r] = <r, alpha_p^vee> e_r
        const int p = i < l ? i : j;
        const auto r = static_cast<RootIndex>((i < l ? j : i) - l);
        std::int64_t pr = 0;
        for (int q = 0; q < l; ++q) pr += rs_->root(r)[q] * cartan(p, q);
        out[l + r] += (i < l ? 1 : -1) * k * pr;
        continue;
      }
      const auto a = static_cast<RootIndex>(i - l);
      const auto b = static_cast<RootIndex>(j - l);
      if (b == rs_->negate(a)) {
        for (int q = 0; q < l; ++q) out[q] += k * rs_->coroot(a)[q];
      } else if (auto s = rs_->sum(a, b)) {
        out[l + *s] += k * n(a, b);
      }
    }
  }
  return out;
}

IntMatrix StructureConstants::ad_root_vector(RootIndex r) const {
  const int dim = dimension();
  const int l = rs_->rank();
  IntMatrix m(dim, dim);
  std::vector<std::int64_t> er(dim, 0), basis(dim, 0);
  er[l + r] = 1;
  for (int j = 0; j < dim; ++j) {
    basis[j] = 1;
    const auto col = bracket(er, basis);
    for (int i = 0; i < dim; ++i) m(i, j) = col[i];
    basis[j] = 0;
  }
  return m;
}

std::vector<JacobiViolation> StructureConstants::jacobi_violations(std::size_t limit) const {
  std::vector<JacobiViolation> out;
  const int dim = dimension();
  const int l = rs_->rank();
  const auto nr = static_cast<RootIndex>(rs_->num_roots());
  auto unit = [&](RootIndex a) {
    std::vector<std::int64_t> v(dim, 0);
    v[l + a] = 1;
    return v;
  };
  for (RootIndex a = 0; a < nr; ++a)
    for (RootIndex b = a + 1; b < nr; ++b) {
      const auto ea = unit(a), eb = unit(b);
      const auto ab = bracket(ea, eb);
      for (RootIndex c = b + 1; c < nr; ++c) {
        const auto ec = unit(c);
        const auto t1 = bracket(ea, bracket(eb, ec));
        const auto t2 = bracket(eb, bracket(ec, ea));
        const auto t3 = bracket(ec, ab);
        for (int i = 0; i < dim; ++i)
          if (t1[i] + t2[i] + t3[i] != 0) {
            out.push_back({a, b, c});
            if (out.size() >= limit) return out;
            break;
          }
      }
    }
  return out;
}

std::vector<std::string> StructureConstants::structural_violations() const {
  std::vector<std::string> out;
  const auto nr = static_cast<RootIndex>(rs_->num_roots());
  auto pair_name = [&](RootIndex a, RootIndex b) {
    return format_coeffs(rs_->root(a)) + ", " + format_coeffs(rs_->root(b));
  };
  for (RootIndex a = 0; a < nr; ++a)
    for (RootIndex b = 0; b < nr; ++b) {
      if (!rs_->sum(a, b)) continue;
      if (n(a, b) != -n(b, a)) out.push_back("antisymmetry fails at " + pair_name(a, b));
      if (n(rs_->negate(a), rs_->negate(b)) != -n(a, b))
        out.push_back("negation rule fails at " + pair_name(a, b));
      const int expect = rs_->root_string(a, b).q + 1;
      if (std::abs(n(a, b)) != expect)
        out.push_back("|N| != q + 1 at " + pair_name(a, b));
    }
  return out;
}

namespace {

RatMatrix nilpotent_exp(const IntMatrix& m) {
  const std::size_t dim = m.rows();
  const RatMatrix a = to_rational(m);
  RatMatrix out = RatMatrix::identity(dim);
  RatMatrix power = RatMatrix::identity(dim);
  for (int k = 1;; ++k) {
    power = power * a;
    bool zero = true;
    for (const auto& v : power.data())
      if (v.numerator() != 0) {
        zero = false;
        break;
      }
    if (zero) break;
    if (k > static_cast<int>(dim)) throw InvariantViolation("ad(e) is not nilpotent");
    // power holds a^k / (k-1)!, so one more division gives a^k / k!.
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        power(i, j) /= k;
        out(i, j) += power(i, j);
      }
  }
  return out;
}

IntMatrix require_integral(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).denominator() != 1)
        throw InvariantViolation("adjoint action of a canonical generator is not integral");
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

}  // namespace

ScalarTable::ScalarTable(const StructureConstants& constants)
    : rs_(constants.root_system()), convention_(constants.convention()) {
  const RootSystem& r = *rs_;
  const int l = r.rank();
  const auto nr = static_cast<RootIndex>(r.num_roots());
  c_.assign(static_cast<std::size_t>(l) * nr, 0);
  for (int s = 0; s < l; ++s) {
    const RootIndex pos = r.simple_root(s);
    IntMatrix minus_f = constants.ad_root_vector(r.negate(pos));
    for (std::size_t i = 0; i < minus_f.rows(); ++i)
      for (std::size_t j = 0; j < minus_f.cols(); ++j) minus_f(i, j) = -minus_f(i, j);
    const RatMatrix ue = nilpotent_exp(constants.ad_root_vector(pos));
    const RatMatrix uf = nilpotent_exp(minus_f);
    const IntMatrix ad = require_integral(ue * uf * ue);
    for (RootIndex a = 0; a < nr; ++a) {
      const std::size_t col = l + a;
      const std::size_t target = l + r.reflect(s, a);
      for (std::size_t i = 0; i < ad.rows(); ++i) {
        const auto v = ad(i, col);
        if (i == target) {
          if (v != 1 && v != -1)
            throw InvariantViolation("canonical generator scales a root vector by " +
                                     std::to_string(v));
          c_[s * nr + a] = static_cast<int>(v);
        } else if (v != 0) {
          throw InvariantViolation("canonical generator does not send a root vector to a root "
                                   "vector");
        }
      }
    }
    ad_n_.push_back(ad);
  }
}

std::vector<std::string> ScalarTable::violations() const {
  std::vector<std::string> out;
  const RootSystem& r = *rs_;
  const auto nr = static_cast<RootIndex>(r.num_roots());
  for (int s = 0; s < r.rank(); ++s)
    for (RootIndex a = 0; a < nr; ++a) {
      const std::string where =
          " at s" + std::to_string(s + 1) + ", a = " + format_coeffs(r.root(a));
      if (c_generator(s, a) * c_generator(s, r.negate(a)) != 1)
        out.push_back("c(s,a) c(s,-a) != 1" + where);
      if (r.is_simple(a) && r.is_simple(r.reflect(s, a)) && c_generator(s, a) != 1)
        out.push_back("Chevalley property fails" + where);
    }
  return out;
}

int c_word(const ScalarTable& table, const WeylElement& w, RootIndex a) {
  const RootSystem& r = w.roots();
  int c = 1;
  RootIndex cur = a;
  const Word& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    c *= table.c_generator(*it, cur);
    cur = r.reflect(*it, cur);
  }
  return c;
}

bool is_dependence_relation(const RootSystem& rs, const DependenceRelation& d) {
  std::vector<long> total(rs.rank(), 0);
  std::map<RootIndex, int> seen;
  for (const auto& [m, a] : d.terms) {
    if (a >= rs.num_roots() || seen[a]++) return false;
    for (int i = 0; i < rs.rank(); ++i) total[i] += static_cast<long>(m) * rs.root(a)[i];
  }
  for (long v : total)
    if (v != 0) return false;
  return true;
}

bool fixes(const WeylElement& w, const DependenceRelation& d) {
  std::map<RootIndex, int> mult;
  for (const auto& [m, a] : d.terms) mult[a] = m;
  for (const auto& [m, a] : d.terms) {
    auto it = mult.find(w(a));
    if (it == mult.end() || it->second != m) return false;
  }
  return true;
}

int evaluate_character(const ScalarTable& table, const DependenceRelation& d,
                       const WeylElement& w) {
  if (!fixes(w, d)) throw std::invalid_argument("element does not fix the dependence relation");
  int out = 1;
  for (const auto& [m, a] : d.terms)
    if (m % 2 != 0) out *= c_word(table, w, a);
  return out;
}

DependenceRelation highest_root_relation(const RootSystem& rs) {
  DependenceRelation d;
  d.terms.emplace_back(1, rs.negate(rs.highest_root()));
  for (int i = 0; i < rs.rank(); ++i) d.terms.emplace_back(rs.marks()[i], rs.simple_root(i));
  return d;
}

}  // namespace weylrep
