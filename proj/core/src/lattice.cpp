#include "weylrep/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "weylrep/smith.hpp"

namespace weylrep {

namespace {

RatMatrix cartan_inverse(const RootSystem& rs) { return inverse(to_rational(rs.datum().cartan)); }

bool integral_combination(const Coweight& v, const RatMatrix& inv) {
  for (std::size_t j = 0; j < inv.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += Rational(v[i]) * inv(i, j);
    if (s.denominator() != 1) return false;
  }
  return true;
}

std::string lattice_name(const RootSystem& rs, const CocharLattice& lat) {
  const int n = rs.rank();
  const std::int64_t full = determinant(rs.datum().cartan);
  if (lat.index() == 1) return "simply-connected";
  if (lat.index() == full) return "adjoint";
  if (rs.type() == 'A')
    return "SL_" + std::to_string(n + 1) + "/mu_" + std::to_string(lat.index());
  if (rs.type() == 'D') {
    if (lat.contains(fundamental_coweight(n, 0))) return "SO";
    if (lat.contains(fundamental_coweight(n, n - 1))) return "half-spin";
    if (lat.contains(fundamental_coweight(n, n - 2))) return "half-spin'";
  }
  return "index-" + std::to_string(lat.index());
}

}  // namespace

Coweight fundamental_coweight(int rank, int i) {
  Coweight v(rank, 0);
  v.at(i) = 1;
  return v;
}

Coweight simple_coroot_coweight(const RootSystem& rs, int i) {
  const auto row = rs.datum().cartan.row(i);
  return Coweight(row.begin(), row.end());
}

bool in_coroot_lattice(const RootSystem& rs, const Coweight& v) {
  return integral_combination(v, cartan_inverse(rs));
}

std::vector<int> minuscule_indices(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.marks()[i] == 1) out.push_back(i);
  return out;
}

int class_node(const RootSystem& rs, const Coweight& v) {
  const RatMatrix inv = cartan_inverse(rs);
  if (integral_combination(v, inv)) return 0;
  for (int i : minuscule_indices(rs)) {
    Coweight d = v;
    d[i] -= 1;
    if (integral_combination(d, inv)) return i + 1;
  }
  throw std::logic_error("coweight class has no minuscule representative");
}

CocharLattice CocharLattice::generated(const RootSystem& rs, const std::vector<Coweight>& extra,
                                       std::string name) {
  const int n = rs.rank();
  IntMatrix gens(n + extra.size(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gens(i, j) = rs.datum().cartan(i, j);
  for (std::size_t k = 0; k < extra.size(); ++k) {
    if (extra[k].size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("coweight has wrong length");
    for (int j = 0; j < n; ++j) gens(n + k, j) = extra[k][j];
  }
  CocharLattice lat;
  lat.basis_ = hermite_normal_form(gens);
  if (lat.basis_.rows() != static_cast<std::size_t>(n))
    throw std::logic_error("lattice basis is not full rank");
  lat.inverse_ = inverse(to_rational(lat.basis_));
  const std::int64_t det_b = std::llabs(determinant(lat.basis_));
  const std::int64_t det_a = determinant(rs.datum().cartan);
  if (det_a % det_b != 0) throw std::logic_error("lattice index is not integral");
  lat.index_ = det_a / det_b;
  for (int i : minuscule_indices(rs))
    if (lat.contains(fundamental_coweight(n, i))) lat.generators_.push_back(i);
  lat.name_ = name.empty() ? lattice_name(rs, lat) : std::move(name);
  return lat;
}

bool CocharLattice::contains(const Coweight& v) const {
  if (v.size() != basis_.cols()) throw std::invalid_argument("coweight has wrong length");
  return integral_combination(v, inverse_);
}

RatMatrix CocharLattice::coroot_coordinates(const RootSystem& rs) const {
  return to_rational(basis_) * cartan_inverse(rs);
}

CocharLattice coroot_lattice(const RootSystem& rs) {
  return CocharLattice::generated(rs, {}, "simply-connected");
}

CocharLattice coweight_lattice(const RootSystem& rs) {
  std::vector<Coweight> all;
  for (int i = 0; i < rs.rank(); ++i) all.push_back(fundamental_coweight(rs.rank(), i));
  return CocharLattice::generated(rs, all, "adjoint");
}

std::vector<CocharLattice> intermediate_lattices(const RootSystem& rs) {
  // P^vee / Q^vee has at most two generators, and every class is minuscule,
  // so subgroups generated by at most two minuscule classes cover everything.
  const int n = rs.rank();
  const auto mins = minuscule_indices(rs);
  std::vector<std::vector<Coweight>> candidates{{}};
  for (std::size_t x = 0; x < mins.size(); ++x) {
    candidates.push_back({fundamental_coweight(n, mins[x])});
    for (std::size_t y = x + 1; y < mins.size(); ++y)
      candidates.push_back({fundamental_coweight(n, mins[x]), fundamental_coweight(n, mins[y])});
  }
  std::vector<CocharLattice> out;
  for (const auto& extra : candidates) {
    CocharLattice lat = CocharLattice::generated(rs, extra, "");
    if (std::find(out.begin(), out.end(), lat) == out.end()) out.push_back(std::move(lat));
  }
  std::stable_sort(out.begin(), out.end(), [](const CocharLattice& a, const CocharLattice& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a.name() < b.name();
  });
  return out;
}

CocharLattice lattice_by_name(const RootSystem& rs, const std::string& name) {
  std::string key = name;
  if (key == "sc") key = "simply-connected";
  if (key == "ad") key = "adjoint";
  for (auto& lat : intermediate_lattices(rs))
    if (lat.name() == key) return lat;
  throw std::invalid_argument("no lattice named '" + name + "' for type " + rs.label());
}

}  // namespace weylrep
