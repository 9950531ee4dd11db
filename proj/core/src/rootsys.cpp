#include "weylrep/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace weylrep {

namespace {

constexpr int kMaxRank = 12;

IntMatrix chain(int n) {
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

void connect(IntMatrix& a, int i, int j) { a(i, j) = a(j, i) = -1; }

bool supported(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1 && rank <= kMaxRank;
    case 'B': return rank >= 2 && rank <= kMaxRank;
    case 'C': return rank >= 2 && rank <= kMaxRank;
    case 'D': return rank >= 4 && rank <= kMaxRank;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

}  // namespace

CartanDatum cartan_datum(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (!supported(type, rank))
    throw std::invalid_argument("unsupported root system type " + std::string(1, type) +
                                std::to_string(rank));
  CartanDatum d{type, rank, IntMatrix(rank, rank)};
  IntMatrix& a = d.cartan;
  const int n = rank;
  switch (type) {
    case 'A':
      a = chain(n);
      break;
    case 'B':
      a = chain(n);
      a(n - 1, n - 2) = -2;
      break;
    case 'C':
      a = chain(n);
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      a = chain(n);
      a(n - 2, n - 1) = a(n - 1, n - 2) = 0;
      connect(a, n - 3, n - 1);
      break;
    case 'E': {
      IntMatrix m(n, n);
      for (int i = 0; i < n; ++i) m(i, i) = 2;
      connect(m, 0, 2);
      connect(m, 1, 3);
      for (int i = 2; i + 1 < n; ++i) connect(m, i, i + 1);
      a = m;
      break;
    }
    case 'F':
      a = chain(4);
      a(2, 1) = -2;
      break;
    case 'G':
      a = chain(2);
      a(0, 1) = -3;
      break;
  }
  return d;
}

CartanDatum cartan_datum(const std::string& label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw std::invalid_argument("malformed type label '" + label + "'");
  const std::string digits = label.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 3)
    throw std::invalid_argument("malformed type label '" + label + "'");
  return cartan_datum(label[0], std::stoi(digits));
}

std::vector<std::string> all_type_labels(int max_rank) {
  std::vector<std::string> out;
  for (char t : std::string("ABCDEFG"))
    for (int r = 1; r <= std::min(max_rank, kMaxRank); ++r) {
      // C2 duplicates B2 up to renumbering.
      if (t == 'C' && r == 2) continue;
      if (supported(t, r)) out.push_back(std::string(1, t) + std::to_string(r));
    }
  return out;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank;
  const IntMatrix& a = datum_.cartan;
  if (n < 1 || n > kMaxRank || a.rows() != static_cast<std::size_t>(n) ||
      a.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("Cartan matrix has wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto v = a(i, j);
      if (i == j && v != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (i != j && (v > 0 || v < -3)) throw std::invalid_argument("Cartan entry out of range");
      if (i != j && (v == 0) != (a(j, i) == 0))
        throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
    }

  // Connectivity of the Dynkin diagram.
  {
    std::vector<bool> seen(n, false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    std::vector<Rational> len(n, Rational(0));
    len[0] = 1;
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        const Rational lj = len[i] * Rational(a(i, j), a(j, i));
        if (!seen[j]) {
          seen[j] = true;
          len[j] = lj;
          todo.push(j);
        } else if (len[j] != lj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      throw std::invalid_argument("Cartan matrix is reducible");
    std::int64_t denom = 1;
    for (const auto& l : len) denom = std::lcm(denom, l.denominator());
    std::int64_t g = 0;
    for (const auto& l : len) g = std::gcd(g, (l * denom).numerator());
    lengths_.resize(n);
    for (int i = 0; i < n; ++i) lengths_[i] = static_cast<int>((len[i] * denom).numerator() / g);
  }

  // Positive definiteness via leading principal minors of the symmetrized matrix.
  {
    IntMatrix sym(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sym(i, j) = lengths_[i] * a(i, j);
    for (int k = 1; k <= n; ++k) {
      IntMatrix minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = sym(i, j);
      if (determinant(minor) <= 0)
        throw std::invalid_argument("Cartan matrix is not positive definite");
    }
  }

  auto simple_pairing = [&](const Coeffs& r, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += r[j] * static_cast<int>(a(i, j));
    return s;
  };

  // Closure by root strings, one height level at a time.
  std::vector<Coeffs> positive;
  std::map<Coeffs, bool> known;
  std::vector<Coeffs> level;
  for (int i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    level.push_back(c);
    known[c] = true;
  }
  while (!level.empty()) {
    positive.insert(positive.end(), level.begin(), level.end());
    std::vector<Coeffs> next;
    for (const auto& b : level)
      for (int i = 0; i < n; ++i) {
        // q: how far b - k alpha_i stays a root.
        int q = 0;
        Coeffs down = b;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++q;
        }
        const int p = q - simple_pairing(b, i);
        if (p <= 0) continue;
        Coeffs up = b;
        up[i] += 1;
        if (!known.count(up)) {
          known[up] = true;
          next.push_back(up);
        }
      }
    level = std::move(next);
    if (positive.size() > 20000) throw std::invalid_argument("root closure did not terminate");
  }

  auto ht = [](const Coeffs& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(positive.begin(), positive.end(), [&](const Coeffs& x, const Coeffs& y) {
    const int hx = ht(x), hy = ht(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  const std::size_t np = positive.size();
  roots_ = positive;
  for (const auto& r : positive) {
    Coeffs neg(r);
    for (auto& v : neg) v = -v;
    roots_.push_back(neg);
  }
  const std::size_t nr = roots_.size();
  for (std::size_t k = 0; k < nr; ++k) lookup_[roots_[k]] = static_cast<RootIndex>(k);

  heights_.resize(nr);
  coroots_.resize(nr);
  coroot_bits_.resize(nr);
  for (std::size_t k = 0; k < nr; ++k) {
    heights_[k] = ht(roots_[k]);
    const std::int64_t norm = form(roots_[k], roots_[k]) / 2;  // (a|a)
    Coeffs cv(n);
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i) {
      const std::int64_t num = static_cast<std::int64_t>(roots_[k][i]) * lengths_[i];
      if (num % norm != 0) throw std::logic_error("non-integral coroot");
      cv[i] = static_cast<int>(num / norm);
      if (cv[i] % 2 != 0) bits |= (1u << i);
    }
    coroots_[k] = cv;
    coroot_bits_[k] = bits;
  }

  pairing_.resize(nr * nr);
  sum_.assign(nr * nr, -1);
  for (std::size_t x = 0; x < nr; ++x) {
    std::vector<int> basic(n);
    for (int i = 0; i < n; ++i) basic[i] = simple_pairing(roots_[x], i);
    for (std::size_t y = 0; y < nr; ++y) {
      int s = 0;
      for (int i = 0; i < n; ++i) s += basic[i] * coroots_[y][i];
      pairing_[x * nr + y] = s;
      Coeffs c(n);
      for (int i = 0; i < n; ++i) c[i] = roots_[x][i] + roots_[y][i];
      auto it = lookup_.find(c);
      if (it != lookup_.end()) sum_[x * nr + y] = it->second;
    }
  }

  reflections_.assign(n, std::vector<RootIndex>(nr));
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < nr; ++x) {
      Coeffs c = roots_[x];
      c[i] -= pairing(static_cast<RootIndex>(x), static_cast<RootIndex>(i));
      reflections_[i][x] = index_of(c);
    }

  highest_ = static_cast<RootIndex>(np - 1);
  for (std::size_t k = 0; k + 1 < np; ++k)
    if (heights_[k] == heights_[np - 1])
      throw std::logic_error("highest root is not unique");
  coxeter_ = heights_[highest_] + 1;
  if (static_cast<int>(nr) != n * coxeter_)
    throw std::logic_error("Coxeter number disagrees with root count");

  rho_check_twice_.assign(n, 0);
  for (std::size_t k = 0; k < np; ++k)
    for (int i = 0; i < n; ++i) rho_check_twice_[i] += coroots_[k][i];
}

std::optional<RootIndex> RootSystem::find(const Coeffs& coeffs) const {
  auto it = lookup_.find(coeffs);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::index_of(const Coeffs& coeffs) const {
  auto r = find(coeffs);
  if (!r) throw std::invalid_argument("not a root: " + format_coeffs(coeffs));
  return *r;
}

std::int64_t RootSystem::form(const Coeffs& x, const Coeffs& y) const {
  const int n = rank();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j)
      s += static_cast<std::int64_t>(x[i]) * y[j] * lengths_[i] * datum_.cartan(i, j);
  }
  return s;
}

RootString RootSystem::root_string(RootIndex a, RootIndex b) const {
  if (a == b || a == negate(b))
    throw std::invalid_argument("root string through a proportional root");
  RootString out;
  RootIndex cur = b;
  while (auto nx = sum(cur, a)) {
    ++out.p;
    cur = *nx;
  }
  cur = b;
  const RootIndex na = negate(a);
  while (auto nx = sum(cur, na)) {
    ++out.q;
    cur = *nx;
  }
  return out;
}

std::int64_t RootSystem::pair_with_coroot_vector(const Coeffs& x,
                                                 const std::vector<std::int64_t>& y) const {
  const int n = rank();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (y[i] == 0) continue;
    std::int64_t b = 0;
    for (int j = 0; j < n; ++j) b += x[j] * datum_.cartan(i, j);
    s += y[i] * b;
  }
  return s;
}

SimplyLacedConditions simply_laced_conditions(const RootSystem& rs) {
  SimplyLacedConditions c{true, true, true, true};
  const int n = rs.rank();
  const auto& a = rs.datum().cartan;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) * a(j, i) > 1) c.no_multiple_bonds = false;
      if (a(i, j) != a(j, i)) c.symmetric_cartan = false;
    }
  const auto nr = static_cast<RootIndex>(rs.num_roots());
  for (RootIndex x = 0; x < nr; ++x)
    for (RootIndex y = 0; y < nr; ++y) {
      if (x == y || x == rs.negate(y)) continue;
      const int v = rs.pairing(x, y);
      if (v < -1 || v > 1) c.small_pairings = false;
    }
  const auto len0 = rs.form(rs.root(0), rs.root(0));
  for (RootIndex x = 0; x < nr; ++x)
    if (rs.form(rs.root(x), rs.root(x)) != len0) c.equal_lengths = false;
  return c;
}

bool is_simply_laced(const RootSystem& rs) {
  const auto c = simply_laced_conditions(rs);
  if (c.small_pairings != c.symmetric_cartan)
    throw std::logic_error("simply-laced characterizations disagree");
  return c.small_pairings;
}

int height(const RootSystem& rs, RootIndex a) { return rs.height(a); }

std::string format_coeffs(const Coeffs& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

}  // namespace weylrep
