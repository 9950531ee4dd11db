#include "weylrep/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace weylrep {

namespace {

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod;
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &out))
    throw std::overflow_error("integer overflow in normal form computation");
  return out;
}

// row_dst += f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = checked_mul_add(m(dst, j), f, m(src, j));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = checked_mul_add(m(i, dst), f, m(i, src));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Floor division, so remainders are nonnegative for positive divisors.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), IntMatrix::identity(n), a};
  IntMatrix& d = s.d;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || std::llabs(d(i, j)) < std::llabs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) return s;
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const std::int64_t q = d(i, t) / d(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const std::int64_t q = d(t, j) / d(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_row(d, t, bad, 1);
      add_row(s.u, t, bad, 1);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // Euclid down the column until a single nonzero entry remains at `row`.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (h(i, col) != 0 && (best == m || std::llabs(h(i, col)) < std::llabs(h(best, col))))
          best = i;
      if (best == m) break;
      swap_rows(h, row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        add_row(h, i, row, -(h(i, col) / h(row, col)));
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) negate_row(h, row);
    for (std::size_t i = 0; i < row; ++i) add_row(h, i, row, -floor_div(h(i, col), h(row, col)));
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMatrix& m,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("modulus must be positive");
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  const SmithForm s = smith_normal_form(m);
  // D y = U b (mod n), x = V y.
  std::vector<std::int64_t> c(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < m.rows(); ++k) acc = mod(acc + mod(s.u(i, k), n) * mod(b[k], n), n);
    c[i] = acc;
  }
  std::vector<std::int64_t> y(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::int64_t di = i < m.cols() ? s.d(i, i) : 0;
    std::int64_t x0, y0;
    const std::int64_t g = ext_gcd(mod(di, n), n, x0, y0);
    if (c[i] % g != 0) return std::nullopt;
    if (i < m.cols()) {
      const std::int64_t ng = n / g;
      y[i] = mod(mod(c[i] / g, ng) * mod(x0, ng), ng);
    }
  }
  std::vector<std::int64_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) acc = mod(acc + mod(s.v(i, k), n) * y[k], n);
    x[i] = acc;
  }
  return x;
}

}  // namespace weylrep
