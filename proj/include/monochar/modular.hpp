// Arithmetic in F_P for a prime P = 1 (mod e), plus the small amount of
// linear algebra and polynomial root finding the character table needs.
//
// Every group carries a Field. Subgroups and quotients inherit the field of
// the group they came from, so all class functions that ever meet share one
// reduction Z[zeta_e] -> F_P with zeta_e -> root.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "monochar/perm.hpp"

namespace monochar {

struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(Residue, Residue) = default;
  friend auto operator<=>(Residue, Residue) = default;
};

namespace detail {

inline std::uint64_t modmul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

class Field {
  static std::uint64_t modmul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return detail::modmul(a, b, p);
  }

 public:
  Field() = default;
  Field(std::uint64_t prime, std::uint64_t root, std::uint32_t exponent)
      : prime_(prime), root_(root), exponent_(exponent) {}

  /// Smallest prime P > 2 * order^2 with P = 1 (mod exponent), and a primitive
  /// exponent-th root of unity mod P.
  static Field for_group(std::uint64_t order, std::uint32_t exponent) {
    if (exponent == 0) throw Error("exponent must be positive");
    std::uint64_t bound = 2 * order * order;
    std::uint64_t k = bound / exponent + 1;
    std::uint64_t p = k * exponent + 1;
    while (!detail::is_prime_u64(p) || p <= bound || p < 5) p += exponent;
    Field f(p, 1, exponent);
    auto qs = detail::prime_factors(exponent);
    for (std::uint64_t g = 2; g < p; ++g) {
      std::uint64_t w = f.pow(Residue{g}, (p - 1) / exponent).value;
      bool primitive = true;
      for (std::uint64_t q : qs)
        if (f.pow(Residue{w}, exponent / q).value == 1) primitive = false;
      if (primitive) {
        f.root_ = w;
        return f;
      }
    }
    throw Error("no primitive root of unity found");
  }

  std::uint64_t prime() const { return prime_; }
  std::uint64_t root() const { return root_; }
  std::uint32_t exponent() const { return exponent_; }

  Residue from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(prime_);
    if (m < 0) m += static_cast<std::int64_t>(prime_);
    return Residue{static_cast<std::uint64_t>(m)};
  }
  /// Representative in (-P/2, P/2].
  std::int64_t to_signed(Residue r) const {
    return r.value > prime_ / 2 ? static_cast<std::int64_t>(r.value) - static_cast<std::int64_t>(prime_)
                                : static_cast<std::int64_t>(r.value);
  }

  Residue add(Residue a, Residue b) const {
    std::uint64_t s = a.value + b.value;
    return Residue{s >= prime_ ? s - prime_ : s};
  }
  Residue sub(Residue a, Residue b) const {
    return Residue{a.value >= b.value ? a.value - b.value : a.value + prime_ - b.value};
  }
  Residue neg(Residue a) const { return Residue{a.value == 0 ? 0 : prime_ - a.value}; }
  Residue mul(Residue a, Residue b) const { return Residue{modmul(a.value, b.value, prime_)}; }
  Residue pow(Residue a, std::uint64_t e) const {
    std::uint64_t r = 1 % prime_, b = a.value % prime_;
    while (e) {
      if (e & 1) r = modmul(r, b, prime_);
      b = modmul(b, b, prime_);
      e >>= 1;
    }
    return Residue{r};
  }
  Residue inv(Residue a) const {
    if (a.value % prime_ == 0) throw Error("division by zero in F_P");
    return pow(a, prime_ - 2);
  }
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// Primitive n-th root of unity compatible with root(); n must divide exponent().
  Residue root_of_unity(std::uint32_t n) const {
    if (n == 0 || exponent_ % n != 0) throw Error("root order does not divide the field exponent");
    return pow(Residue{root_}, exponent_ / n);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t prime_ = 0;
  std::uint64_t root_ = 0;
  std::uint32_t exponent_ = 1;
};

// Dense linear algebra and polynomials over F_P, on raw residues.
namespace modp {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;
/// Coefficients, lowest degree first, no trailing zeros (zero polynomial = empty).
using Poly = std::vector<std::uint64_t>;

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return detail::modmul(a, b, p); }
inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint64_t powm(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulm(r, b, p);
    b = mulm(b, b, p);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("division by zero in F_P");
  return powm(a, p - 2, p);
}

/// Row-reduces in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size(), row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    std::uint64_t iv = invm(m[row][c], p);
    for (auto& x : m[row]) x = mulm(x, iv, p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      std::uint64_t f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = subm(m[r][k], mulm(f, m[row][k], p), p);
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis (as rows) of {y : a y = 0}.
inline Mat nullspace(Mat a, std::size_t cols, std::uint64_t p) {
  auto pivots = rref(a, p);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec y(cols, 0);
    y[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = subm(0, a[r][f], p);
    basis.push_back(std::move(y));
  }
  return basis;
}

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = addm(c[i + j], mulm(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

/// Returns (quotient, remainder).
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  std::uint64_t lead_inv = invm(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    std::uint64_t coef = mulm(a[i], lead_inv, p);
    q[i - b.size() + 1] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - b.size() + 1 + j;
      a[k] = subm(a[k], mulm(coef, b[j], p), p);
    }
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly poly_mod(const Poly& a, const Poly& b, std::uint64_t p) { return poly_divmod(a, b, p).second; }

inline Poly make_monic(Poly f, std::uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  std::uint64_t iv = invm(f.back(), p);
  for (auto& c : f) c = mulm(c, iv, p);
  return f;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(base, mod, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), mod, p);
    base = poly_mod(poly_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

/// Characteristic polynomial det(x I - m) by Hessenberg reduction.
/// Reduces h to upper Hessenberg form in place by similarity.
inline void hessenberg(Mat& h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    std::uint64_t piv_inv = invm(h[m][m - 1], p);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      std::uint64_t u = mulm(h[j][m - 1], piv_inv, p);
      for (std::size_t k = 0; k < n; ++k) h[j][k] = subm(h[j][k], mulm(u, h[m][k], p), p);
      for (std::size_t k = 0; k < n; ++k) h[k][m] = addm(h[k][m], mulm(u, h[k][j], p), p);
    }
  }
}

/// Characteristic polynomial of an upper Hessenberg matrix.
inline Poly hessenberg_charpoly(const Mat& h, std::uint64_t p) {
  const std::size_t n = h.size();
  std::vector<Poly> polys(n + 1);
  polys[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = poly_mul(Poly{subm(0, h[m - 1][m - 1], p), 1}, polys[m - 1], p);
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mulm(t, h[m - i][m - i - 1], p);
      std::uint64_t coef = mulm(t, h[m - i - 1][m - 1], p);
      const Poly& prev = polys[m - i - 1];
      if (cur.size() < prev.size()) cur.resize(prev.size(), 0);
      for (std::size_t k = 0; k < prev.size(); ++k) cur[k] = subm(cur[k], mulm(coef, prev[k], p), p);
    }
    trim(cur);
    polys[m] = std::move(cur);
  }
  return polys[n];
}

inline Poly charpoly(Mat h, std::uint64_t p) {
  hessenberg(h, p);
  return hessenberg_charpoly(h, p);
}

/// Distinct roots in F_P of a nonzero polynomial (Cantor-Zassenhaus equal-degree splitting).
inline std::vector<std::uint64_t> roots(const Poly& f_in, std::uint64_t p, std::mt19937_64& rng) {
  Poly f = make_monic(f_in, p);
  if (f.size() <= 1) return {};
  // g = gcd(f, x^p - x): product of the distinct linear factors.
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = subm(xp[1], 1, p);
  trim(xp);
  Poly g = xp.empty() ? f : poly_gcd(f, xp, p);
  std::vector<std::uint64_t> out;
  std::vector<Poly> work{g};
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (!work.empty()) {
    Poly h = std::move(work.back());
    work.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      out.push_back(subm(0, h[0], p));
      continue;
    }
    for (;;) {
      Poly t = poly_powmod(Poly{dist(rng), 1}, (p - 1) / 2, h, p);
      if (t.empty()) t = Poly{0};
      t[0] = subm(t[0], 1, p);
      trim(t);
      Poly d = poly_gcd(h, t, p);
      if (d.size() > 1 && d.size() < h.size()) {
        work.push_back(poly_divmod(h, d, p).first);
        work.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modp
}  // namespace monochar
