// Character values in lifted form: a sum of roots of unity
// sum_k m_k z_o^k with nonnegative multiplicities, and its text form.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "monochar/modular.hpp"

namespace monochar {

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
inline std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  // x^n - 1 = prod_{d | n} Phi_d(x); divide out the proper divisors.
  std::vector<std::int64_t> f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    auto phi = cyclotomic_polynomial(d);
    // Exact long division by the monic phi.
    std::vector<std::int64_t> q(f.size() - phi.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = f[i + phi.size() - 1];
      for (std::size_t j = 0; j < phi.size(); ++j) f[i + j] -= q[i] * phi[j];
    }
    f = std::move(q);
  }
  return f;
}

struct CyclotomicValue {
  std::uint32_t order = 1;           ///< o: the value lives in Q(z_o)
  std::vector<std::int64_t> mult;    ///< mult[k] = multiplicity of z_o^k, size o

  std::int64_t degree() const { return std::accumulate(mult.begin(), mult.end(), std::int64_t{0}); }

  /// Coefficients in the power basis of Q(z_o), i.e. the sum reduced mod Phi_o.
  std::vector<std::int64_t> reduced() const {
    std::vector<std::int64_t> r = mult;
    auto phi = cyclotomic_polynomial(order);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = r.size(); i-- > d;) {
      std::int64_t c = r[i];
      if (!c) continue;
      for (std::size_t j = 0; j < phi.size(); ++j) r[i - d + j] -= c * phi[j];
    }
    r.resize(d);
    return r;
  }

  /// The value as an integer when it is rational.
  std::optional<std::int64_t> as_integer() const {
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
      if (r[i] != 0) return std::nullopt;
    return r.empty() ? 0 : r[0];
  }

  /// Integers print plainly; others as "1+2*z3^2" with each root reduced to
  /// its own order.
  std::string to_string() const {
    if (auto v = as_integer()) return std::to_string(*v);
    std::string out;
    for (std::uint32_t k = 0; k < mult.size(); ++k) {
      if (!mult[k]) continue;
      if (!out.empty()) out += '+';
      if (mult[k] != 1) out += std::to_string(mult[k]) + '*';
      if (k == 0) {
        out += '1';
        continue;
      }
      std::uint32_t g = std::gcd(k, order);
      out += 'z' + std::to_string(order / g);
      if (k / g != 1) out += '^' + std::to_string(k / g);
    }
    return out;
  }

  /// Image in F_P under z_o -> field.root_of_unity(o).
  Residue reduce(const Field& field) const {
    Residue w = field.root_of_unity(order), acc{0}, pw = field.from_int(1);
    for (auto m : mult) {
      acc = field.add(acc, field.mul(field.from_int(m), pw));
      pw = field.mul(pw, w);
    }
    return acc;
  }

  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

}  // namespace monochar
