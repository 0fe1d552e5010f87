// Small integer utilities: primality, prime divisors, p-parts.
//
// Trial division throughout; every argument is bounded by a group order.
#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "monochar/modular.hpp"

namespace monochar {

inline bool is_prime(std::uint64_t n) { return detail::is_prime_u64(n); }

/// Sorted distinct prime divisors; empty for n <= 1.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n <= 1) return {};
  return detail::prime_factors(n);
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Product of the p-parts of n over p in primes.
inline std::uint64_t pi_part(std::uint64_t n, const std::set<std::uint64_t>& primes) {
  std::uint64_t r = 1;
  for (auto p : primes) r *= p_part(n, p);
  return r;
}

inline bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

/// True when every prime divisor of n lies in primes.
inline bool is_pi_number(std::uint64_t n, const std::set<std::uint64_t>& primes) {
  for (auto p : prime_divisors(n))
    if (!primes.contains(p)) return false;
  return true;
}

/// True when no prime divisor of n lies in primes.
inline bool is_pi_prime_number(std::uint64_t n, const std::set<std::uint64_t>& primes) {
  for (auto p : prime_divisors(n))
    if (primes.contains(p)) return false;
  return true;
}

}  // namespace monochar
