// The default list of groups the theorem checks run over.
//
// Families are bounded by a maximum order: every abelian group, dihedral
// groups, Frobenius groups C_q x| C_r, and direct products of the small
// nonabelian groups with cyclic groups. Named entries (the extraspecial
// groups of order p^3 and p^{1+2} x| C_3 for p = 5, 7) are added independently of the
// bound.
#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "monochar/constructions.hpp"

namespace monochar {

struct CatalogEntry {
  std::string name;    ///< the recipe string; construct(name) rebuilds the group
  std::size_t order = 0;
  /// Facts known in advance, used as a self-test when the entry is built.
  std::set<std::int64_t> expected_cd;
  std::set<std::int64_t> expected_mcd;
};

struct CatalogOptions {
  std::size_t max_order = 100;
  bool odd_only = false;
  bool include_named = true;
  /// Adds entries beyond desk scale.
  bool include_large = false;
};

namespace detail {

/// All partitions of k, as non-increasing lists.
inline void partitions(std::size_t k, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

/// Elementary divisor lists of all abelian groups of order n, sorted ascending.
inline std::vector<std::vector<std::size_t>> abelian_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> types{{}};
  for (auto p : prime_divisors(n)) {
    std::size_t k = 0;
    for (std::size_t m = n; m % p == 0; m /= p) ++k;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(k, k, cur, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : types)
      for (const auto& part : parts) {
        auto u = t;
        for (auto e : part) {
          std::size_t q = 1;
          for (std::size_t i = 0; i < e; ++i) q *= p;
          u.push_back(q);
        }
        next.push_back(std::move(u));
      }
    types = std::move(next);
  }
  for (auto& t : types) std::sort(t.begin(), t.end());
  return types;
}

}  // namespace detail

inline std::vector<CatalogEntry> build_catalog(const CatalogOptions& opts = {}) {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& name, std::size_t order, std::set<std::int64_t> cd = {},
                 std::set<std::int64_t> mcd = {}) {
    if (opts.odd_only && order % 2 == 0) return;
    if (!seen.insert(name).second) return;
    out.push_back(CatalogEntry{name, order, std::move(cd), std::move(mcd)});
  };
  const std::size_t N = opts.max_order;

  for (std::size_t n = 1; n <= N; ++n)
    for (const auto& t : detail::abelian_types(n)) {
      if (t.size() <= 1) {
        add("cyclic:" + std::to_string(n), n, {1}, {1});
        continue;
      }
      std::string name = "abelian:";
      for (std::size_t i = 0; i < t.size(); ++i) name += (i ? "," : "") + std::to_string(t[i]);
      add(name, n, {1}, {1});
    }

  for (std::size_t n = 6; n <= N; n += 2) add("dihedral:" + std::to_string(n), n);

  for (std::uint64_t q = 3; q * 2 <= N; ++q) {
    if (!is_prime(q)) continue;
    for (std::uint64_t r = 2; r < q && q * r <= N; ++r)
      if ((q - 1) % r == 0) add("frobenius:" + std::to_string(q) + "," + std::to_string(r), q * r);
  }

  struct Small {
    std::string name;
    std::size_t order;
    std::set<std::int64_t> cd, mcd;
  };
  const std::vector<Small> small = {
      {"symmetric:4", 24, {1, 2, 3}, {1, 2, 3}},
      {"alternating:4", 12, {1, 3}, {1, 3}},
      {"alternating:5", 60, {1, 3, 4, 5}, {1, 5}},
      {"q8", 8, {1, 2}, {1, 2}},
      {"sl2_3", 24, {1, 2, 3}, {1, 3}},
  };
  for (const auto& s : small)
    if (s.order <= N) add(s.name, s.order, s.cd, s.mcd);

  // Direct products with cyclic groups.
  std::vector<std::pair<std::string, std::size_t>> bases;
  for (std::size_t n = 6; n <= N; n += 2) bases.emplace_back("dihedral:" + std::to_string(n), n);
  for (const auto& s : small) bases.emplace_back(s.name, s.order);
  bases.emplace_back("frobenius:7,3", 21);
  bases.emplace_back("frobenius:5,4", 20);
  bases.emplace_back("extraspecial:3", 27);
  for (const auto& [name, order] : bases)
    for (std::size_t m = 2; order * m <= N; ++m) add("product:" + name + "*cyclic:" + std::to_string(m), order * m);

  if (opts.include_named) {
    add("extraspecial:3", 27, {1, 3}, {1, 3});
    add("extraspecial:5", 125, {1, 5}, {1, 5});
    add("extraspecial:7", 343, {1, 7}, {1, 7});
    add("heis_sd:5,3", 375, {1, 3, 5}, {1, 3});
    add("heis_sd:7,3", 1029, {1, 3, 7}, {1, 3, 7});
  }
  // Beyond desk scale. The recipe is a placeholder with no generators, so the
  // driver reports the entry as skipped.
  if (opts.include_large) add("dade_vdw", 3584);

  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.order < b.order; });
  return out;
}

}  // namespace monochar
