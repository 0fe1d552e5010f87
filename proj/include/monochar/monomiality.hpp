// Monomial, primitive and super-monomial irreducibles, the sets of
// subgroups a monomial character is induced from, the monomial degree
// set, weak quasi-primitivity and the two subgroup searches used by the
// theorem checks.
//
// Subgroup searches run over conjugacy-class representatives of the lattice:
// conjugating a pair (H, psi) by g gives a pair inducing the same character,
// with the same monomiality and primitivity. Induction tests use Frobenius
// reciprocity, [psi^G, chi] = [psi, chi_H], so chi is restricted once per
// subgroup rather than inducing every candidate.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "monochar/numbers.hpp"
#include "monochar/workspace.hpp"

namespace monochar {

/// chi = linear^G with linear a degree-1 character of subgroup.
struct MonomialWitness {
  Subgroup subgroup;
  ClassFunction linear;
};

/// psi^G = chi for psi irreducible on subgroup.
struct Inducer {
  Subgroup subgroup;
  ClassFunction psi;
};

namespace detail {

enum MemoTag : int { kMonomialMemo = 1, kPrimitiveMemo = 2, kInducerMemo = 3 };

inline void require_irreducible(Workspace& ws, const ClassFunction& chi) {
  if (!is_irreducible(chi)) throw Error("character is not irreducible");
  (void)ws.irreducible_index(chi);
}

}  // namespace detail

/// A subgroup H with [G:H] = chi(1) and a linear lambda of H with lambda^G = chi.
inline std::optional<MonomialWitness> find_monomial_witness(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  GroupPtr g = ws.intern(chi.group());
  std::size_t idx = ws.irreducible_index(chi);
  auto& memo = ws.slot<std::map<std::size_t, std::optional<MonomialWitness>>>(g, detail::kMonomialMemo);
  if (auto it = memo.find(idx); it != memo.end()) return it->second;

  const ClassFunction& row = ws.table(g)[idx];
  std::optional<MonomialWitness> found;
  const auto d = static_cast<std::size_t>(row.degree());
  if (d == 1) {
    Subgroup whole = Subgroup::whole(g);
    found = MonomialWitness{whole, ClassFunction(ws.view(whole), row.values())};
  } else {
    for (const auto& cls : ws.lattice(g).classes()) {
      if (cls.representative.index() != d) continue;
      GroupPtr hv = ws.view(cls.representative);
      ClassFunction res = restrict(row, hv);
      for (const auto& lam : ws.linear_characters(hv))
        if (inner_product(res, lam) != 0) {
          found = MonomialWitness{cls.representative, lam};
          break;
        }
      if (found) break;
    }
  }
  memo.emplace(idx, found);
  return found;
}

inline bool is_monomial(Workspace& ws, const ClassFunction& chi) { return find_monomial_witness(ws, chi).has_value(); }

/// Representatives (up to conjugacy) of the subgroups H admitting a linear lambda with lambda^G = chi.
inline std::vector<Subgroup> monomial_sources(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  GroupPtr g = ws.intern(chi.group());
  const ClassFunction& row = ws.table(g)[ws.irreducible_index(chi)];
  const auto d = static_cast<std::size_t>(row.degree());
  std::vector<Subgroup> out;
  for (const auto& cls : ws.lattice(g).classes()) {
    if (cls.representative.index() != d) continue;
    GroupPtr hv = ws.view(cls.representative);
    ClassFunction res = restrict(row, hv);
    for (const auto& lam : ws.linear_characters(hv))
      if (inner_product(res, lam) != 0) {
        out.push_back(cls.representative);
        break;
      }
  }
  return out;
}

/// theta irreducible on its group H is not induced from any proper subgroup.
inline bool is_primitive(Workspace& ws, const ClassFunction& theta) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, theta);
  GroupPtr h = ws.intern(theta.group());
  std::size_t idx = ws.irreducible_index(theta);
  auto& memo = ws.slot<std::map<std::size_t, bool>>(h, detail::kPrimitiveMemo);
  if (auto it = memo.find(idx); it != memo.end()) return it->second;

  const ClassFunction& row = ws.table(h)[idx];
  const auto d = static_cast<std::size_t>(row.degree());
  bool primitive = true;
  if (d > 1) {
    for (const auto& cls : ws.lattice(h).classes()) {
      const std::size_t k = cls.representative.index();
      if (k == 1 || d % k) continue;
      GroupPtr kv = ws.view(cls.representative);
      ClassFunction res = restrict(row, kv);
      for (const auto& psi : ws.table(kv).irreducibles())
        if (static_cast<std::size_t>(psi.degree()) * k == d && inner_product(res, psi) != 0) {
          primitive = false;
          break;
        }
      if (!primitive) break;
    }
  }
  memo.emplace(idx, primitive);
  return primitive;
}

/// Every (H, psi) up to conjugacy with psi irreducible on H and psi^G = chi,
/// including (G, chi) itself.
inline const std::vector<Inducer>& inducers(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  GroupPtr g = ws.intern(chi.group());
  std::size_t idx = ws.irreducible_index(chi);
  auto& memo = ws.slot<std::map<std::size_t, std::vector<Inducer>>>(g, detail::kInducerMemo);
  if (auto it = memo.find(idx); it != memo.end()) return it->second;

  const ClassFunction& row = ws.table(g)[idx];
  const auto d = static_cast<std::size_t>(row.degree());
  std::vector<Inducer> out;
  for (const auto& cls : ws.lattice(g).classes()) {
    const std::size_t k = cls.representative.index();
    if (d % k) continue;
    GroupPtr hv = ws.view(cls.representative);
    ClassFunction res = restrict(row, hv);
    for (const auto& psi : ws.table(hv).irreducibles())
      if (static_cast<std::size_t>(psi.degree()) * k == d && inner_product(res, psi) != 0)
        out.push_back(Inducer{cls.representative, psi});
  }
  return memo.emplace(idx, std::move(out)).first->second;
}

struct SuperMonomialVerdict {
  bool holds = true;
  /// An inducer violating the criterion when holds is false.
  std::optional<Inducer> counterexample;
};

/// Every character inducing chi is monomial.
inline SuperMonomialVerdict super_monomial_by_inducers(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  if (chi.degree() == 1) return {};
  for (const auto& ind : inducers(ws, chi))
    if (!is_monomial(ws, ind.psi)) return {false, ind};
  return {};
}

/// Every primitive character inducing chi is linear.
inline SuperMonomialVerdict super_monomial_by_primitive_inducers(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  if (chi.degree() == 1) return {};
  for (const auto& ind : inducers(ws, chi))
    if (ind.psi.degree() > 1 && is_primitive(ws, ind.psi)) return {false, ind};
  return {};
}

inline SuperMonomialVerdict is_super_monomial(Workspace& ws, const ClassFunction& chi) {
  return super_monomial_by_inducers(ws, chi);
}

struct CharacterReport {
  std::size_t index = 0;
  std::int64_t degree = 0;
  std::optional<MonomialWitness> witness;
  bool primitive = false;
  SuperMonomialVerdict super_monomial;
  /// The primitive-inducer formulation, computed independently.
  bool super_monomial_alt = false;
};

struct MonomialityReport {
  GroupPtr group;
  std::vector<CharacterReport> characters;
  std::set<std::int64_t> cd;
  std::set<std::int64_t> mcd;
  bool m_group = true;
  bool super_m_group = true;
};

inline MonomialityReport classify(Workspace& ws, const GroupPtr& g_in) {
  std::lock_guard lock(ws.mutex());
  GroupPtr g = ws.intern(g_in);
  const auto& t = ws.table(g);
  MonomialityReport r;
  r.group = g;
  for (std::size_t i = 0; i < t.size(); ++i) {
    CharacterReport c;
    c.index = i;
    c.degree = t[i].degree();
    c.witness = find_monomial_witness(ws, t[i]);
    c.primitive = is_primitive(ws, t[i]);
    c.super_monomial = is_super_monomial(ws, t[i]);
    c.super_monomial_alt = super_monomial_by_primitive_inducers(ws, t[i]).holds;
    r.cd.insert(c.degree);
    if (c.witness) r.mcd.insert(c.degree);
    r.m_group = r.m_group && c.witness.has_value();
    r.super_m_group = r.super_m_group && c.super_monomial.holds;
    r.characters.push_back(std::move(c));
  }
  return r;
}

/**
 * Some irreducible constituent chi of theta^G and some H inducing chi from a
 * linear character with N'' n H contained in H'. Returns (row of chi, H).
 */
inline std::optional<std::pair<std::size_t, Subgroup>> second_derived_witness(Workspace& ws, const Subgroup& n,
                                                                           const ClassFunction& theta) {
  std::lock_guard lock(ws.mutex());
  if (!n.is_normal()) throw Error("second_derived_witness: subgroup is not normal");
  GroupPtr g = ws.intern(n.parent());
  Subgroup nn(g, n.member_vector());
  // N'' as a subgroup of G.
  Subgroup n2 = derived_subgroup(derived_subgroup(nn));
  ClassFunction induced = induce(nn, ClassFunction(ws.view(nn), theta.values()));
  const auto& t = ws.table(g);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (inner_product(induced, t[i]) == 0) continue;
    for (const auto& h : monomial_sources(ws, t[i])) {
      Subgroup hd = derived_subgroup(h);
      bool inside = true;
      for (auto x : n2.members())
        if (h.contains(x) && !hd.contains(x)) {
          inside = false;
          break;
        }
      if (inside) return std::make_pair(i, h);
    }
  }
  return std::nullopt;
}

/// True when chi restricted to the subgroup is a multiple of one irreducible.
inline bool is_homogeneous_on(Workspace& ws, const ClassFunction& chi, const Subgroup& n) {
  GroupPtr nv = ws.view(n);
  ClassFunction res = restrict(chi, nv);
  std::size_t constituents = 0;
  for (const auto& psi : ws.table(nv).irreducibles())
    if (inner_product(res, psi) != 0) ++constituents;
  return constituents == 1;
}

/**
 * A normal series 1 = G_0 < ... < G_n = G with each factor a pi'-group or an
 * abelian pi-group, pi the primes dividing chi(1), and chi homogeneous on
 * every G_i. Searched depth first over the normal subgroups.
 */
inline std::optional<std::vector<Subgroup>> weakly_quasi_primitive_series(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  GroupPtr g = ws.intern(chi.group());
  const ClassFunction& row = ws.table(g)[ws.irreducible_index(chi)];
  auto pd = prime_divisors(static_cast<std::uint64_t>(row.degree()));
  std::set<std::uint64_t> pi(pd.begin(), pd.end());

  auto normals = ws.lattice(g).normal_subgroups();  // ascending order
  std::vector<char> homogeneous(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) homogeneous[i] = is_homogeneous_on(ws, row, normals[i]);

  auto legal_factor = [&](const Subgroup& lo, const Subgroup& hi) {
    std::uint64_t q = hi.order() / lo.order();
    if (is_pi_prime_number(q, pi)) return true;
    if (!is_pi_number(q, pi)) return false;
    return derived_subgroup(hi).is_subset_of(lo);  // hi/lo abelian
  };

  std::vector<char> dead(normals.size(), 0);
  std::vector<std::size_t> path{0};
  // Iterative DFS with an explicit cursor per level.
  std::vector<std::size_t> cursor{1};
  while (!path.empty()) {
    const Subgroup& cur = normals[path.back()];
    if (cur.is_whole()) {
      std::vector<Subgroup> series;
      for (auto i : path) series.push_back(normals[i]);
      return series;
    }
    bool advanced = false;
    while (cursor.back() < normals.size()) {
      const std::size_t j = cursor.back()++;
      const Subgroup& nx = normals[j];
      if (dead[j] || !homogeneous[j] || nx.order() <= cur.order() || !cur.is_subset_of(nx)) continue;
      if (!legal_factor(cur, nx)) continue;
      path.push_back(j);
      cursor.push_back(0);
      advanced = true;
      break;
    }
    if (!advanced) {
      dead[path.back()] = 1;
      path.pop_back();
      cursor.pop_back();
    }
  }
  return std::nullopt;
}

/// A subgroup U with (1_U)^G = chi * conj(chi), searched among subgroups of index chi(1)^2.
inline std::optional<Subgroup> find_norm_subgroup(Workspace& ws, const ClassFunction& chi) {
  std::lock_guard lock(ws.mutex());
  detail::require_irreducible(ws, chi);
  GroupPtr g = ws.intern(chi.group());
  const ClassFunction& row = ws.table(g)[ws.irreducible_index(chi)];
  ClassFunction target = multiply(row, conjugate(row));
  const auto want = static_cast<std::size_t>(row.degree() * row.degree());
  for (const auto& cls : ws.lattice(g).classes()) {
    if (cls.representative.index() != want) continue;
    ClassFunction ind = induce(cls.representative, ClassFunction::trivial(ws.view(cls.representative)));
    if (equal_characters(ind, target)) return cls.representative;
  }
  return std::nullopt;
}

}  // namespace monochar
