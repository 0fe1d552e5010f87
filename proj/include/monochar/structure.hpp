// Structural invariants: Fitting subgroup and series, nilpotency,
// supersolvability, normal Sylow subgroups and normal p-complements,
// and detectors for the degree pattern mcd = {1, m}, cd = {1, m, p}.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "monochar/monomiality.hpp"

namespace monochar {

/// Product of the largest normal p-subgroups over the primes dividing |G|.
inline Subgroup fitting_subgroup(Workspace& ws, const GroupPtr& g_in) {
  GroupPtr g = ws.intern(g_in);
  const auto& l = ws.lattice(g);
  Subgroup f = Subgroup::trivial(g);
  for (auto p : prime_divisors(g->order())) f = join(f, largest_normal_p_subgroup(l, p));
  return f;
}

/// 1 = F_0 < F_1 < ... < F_h = G with F_{i+1}/F_i the Fitting subgroup of G/F_i.
/// Throws for groups that are not solvable.
inline std::vector<Subgroup> fitting_series(Workspace& ws, const GroupPtr& g_in) {
  GroupPtr g = ws.intern(g_in);
  std::vector<Subgroup> series{Subgroup::trivial(g)};
  while (!series.back().is_whole()) {
    Quotient q = quotient_group(series.back());
    q.group = ws.intern(q.group);
    Subgroup fq = fitting_subgroup(ws, q.group);
    if (fq.is_trivial()) throw Error("fitting_series: group is not solvable");
    Subgroup next = q.preimage(Subgroup(q.group, fq.member_vector()));
    series.push_back(Subgroup(g, next.member_vector()));
  }
  return series;
}

inline std::size_t fitting_height(Workspace& ws, const GroupPtr& g) { return fitting_series(ws, g).size() - 1; }

inline bool has_normal_sylow(Workspace& ws, const GroupPtr& g, std::uint64_t p) {
  return sylow_subgroup(ws.lattice(ws.intern(g)), p).is_normal();
}

/// The normal subgroup of order |G| / |G|_p, if there is one.
inline std::optional<Subgroup> normal_p_complement(Workspace& ws, const GroupPtr& g_in, std::uint64_t p) {
  GroupPtr g = ws.intern(g_in);
  const std::size_t want = g->order() / p_part(g->order(), p);
  for (const auto& n : ws.lattice(g).normal_subgroups())
    if (n.order() == want) return n;
  return std::nullopt;
}

/// Every chief factor has prime order.
inline bool is_supersolvable(Workspace& ws, const GroupPtr& g_in) {
  GroupPtr g = ws.intern(g_in);
  auto s = chief_series(ws.lattice(g));
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!is_prime(s[i].order() / s[i - 1].order())) return false;
  return true;
}

/// Every chief factor is a pi-group or a pi'-group. With pi empty every group qualifies.
inline bool is_pi_separable(Workspace& ws, const GroupPtr& g_in, const std::set<std::uint64_t>& pi) {
  if (pi.empty()) return true;
  GroupPtr g = ws.intern(g_in);
  auto s = chief_series(ws.lattice(g));
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::uint64_t q = s[i].order() / s[i - 1].order();
    if (!is_pi_number(q, pi) && !is_pi_prime_number(q, pi)) return false;
  }
  return true;
}

/// pi-solvable: every chief factor is a pi'-group or an elementary abelian p-group with p in pi.
inline bool is_pi_solvable(Workspace& ws, const GroupPtr& g_in, const std::set<std::uint64_t>& pi) {
  if (pi.empty()) return true;
  GroupPtr g = ws.intern(g_in);
  auto s = chief_series(ws.lattice(g));
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::uint64_t q = s[i].order() / s[i - 1].order();
    if (is_pi_prime_number(q, pi)) continue;
    auto ps = prime_divisors(q);
    if (ps.size() != 1 || !pi.contains(ps[0])) return false;
  }
  return true;
}

struct StructureProfile {
  GroupPtr group;
  bool solvable = false;
  std::optional<std::size_t> derived_length;
  std::optional<std::size_t> fitting_height;
  bool nilpotent = false;
  bool supersolvable = false;
  bool metabelian = false;
  std::vector<std::uint64_t> primes;
  std::map<std::uint64_t, bool> normal_sylow;
  std::map<std::uint64_t, bool> normal_p_complement;
};

inline StructureProfile structure_profile(Workspace& ws, const GroupPtr& g_in) {
  GroupPtr g = ws.intern(g_in);
  StructureProfile s;
  s.group = g;
  const auto& ds = ws.derived(g);
  s.solvable = ds.solvable;
  s.derived_length = ds.derived_length;
  s.metabelian = ds.solvable && *ds.derived_length <= 2;
  s.primes = prime_divisors(g->order());
  for (auto p : s.primes) {
    s.normal_sylow[p] = has_normal_sylow(ws, g, p);
    s.normal_p_complement[p] = normal_p_complement(ws, g, p).has_value();
  }
  s.nilpotent = std::all_of(s.normal_sylow.begin(), s.normal_sylow.end(), [](const auto& kv) { return kv.second; });
  if (s.solvable) {
    s.fitting_height = fitting_height(ws, g);
    s.supersolvable = is_supersolvable(ws, g);
  }
  return s;
}

/// (m, p) when mcd = {1, m} and cd = {1, m, p} with p prime and m != p.
inline std::optional<std::pair<std::int64_t, std::int64_t>> hypothesis_star(const MonomialityReport& r) {
  if (r.mcd.size() != 2 || r.cd.size() != 3 || !r.mcd.contains(1)) return std::nullopt;
  const std::int64_t m = *r.mcd.rbegin();
  for (auto d : r.cd) {
    if (d == 1 || d == m) continue;
    if (!is_prime(static_cast<std::uint64_t>(d))) return std::nullopt;
    return std::make_pair(m, d);
  }
  return std::nullopt;
}

/// Tallies and closed forms behind the divisibility |G| | |P|(|G'| - |P'|).
struct DegreeCounts {
  std::int64_t p = 0, m = 0;
  std::size_t order_P = 0, order_P_derived = 0, order_G_derived = 0;
  std::int64_t n_P = 0;            ///< degree-p irreducibles of P, counted
  std::int64_t n_P_formula = 0;    ///< |P|(|P'| - 1) / (p^2 |P'|)
  std::int64_t n_G = 0;            ///< degree-p irreducibles of G, counted
  std::int64_t m_G = 0;            ///< degree-m irreducibles of G, counted
  std::int64_t m_G_formula = 0;    ///< |P|^2 (|G'| - |P'|) / (|G| |G'| |P'|)
  std::int64_t linear = 0;         ///< |G/G'|
  bool divides = false;            ///< |G| divides |P| (|G'| - |P'|)
};

inline DegreeCounts degree_counts(Workspace& ws, const GroupPtr& g_in, std::int64_t m, std::int64_t p) {
  GroupPtr g = ws.intern(g_in);
  DegreeCounts c;
  c.p = p;
  c.m = m;
  Subgroup P = sylow_subgroup(ws.lattice(g), static_cast<std::uint64_t>(p));
  GroupPtr pv = ws.view(P);
  c.order_P = P.order();
  c.order_P_derived = derived_subgroup(Subgroup::whole(pv)).order();
  c.order_G_derived = derived_subgroup(Subgroup::whole(g)).order();
  for (const auto& chi : ws.table(pv).irreducibles())
    if (chi.degree() == p) ++c.n_P;
  for (const auto& chi : ws.table(g).irreducibles()) {
    if (chi.degree() == p) ++c.n_G;
    if (chi.degree() == m) ++c.m_G;
    if (chi.degree() == 1) ++c.linear;
  }
  const auto P_ = static_cast<std::int64_t>(c.order_P), Pd = static_cast<std::int64_t>(c.order_P_derived),
             Gd = static_cast<std::int64_t>(c.order_G_derived), G = static_cast<std::int64_t>(g->order());
  std::int64_t num = P_ * (Pd - 1), den = p * p * Pd;
  c.n_P_formula = num % den == 0 ? num / den : -1;
  // |P|^2 (|G'| - |P'|) fits in 64 bits for every order under the cap.
  std::int64_t num2 = P_ * P_ * (Gd - Pd), den2 = G * Gd * Pd;
  c.m_G_formula = num2 % den2 == 0 ? num2 / den2 : -1;
  c.divides = (P_ * (Gd - Pd)) % G == 0;
  return c;
}

}  // namespace monochar
