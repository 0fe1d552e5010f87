// Theorem checks over the catalog. Each check evaluates a hypothesis
// on one group and, when it holds, the conclusion; the outcome is
// pass, fail with a witness, or not applicable with a reason.
//
// Checks whose hypothesis is met only through linear characters or trivial
// subgroups still evaluate the conclusion but report not-applicable, so a
// vacuous instance is never counted as evidence.
#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>
#include <atomic>

#include "monochar/catalog.hpp"
#include "monochar/structure.hpp"

namespace monochar {

enum class Status { pass, fail, not_applicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "not-applicable";
  }
}

/// Reproducible evidence for a failure: the recipe, a character row and subgroup ids.
struct Witness {
  std::optional<std::size_t> character;
  std::vector<ElementId> subgroup;
};

struct Outcome {
  std::string group;
  std::size_t order = 0;
  Status status = Status::not_applicable;
  std::string detail;
  Witness witness;
  double seconds = 0;
};

struct TheoremReport {
  std::string id;
  std::string title;
  std::vector<Outcome> outcomes;
  double seconds = 0;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [&](const Outcome& o) { return o.status == s; }));
  }
};

struct VerificationReport {
  std::vector<TheoremReport> theorems;
  std::vector<std::string> skipped;  ///< catalog entries that could not be built, with reasons
  double seconds = 0;

  bool any_fail() const {
    for (const auto& t : theorems)
      if (t.count(Status::fail)) return true;
    return false;
  }
};

/// Everything the checks share about one group, computed on first use.
class GroupContext {
 public:
  GroupContext(CatalogEntry entry, WorkspaceOptions opts)
      : entry_(std::move(entry)), ws_(std::move(opts)) {
    built_ = construct(entry_.name);
    g_ = ws_.intern(built_.group);
  }

  const CatalogEntry& entry() const { return entry_; }
  const Construction& construction() const { return built_; }
  Workspace& ws() { return ws_; }
  const GroupPtr& group() const { return g_; }
  bool odd() const { return g_->order() % 2 == 1; }

  const MonomialityReport& report() {
    if (!report_) report_ = classify(ws_, g_);
    return *report_;
  }
  const StructureProfile& profile() {
    if (!profile_) profile_ = structure_profile(ws_, g_);
    return *profile_;
  }
  const CharacterTable& table() { return ws_.table(g_); }
  const SubgroupLattice& lattice() { return ws_.lattice(g_); }
  Subgroup derived() {
    const auto& ds = ws_.derived(g_);
    return ds.terms.size() > 1 ? ds.terms[1] : ds.terms[0];
  }
  Subgroup second_derived() { return derived_subgroup(derived()); }

 private:
  CatalogEntry entry_;
  Construction built_;
  Workspace ws_;
  GroupPtr g_;
  std::optional<MonomialityReport> report_;
  std::optional<StructureProfile> profile_;
};

namespace detail {

inline Outcome pass(std::string d = {}) { return {"", 0, Status::pass, std::move(d), {}, 0}; }
inline Outcome na(std::string d) { return {"", 0, Status::not_applicable, std::move(d), {}, 0}; }
inline Outcome fail(std::string d, Witness w = {}) { return {"", 0, Status::fail, std::move(d), std::move(w), 0}; }

inline std::string set_string(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

inline bool is_p_group_order(std::size_t n) { return prime_divisors(n).size() <= 1; }

/// Nilpotent iff each Sylow subgroup is unique, i.e. the p-elements number |S|_p.
inline bool is_nilpotent_subgroup(const Subgroup& s) {
  const auto& G = *s.parent();
  for (auto p : prime_divisors(s.order())) {
    std::size_t count = 0;
    for (auto x : s.members())
      if (prime_divisors(G.element_order(x)).size() == 0 || prime_divisors(G.element_order(x)) == std::vector{p})
        ++count;
    if (count != p_part(s.order(), p)) return false;
  }
  return true;
}

inline bool is_cyclic_subgroup(const Subgroup& s) {
  const auto& G = *s.parent();
  for (auto x : s.members())
    if (G.element_order(x) == s.order()) return true;
  return false;
}

inline bool all_squarefree(const std::set<std::int64_t>& cd) {
  return std::all_of(cd.begin(), cd.end(), [](std::int64_t d) { return is_squarefree(static_cast<std::uint64_t>(d)); });
}

/// Odd order, hypothesis (*), and G'' the unique minimal normal subgroup.
inline std::optional<std::pair<std::int64_t, std::int64_t>> unique_minimal_second_derived(GroupContext& c,
                                                                                         std::string& why) {
  if (!c.odd()) {
    why = "even order";
    return std::nullopt;
  }
  auto star = hypothesis_star(c.report());
  if (!star) {
    why = "mcd/cd pattern {1,m}/{1,m,p} absent (mcd=" + set_string(c.report().mcd) + ", cd=" +
          set_string(c.report().cd) + ")";
    return std::nullopt;
  }
  auto mins = minimal_normal_subgroups(c.lattice());
  Subgroup g2 = c.second_derived();
  if (mins.size() != 1 || !(mins[0] == g2)) {
    why = "G'' is not the unique minimal normal subgroup";
    return std::nullopt;
  }
  return star;
}

// Individual checks. Each returns an outcome without group fields filled in.

inline Outcome odd_min_degree_super_monomial(GroupContext& c) {
  if (!c.odd()) return na("even order");
  const auto& r = c.report();
  if (r.cd.size() < 2) return na("no nonlinear character");
  const std::int64_t m = *std::next(r.cd.begin());
  std::size_t checked = 0;
  for (const auto& ch : r.characters) {
    if (ch.degree != m) continue;
    ++checked;
    if (!ch.super_monomial.holds) {
      Witness w{ch.index, ch.super_monomial.counterexample->subgroup.member_vector()};
      return fail("row " + std::to_string(ch.index) + " of degree " + std::to_string(m) +
                      " is induced from a non-monomial character",
                  w);
    }
  }
  return pass(std::to_string(checked) + " characters of degree " + std::to_string(m) + " super-monomial");
}

inline Outcome normal_subgroup_super_monomial(GroupContext& c) {
  const auto& r = c.report();
  if (!r.m_group) return na("not an M-group");
  auto& ws = c.ws();
  std::size_t hits = 0, deep = 0;
  for (const auto& n : c.lattice().normal_subgroups()) {
    if (n.is_trivial()) continue;
    GroupPtr nv = ws.view(n);
    const bool n2_trivial = derived_subgroup(derived_subgroup(Subgroup::whole(nv))).is_trivial();
    const auto& tn = ws.table(nv);
    for (std::size_t i = 0; i < tn.size(); ++i) {
      if (tn[i].degree() == 1) continue;  // linear characters are super-monomial outright
      auto hit = second_derived_witness(ws, n, tn[i]);
      if (!hit) continue;
      ++hits;
      if (!n2_trivial) ++deep;
      auto v = is_super_monomial(ws, tn[i]);
      if (!v.holds)
        return fail("character " + std::to_string(i) + " of normal subgroup of order " + std::to_string(n.order()) +
                        " meets the condition via row " + std::to_string(hit->first) + " but is not super-monomial",
                    Witness{i, n.member_vector()});
    }
  }
  if (hits == 0) return na("no nonlinear character of a normal subgroup meets the condition");
  return pass(std::to_string(hits) + " (N, theta) pairs, " + std::to_string(deep) + " with N'' nontrivial");
}

inline Outcome squarefree_fitting_height(GroupContext& c) {
  if (!c.odd()) return na("even order");
  const auto& r = c.report();
  if (r.mcd.size() != 2) return na("|mcd| = " + std::to_string(r.mcd.size()));
  if (!all_squarefree(r.cd)) return na("cd " + set_string(r.cd) + " has a non-square-free member");
  const auto& p = c.profile();
  if (!p.fitting_height) return fail("group is not solvable");
  if (*p.fitting_height > 2) return fail("fitting height " + std::to_string(*p.fitting_height));
  return pass("fitting height " + std::to_string(*p.fitting_height));
}

inline Outcome squarefree_derived_length(GroupContext& c) {
  if (!c.odd()) return na("even order");
  const auto& r = c.report();
  if (r.mcd.size() != 2) return na("|mcd| = " + std::to_string(r.mcd.size()));
  if (!all_squarefree(r.cd)) return na("cd " + set_string(r.cd) + " has a non-square-free member");
  const auto& p = c.profile();
  if (!p.derived_length) return fail("group is not solvable");
  if (*p.derived_length > 3) return fail("derived length " + std::to_string(*p.derived_length));
  return pass("derived length " + std::to_string(*p.derived_length));
}

inline Outcome star_gcd(GroupContext& c, bool even_only) {
  if (even_only && c.odd()) return na("odd order");
  auto star = hypothesis_star(c.report());
  if (!star) return na("mcd/cd pattern {1,m}/{1,m,p} absent");
  const auto p = star->second;
  const auto gcd = std::gcd(static_cast<std::int64_t>(c.group()->order()), p * p - 1);
  std::string d = "m=" + std::to_string(star->first) + " p=" + std::to_string(p) +
                  " gcd(|G|, p^2-1)=" + std::to_string(gcd);
  return gcd > 1 ? pass(d) : fail(d);
}

inline Outcome metabelian_super_m(GroupContext& c) {
  const auto& p = c.profile();
  if (!p.derived_length || *p.derived_length > 2) return na("derived length exceeds 2");
  const auto& r = c.report();
  for (const auto& ch : r.characters)
    if (!ch.super_monomial.holds)
      return fail("row " + std::to_string(ch.index) + " is not super-monomial",
                  Witness{ch.index, ch.super_monomial.counterexample->subgroup.member_vector()});
  return pass("derived length " + std::to_string(*p.derived_length) + ", super M-group");
}

inline Outcome berger_kernel(GroupContext& c) {
  if (!c.odd()) return na("even order");
  const auto& t = c.table();
  std::vector<Subgroup> kernels;
  for (const auto& chi : t.irreducibles()) kernels.push_back(kernel(chi));
  auto normals = c.lattice().normal_subgroups();
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    // Intersection of kernels of all irreducibles of smaller degree.
    Subgroup below = Subgroup::whole(c.group());
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[j].degree() < t[i].degree()) below = intersection(below, kernels[j]);
    for (const auto& m : normals) {
      if (!m.is_subset_of(below)) continue;
      Subgroup md = derived_subgroup(m);
      if (md.is_trivial()) continue;
      ++nontrivial;
      if (!md.is_subset_of(kernels[i]))
        return fail("M' not in the kernel of row " + std::to_string(i), Witness{i, m.member_vector()});
    }
  }
  if (nontrivial == 0) return na("only instances with M' = 1");
  return pass(std::to_string(nontrivial) + " (chi, M) instances with M' nontrivial");
}

inline Outcome mcd_normal_complements(GroupContext& c) {
  const auto& p = c.profile();
  if (!p.solvable) return na("not solvable");
  std::set<std::int64_t> s = c.report().mcd;
  s.erase(1);
  auto& ws = c.ws();
  std::string d;
  for (auto q : p.primes) {
    const auto qi = static_cast<std::int64_t>(q);
    const bool divides_all = std::all_of(s.begin(), s.end(), [&](std::int64_t m) { return m % qi == 0; });
    const bool coprime_all = std::all_of(s.begin(), s.end(), [&](std::int64_t m) { return m % qi != 0; });
    if (divides_all) {
      if (!normal_p_complement(ws, c.group(), q))
        return fail("p=" + std::to_string(q) + " divides mcd\\{1} but no normal p-complement");
      d += " complement(" + std::to_string(q) + ")";
    }
    if (coprime_all) {
      if (!has_normal_sylow(ws, c.group(), q))
        return fail("p=" + std::to_string(q) + " coprime to mcd\\{1} but Sylow not normal",
                    Witness{std::nullopt, sylow_subgroup(c.lattice(), q).member_vector()});
      d += " sylow(" + std::to_string(q) + ")";
    }
  }
  return pass("mcd=" + set_string(c.report().mcd) + d);
}

/// The normal subgroup of G whose image in the abelian G/G' is its pi(|G'|)-part.
inline Subgroup hall_above_derived(GroupContext& c) {
  Subgroup d = c.derived();
  auto pd = prime_divisors(d.order());
  std::set<std::uint64_t> pi(pd.begin(), pd.end());
  Quotient q = quotient_group(d);
  std::vector<ElementId> members;
  for (ElementId x = 0; x < q.group->order(); ++x)
    if (is_pi_number(q.group->element_order(x), pi)) members.push_back(x);
  return q.preimage(Subgroup(q.group, std::move(members)));
}

/// The degree-1 inducing route: lambda in chi_H, I = I_G(lambda), constituents of lambda^I linear, one inducing chi.
inline std::optional<std::string> gallagher_route(GroupContext& c, Subgroup h, const ClassFunction& chi) {
  auto& ws = c.ws();
  h = Subgroup(c.group(), h.member_vector());
  GroupPtr hv = ws.view(h);
  ClassFunction res = restrict(chi, hv);
  const ClassFunction* lambda = nullptr;
  for (const auto& l : ws.linear_characters(hv))
    if (inner_product(res, l) != 0) {
      lambda = &l;
      break;
    }
  if (!lambda) return "no linear constituent on the Hall subgroup";
  Subgroup inert = inertia_group(h, *lambda);
  GroupPtr iv = inert.view();
  ClassFunction up = induce(into_view(iv, h), *lambda);
  const auto& ti = ws.table(iv);
  auto coeffs = ti.decompose(ClassFunction(ti.group(), up.values()));
  bool induces = false;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (ti[k].degree() != 1) return "a constituent of lambda^I is nonlinear";
    induces = induces || induce(inert, ti[k]) == chi;
  }
  if (!induces) return "no constituent of lambda^I induces chi";
  return std::nullopt;
}

inline Outcome coprime_degree_monomial(GroupContext& c) {
  const auto& r = c.report();
  const auto gd = static_cast<std::int64_t>(c.derived().order());
  std::size_t checked = 0;
  std::optional<Subgroup> hall;
  for (const auto& ch : r.characters) {
    if (ch.degree == 1 || std::gcd(ch.degree, gd) != 1) continue;
    ++checked;
    if (!ch.witness) return fail("row " + std::to_string(ch.index) + " is not monomial", Witness{ch.index, {}});
    if (!hall) hall = hall_above_derived(c);
    if (auto err = gallagher_route(c, *hall, c.table()[ch.index]))
      return fail("row " + std::to_string(ch.index) + ": " + *err, Witness{ch.index, hall->member_vector()});
  }
  if (checked == 0) return na("no nonlinear character of degree coprime to |G'|");
  return pass(std::to_string(checked) + " characters monomial, inducing route confirmed");
}

inline Outcome one_monomial_degree_abelian(GroupContext& c) {
  const auto& p = c.profile();
  if (!p.solvable) return na("not solvable");
  const auto& r = c.report();
  if (r.mcd.size() != 1) return na("|mcd| = " + std::to_string(r.mcd.size()));
  if (!c.group()->is_abelian()) return fail("solvable, |mcd| = 1, but not abelian");
  return pass("abelian");
}

inline Outcome nilpotent_derived_p_group(GroupContext& c) {
  auto mins = minimal_normal_subgroups(c.lattice());
  if (mins.size() != 1) return na(std::to_string(mins.size()) + " minimal normal subgroups");
  const auto& r = c.report();
  if (r.mcd.size() != 2) return na("|mcd| = " + std::to_string(r.mcd.size()));
  Subgroup d = c.derived();
  if (!is_nilpotent_subgroup(d)) return na("G' is not nilpotent");
  auto np = prime_divisors(mins[0].order());
  if (np.size() != 1) return fail("unique minimal normal subgroup is not of prime power order");
  const std::uint64_t p = np[0];
  if (!(prime_divisors(d.order()).size() == 0 || prime_divisors(d.order()) == std::vector{p}))
    return fail("G' is not a " + std::to_string(p) + "-group", Witness{std::nullopt, d.member_vector()});
  const auto index = static_cast<std::int64_t>(c.group()->order() / p_part(c.group()->order(), p));
  std::size_t checked = 0;
  for (const auto& ch : r.characters) {
    if (ch.degree == 1 || ch.degree % static_cast<std::int64_t>(p) == 0) continue;
    ++checked;
    if (!ch.witness) return fail("row " + std::to_string(ch.index) + " is not monomial", Witness{ch.index, {}});
    if (ch.degree != index)
      return fail("row " + std::to_string(ch.index) + " has degree " + std::to_string(ch.degree) + " != [G:P] = " +
                      std::to_string(index),
                  Witness{ch.index, {}});
  }
  return pass("p=" + std::to_string(p) + ", " + std::to_string(checked) + " nonlinear p'-degree characters of degree [G:P]");
}

inline Outcome unique_minimal_structure(GroupContext& c) {
  std::string why;
  auto star = unique_minimal_second_derived(c, why);
  if (!star) return na(why);
  const auto [m, p] = *star;
  const auto pu = static_cast<std::uint64_t>(p);
  Subgroup d = c.derived();
  if (!(prime_divisors(d.order()) == std::vector{pu})) return fail("G' is not a p-group");
  Subgroup P = sylow_subgroup(c.lattice(), pu);
  if (!P.is_normal()) return fail("Sylow p-subgroup is not normal", Witness{std::nullopt, P.member_vector()});
  Subgroup z = center(c.group());
  if (!is_cyclic_subgroup(z)) return fail("Z(G) is not cyclic", Witness{std::nullopt, z.member_vector()});
  for (const auto& a : c.lattice().normal_subgroups())
    if (derived_subgroup(a).is_trivial() && !a.is_subset_of(z))
      return fail("abelian normal subgroup outside Z(G)", Witness{std::nullopt, a.member_vector()});
  const auto index = static_cast<std::int64_t>(c.group()->order() / P.order());
  if (m != index) return fail("m = " + std::to_string(m) + " but [G:P] = " + std::to_string(index));
  return pass("p=" + std::to_string(p) + " m=" + std::to_string(m) + " |Z(G)|=" + std::to_string(z.order()));
}

inline Outcome unique_minimal_counts(GroupContext& c) {
  std::string why;
  auto star = unique_minimal_second_derived(c, why);
  if (!star) return na(why);
  const auto [m, p] = *star;
  auto k = degree_counts(c.ws(), c.group(), m, p);
  std::ostringstream d;
  d << "n_P=" << k.n_P << " n_G=" << k.n_G << " m_G=" << k.m_G << " |G/G'|=" << k.linear;
  if (!k.divides) return fail("|G| does not divide |P|(|G'|-|P'|); " + d.str());
  if (k.n_P != k.n_P_formula) return fail("n_P differs from the closed form; " + d.str());
  const auto index = static_cast<std::int64_t>(c.group()->order() / k.order_P);
  if (k.n_G != k.n_P * index) return fail("n_G != n_P [G:P]; " + d.str());
  if (k.m_G != k.m_G_formula) return fail("m_G differs from the closed form; " + d.str());
  if (k.linear + k.n_G * p * p + k.m_G * m * m != static_cast<std::int64_t>(c.group()->order()))
    return fail("degree-square sum mismatch; " + d.str());
  return pass(d.str());
}

inline Outcome unique_minimal_orders(GroupContext& c) {
  std::string why;
  auto star = unique_minimal_second_derived(c, why);
  if (!star) return na(why);
  const auto p = static_cast<std::size_t>(star->second);
  auto k = degree_counts(c.ws(), c.group(), star->first, star->second);
  std::string d = "|P'|=" + std::to_string(k.order_P_derived) + " |G'|=" + std::to_string(k.order_G_derived);
  if (k.order_P_derived != p || k.order_G_derived != p * p * p) return fail(d);
  return pass(d);
}

inline Outcome weakly_quasi_primitive_norm(GroupContext& c) {
  auto& ws = c.ws();
  const auto& t = c.table();
  std::size_t nonlinear = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto d = t[i].degree();
    if (d % 2 == 0) continue;
    auto pd = prime_divisors(static_cast<std::uint64_t>(d));
    if (!is_pi_solvable(ws, c.group(), std::set<std::uint64_t>(pd.begin(), pd.end()))) continue;
    if (!weakly_quasi_primitive_series(ws, t[i])) continue;
    if (d > 1) ++nonlinear;
    if (!find_norm_subgroup(ws, t[i])) return fail("no U with (1_U)^G = chi chi-bar for row " + std::to_string(i), Witness{i, {}});
  }
  if (nonlinear == 0) return na("no nonlinear odd-degree weakly quasi-primitive character");
  return pass(std::to_string(nonlinear) + " nonlinear characters with U found");
}

}  // namespace detail

struct TheoremCheck {
  std::string id;
  std::string title;
  std::function<Outcome(GroupContext&)> check;
};

/// Every check, in report order.
inline const std::vector<TheoremCheck>& theorem_registry() {
  using namespace detail;
  static const std::vector<TheoremCheck> reg = {
      {"T1.1", "odd order: characters of least nonlinear degree are super-monomial", odd_min_degree_super_monomial},
      {"T1.2", "M-group: N'' n H in H' for some inducing H forces theta super-monomial", normal_subgroup_super_monomial},
      {"T1.3i", "odd order, |mcd| = 2, square-free degrees: fitting height at most 2", squarefree_fitting_height},
      {"T1.3ii", "odd order, |mcd| = 2, square-free degrees: derived length at most 3", squarefree_derived_length},
      {"T1.4", "mcd = {1,m}, cd = {1,m,p}: gcd(|G|, p^2-1) > 1", [](GroupContext& c) { return star_gcd(c, false); }},
      {"P2.1", "derived length at most 2: super M-group", metabelian_super_m},
      {"T2.2", "odd order: M in the kernels of smaller degrees puts M' in Ker chi", berger_kernel},
      {"T2.3", "solvable: mcd divisibility gives normal p-complements and normal Sylows", mcd_normal_complements},
      {"L2.4", "chi(1) coprime to |G'|: chi monomial", coprime_degree_monomial},
      {"L2.5", "solvable with |mcd| = 1: abelian", one_monomial_degree_abelian},
      {"L3.2", "unique minimal normal, G' nilpotent, |mcd| = 2: G' a p-group, p'-degrees monomial of degree [G:P]",
       nilpotent_derived_p_group},
      {"L3.3", "odd, mcd/cd pattern, G'' unique minimal normal: P normal, Z(G) cyclic, m = [G:P]",
       unique_minimal_structure},
      {"P3.1", "even order with mcd = {1,m}, cd = {1,m,p}: gcd(|G|, p^2-1) > 1",
       [](GroupContext& c) { return star_gcd(c, true); }},
      {"P3.4", "odd, mcd/cd pattern, G'' unique minimal normal: |G| divides |P|(|G'|-|P'|)", unique_minimal_counts},
      {"T3.6", "weakly quasi-primitive odd degree: chi chi-bar = (1_U)^G for some U", weakly_quasi_primitive_norm},
      {"P3.7", "odd, mcd/cd pattern, G'' unique minimal normal: |P'| = p, |G'| = p^3", unique_minimal_orders},
  };
  return reg;
}

inline const TheoremCheck* find_theorem(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return &t;
  return nullptr;
}

struct VerifyOptions {
  std::vector<std::string> ids;  ///< empty means all
  WorkspaceOptions workspace;
  unsigned threads = 1;
  /// Called after each group, in completion order.
  std::function<void(const std::string&)> progress;
};

/// Self-test of the known facts attached to a catalog entry.
inline std::optional<std::string> check_expected(GroupContext& c) {
  const auto& e = c.entry();
  if (e.order && c.group()->order() != e.order)
    return "order " + std::to_string(c.group()->order()) + " != expected " + std::to_string(e.order);
  if (!e.expected_cd.empty() && c.report().cd != e.expected_cd) return "cd differs from expected";
  if (!e.expected_mcd.empty() && c.report().mcd != e.expected_mcd) return "mcd differs from expected";
  return std::nullopt;
}

inline VerificationReport verify(const std::vector<CatalogEntry>& catalog, const VerifyOptions& opts = {}) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::vector<const TheoremCheck*> checks;
  if (opts.ids.empty())
    for (const auto& t : theorem_registry()) checks.push_back(&t);
  else
    for (const auto& id : opts.ids) {
      auto t = find_theorem(id);
      if (!t) throw Error("unknown theorem id: " + id);
      checks.push_back(t);
    }

  // results[group][theorem]
  std::vector<std::vector<Outcome>> results(catalog.size());
  std::vector<std::string> skipped(catalog.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;

  auto worker = [&] {
    for (std::size_t gi = next++; gi < catalog.size(); gi = next++) {
      const auto& entry = catalog[gi];
      std::unique_ptr<GroupContext> ctx;
      try {
        ctx = std::make_unique<GroupContext>(entry, opts.workspace);
      } catch (const std::exception& e) {
        skipped[gi] = entry.name + ": " + e.what();
        continue;
      }
      std::optional<std::string> bad;
      try {
        bad = check_expected(*ctx);
      } catch (const std::exception& e) {
        bad = e.what();
      }
      for (const auto* chk : checks) {
        const auto t0 = Clock::now();
        Outcome o;
        if (bad) {
          o = detail::fail("catalog self-test: " + *bad);
        } else {
          try {
            o = chk->check(*ctx);
          } catch (const std::exception& e) {
            o = detail::fail(std::string("error: ") + e.what());
          }
        }
        o.group = entry.name;
        o.order = entry.order;
        o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        results[gi].push_back(std::move(o));
      }
      if (opts.progress) {
        std::lock_guard lock(progress_mutex);
        opts.progress(entry.name);
      }
    }
  };
  const unsigned n = std::max(1u, opts.threads);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerificationReport rep;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    TheoremReport tr{checks[k]->id, checks[k]->title, {}, 0};
    for (std::size_t gi = 0; gi < catalog.size(); ++gi) {
      if (results[gi].empty()) continue;
      tr.outcomes.push_back(results[gi][k]);
      tr.seconds += results[gi][k].seconds;
    }
    rep.theorems.push_back(std::move(tr));
  }
  for (auto& s : skipped)
    if (!s.empty()) rep.skipped.push_back(std::move(s));
  rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

}  // namespace monochar
