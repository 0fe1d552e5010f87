// Property checks shared by the gtest suite and the acceptance binary. Each
// returns the number of instances examined and the first failure, if any.
// Random choices come from a caller-seeded std::mt19937_64.
#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monochar/monochar.hpp"

namespace props {

using namespace monochar;

struct Result {
  std::size_t instances = 0;
  std::optional<std::string> failure;

  explicit operator bool() const { return !failure; }
};

/// Groups the randomized properties draw from.
inline const std::vector<std::string>& random_pool() {
  static const std::vector<std::string> pool = {
      "symmetric:4", "sl2_3", "dihedral:12", "frobenius:7,3", "q8", "alternating:4", "extraspecial:3",
      "frobenius:5,4", "alternating:5", "product:dihedral:6*cyclic:3", "product:q8*cyclic:2", "dihedral:16",
      "heis_sd:5,3", "abelian:2,4"};
  return pool;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// A uniformly chosen subgroup class, then a uniformly chosen member of it.
inline Subgroup random_subgroup(std::mt19937_64& rng, const SubgroupLattice& l) {
  const auto& cls = l.classes()[pick(rng, l.classes().size())];
  return cls.conjugate_at(pick(rng, cls.size()));
}

/// (1/|G|) sum over elements of a(x) b(x^-1), independent of the class machinery.
inline std::int64_t elementwise_inner(const ClassFunction& a, const ClassFunction& b) {
  const auto& G = *a.group();
  const auto& F = G.field();
  Residue acc{0};
  for (ElementId x = 0; x < G.order(); ++x) acc = F.add(acc, F.mul(a.at_element(x), b.at_element(G.inv(x))));
  return F.to_signed(F.div(acc, F.from_int(static_cast<std::int64_t>(G.order()))));
}

/// Irreducibles orthonormal and sum of squared degrees equal to |G|.
inline Result orthogonality(Workspace& ws, const GroupPtr& g) {
  Result r;
  const auto& t = ws.table(g);
  std::int64_t squares = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    squares += t[i].degree() * t[i].degree();
    for (std::size_t j = 0; j < t.size(); ++j) {
      ++r.instances;
      if (elementwise_inner(t[i], t[j]) != (i == j ? 1 : 0))
        return {r.instances, "rows " + std::to_string(i) + "," + std::to_string(j) + " not orthonormal"};
    }
  }
  if (t.size() != g->num_classes()) return {r.instances, "row count differs from class count"};
  if (squares != static_cast<std::int64_t>(g->order())) return {r.instances, "sum of squared degrees != |G|"};
  return r;
}

/// [psi^G, chi] = [psi, chi_H] for random H, psi in Irr(H), chi in Irr(G).
inline Result frobenius_reciprocity(std::mt19937_64& rng, std::size_t n) {
  Result r;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& recipe = random_pool()[pick(rng, random_pool().size())];
    Workspace ws;
    auto g = ws.intern(construct(recipe).group);
    Subgroup h = random_subgroup(rng, ws.lattice(g));
    GroupPtr hv = ws.view(h);
    const auto& th = ws.table(hv);
    const auto& tg = ws.table(g);
    const auto& psi = th[pick(rng, th.size())];
    const auto& chi = tg[pick(rng, tg.size())];
    ++r.instances;
    if (elementwise_inner(induce(h, psi), chi) != elementwise_inner(psi, restrict(chi, hv)))
      return {r.instances, recipe + ": reciprocity fails for a subgroup of order " + std::to_string(h.order())};
  }
  return r;
}

/// (lambda^G)_K equals the sum of the Mackey pieces, for random H, K, lambda.
inline Result mackey_sum(std::mt19937_64& rng, std::size_t n) {
  Result r;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& recipe = random_pool()[pick(rng, random_pool().size())];
    Workspace ws;
    auto g = ws.intern(construct(recipe).group);
    Subgroup h = random_subgroup(rng, ws.lattice(g));
    Subgroup kk = random_subgroup(rng, ws.lattice(g));
    const auto& th = ws.table(ws.view(h));
    const auto& lambda = th[pick(rng, th.size())];
    GroupPtr kv = kk.view();
    ClassFunction lhs = restrict(induce(h, lambda), kv);
    ClassFunction rhs = ClassFunction::constant(kv, 0);
    for (const auto& piece : mackey_restriction(h, lambda, kk)) rhs = rhs + ClassFunction(kv, piece.piece.values());
    ++r.instances;
    if (!(lhs == rhs))
      return {r.instances, recipe + ": Mackey sum differs for |H|=" + std::to_string(h.order()) +
                               " |K|=" + std::to_string(kk.order())};
  }
  return r;
}

/// For normal N, the kernels of the irreducibles containing N intersect in N;
/// over all irreducibles the intersection is trivial.
inline Result kernel_intersection(std::mt19937_64& rng, std::size_t n) {
  Result r;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& recipe = random_pool()[pick(rng, random_pool().size())];
    Workspace ws;
    auto g = ws.intern(construct(recipe).group);
    auto normals = ws.lattice(g).normal_subgroups();
    const Subgroup& nn = normals[pick(rng, normals.size())];
    Subgroup meet = Subgroup::whole(g), all = Subgroup::whole(g);
    for (const auto& chi : ws.table(g).irreducibles()) {
      Subgroup ker = kernel(chi);
      all = intersection(all, ker);
      if (nn.is_subset_of(ker)) meet = intersection(meet, ker);
    }
    ++r.instances;
    if (!(meet == nn)) return {r.instances, recipe + ": kernels do not cut out a normal subgroup"};
    if (!all.is_trivial()) return {r.instances, recipe + ": irreducible kernels meet nontrivially"};
  }
  return r;
}

/// Inflation of psi from q.image(H) to H, computed by element lookup.
inline ClassFunction inflate_to(const GroupPtr& hv, const Quotient& q, const ClassFunction& psi) {
  const auto& G = *q.source;
  const auto& B = *psi.group();
  auto gel = G.elements();
  auto bel = B.elements();
  std::vector<Residue> v(hv->num_classes());
  for (ClassId c = 0; c < hv->num_classes(); ++c) {
    const Perm& x = hv->element(hv->class_rep(c));
    auto gi = static_cast<ElementId>(std::lower_bound(gel.begin(), gel.end(), x) - gel.begin());
    const Perm& y = q.group->element(q.project(gi));
    auto bi = static_cast<ElementId>(std::lower_bound(bel.begin(), bel.end(), y) - bel.begin());
    v[c] = psi.at_element(bi);
  }
  return ClassFunction(hv, std::move(v));
}

/// Inflating then inducing equals inducing in G/N then lifting, for N <= H.
inline Result lift_induce(std::mt19937_64& rng, std::size_t n) {
  Result r;
  while (r.instances < n) {
    const auto& recipe = random_pool()[pick(rng, random_pool().size())];
    Workspace ws;
    auto g = ws.intern(construct(recipe).group);
    const auto& l = ws.lattice(g);
    auto normals = l.normal_subgroups();
    const Subgroup& nn = normals[pick(rng, normals.size())];
    std::vector<Subgroup> above;
    for (const auto& cls : l.classes())
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (nn.is_subset_of(cls.conjugate_at(i))) above.push_back(cls.conjugate_at(i));
    const Subgroup& h = above[pick(rng, above.size())];
    Quotient q = quotient_group(nn);
    Subgroup hbar = q.image(h);
    GroupPtr bv = ws.view(hbar);
    const auto& tb = ws.table(bv);
    const auto& psi = tb[pick(rng, tb.size())];
    ClassFunction down = lift(induce(hbar, psi), q);
    ClassFunction up = induce(h, inflate_to(ws.view(h), q, psi));
    ++r.instances;
    if (!(down == up))
      return {r.instances, recipe + ": lift and induce do not commute for |N|=" + std::to_string(nn.order()) +
                               " |H|=" + std::to_string(h.order())};
  }
  return r;
}

/// Both super-monomiality tests agree on every irreducible.
inline Result formulation_agreement(Workspace& ws, const GroupPtr& g) {
  Result r;
  for (const auto& chi : ws.table(g).irreducibles()) {
    ++r.instances;
    if (super_monomial_by_inducers(ws, chi).holds != super_monomial_by_primitive_inducers(ws, chi).holds)
      return {r.instances, "formulations disagree on a degree-" + std::to_string(chi.degree()) + " character"};
  }
  return r;
}

/// A super M-group has only M-groups as normal subgroups.
inline Result normal_subgroups_monomial(Workspace& ws, const GroupPtr& g) {
  Result r;
  if (!classify(ws, g).super_m_group) return r;
  for (const auto& n : ws.lattice(g).normal_subgroups()) {
    ++r.instances;
    if (!classify(ws, ws.view(n)).m_group)
      return {r.instances, "normal subgroup of order " + std::to_string(n.order()) + " is not an M-group"};
  }
  return r;
}

/// Solvable groups with square-free degrees have derived length <= 4 and fitting height <= 3.
inline Result squarefree_bounds(Workspace& ws, const GroupPtr& g) {
  Result r;
  auto rep = classify(ws, g);
  for (auto d : rep.cd)
    if (!is_squarefree(static_cast<std::uint64_t>(d))) return r;
  const auto& ds = ws.derived(g);
  if (!ds.solvable) return r;
  ++r.instances;
  if (*ds.derived_length > 4) return {r.instances, "derived length above 4"};
  if (fitting_height(ws, g) > 3) return {r.instances, "fitting height above 3"};
  return r;
}

/// Every monomial witness has index equal to the degree and induces the character.
inline Result witness_index(Workspace& ws, const GroupPtr& g) {
  Result r;
  for (const auto& chi : ws.table(g).irreducibles()) {
    auto w = find_monomial_witness(ws, chi);
    if (!w) continue;
    ++r.instances;
    if (static_cast<std::int64_t>(w->subgroup.index()) != chi.degree()) return {r.instances, "witness index != degree"};
    if (!(induce(w->subgroup, w->linear) == chi)) return {r.instances, "witness does not induce the character"};
  }
  return r;
}

}  // namespace props
