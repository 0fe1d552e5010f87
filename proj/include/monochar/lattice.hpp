// All subgroups up to conjugacy, and the searches built on top of the
// lattice: Sylow and Hall subgroups, normal and minimal normal
// subgroups, chief series.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "monochar/group.hpp"
#include "monochar/numbers.hpp"

namespace monochar {

namespace detail {

struct MemberHash {
  std::size_t operator()(const std::vector<ElementId>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

struct SubgroupClass {
  Subgroup representative;  ///< lexicographically smallest member set of the class
  std::vector<std::vector<ElementId>> conjugates;  ///< sorted; includes the representative

  std::size_t size() const { return conjugates.size(); }
  bool is_normal() const { return conjugates.size() == 1; }
  std::size_t order() const { return representative.order(); }
  Subgroup conjugate_at(std::size_t i) const { return Subgroup(representative.parent(), conjugates[i]); }
};

class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  SubgroupLattice(GroupPtr parent, std::vector<SubgroupClass> classes)
      : parent_(std::move(parent)), classes_(std::move(classes)) {
    for (std::size_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].is_normal()) normal_ids_.push_back(i);
  }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const std::vector<std::size_t>& normal_ids() const { return normal_ids_; }

  std::size_t total_subgroups() const {
    std::size_t n = 0;
    for (const auto& c : classes_) n += c.size();
    return n;
  }

  std::vector<Subgroup> normal_subgroups() const {
    std::vector<Subgroup> out;
    for (auto i : normal_ids_) out.push_back(classes_[i].representative);
    return out;
  }

  /// Class index holding the given member set, if it is a subgroup.
  std::optional<std::size_t> find_class(std::span<const ElementId> members) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (classes_[i].order() != members.size()) continue;
      for (const auto& c : classes_[i].conjugates)
        if (std::equal(c.begin(), c.end(), members.begin(), members.end())) return i;
    }
    return std::nullopt;
  }

 private:
  GroupPtr parent_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::size_t> normal_ids_;
};

/**
 * Layered enumeration: seed with cyclic subgroups, then join each class
 * representative with every cyclic subgroup until nothing new appears. Each
 * new subgroup is expanded to its full conjugacy class by conjugating with
 * every element of G.
 */
inline SubgroupLattice enumerate_subgroups(const GroupPtr& g, std::size_t order_cap = 10000) {
  if (g->order() > order_cap) throw Error("group order exceeds the configured cap");
  const auto& G = *g;
  // One generator per cyclic subgroup.
  std::vector<ElementId> cyclic_gens;
  {
    std::unordered_set<std::vector<ElementId>, detail::MemberHash> seen_cyclic;
    for (ElementId x = 1; x < G.order(); ++x) {
      ElementId gen[1] = {x};
      if (seen_cyclic.insert(closure(G, gen)).second) cyclic_gens.push_back(x);
    }
  }

  std::unordered_set<std::vector<ElementId>, detail::MemberHash> seen;
  struct Pending {
    std::vector<ElementId> rep_members;
    std::vector<ElementId> rep_gens;
    std::vector<std::vector<ElementId>> conjugates;
  };
  std::vector<Pending> found;

  auto add_class = [&](std::vector<ElementId> members, std::vector<ElementId> gens) {
    std::set<std::vector<ElementId>> conj;
    for (ElementId t = 0; t < G.order(); ++t) {
      std::vector<ElementId> c;
      c.reserve(members.size());
      for (auto m : members) c.push_back(G.conjugate(m, t));
      std::sort(c.begin(), c.end());
      conj.insert(std::move(c));
    }
    Pending p;
    p.conjugates.assign(conj.begin(), conj.end());
    for (const auto& c : p.conjugates) seen.insert(c);
    p.rep_members = std::move(members);
    p.rep_gens = std::move(gens);
    found.push_back(std::move(p));
  };

  add_class({G.identity()}, {});
  for (auto x : cyclic_gens) {
    ElementId gen[1] = {x};
    auto members = closure(G, gen);
    if (!seen.contains(members)) add_class(std::move(members), {x});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<char> in(G.order(), 0);
    for (auto m : found[i].rep_members) in[m] = 1;
    for (auto x : cyclic_gens) {
      if (in[x]) continue;
      std::vector<ElementId> gens = found[i].rep_gens;
      gens.push_back(x);
      auto members = closure(G, gens);
      if (!seen.contains(members)) add_class(std::move(members), std::move(gens));
    }
  }

  std::vector<SubgroupClass> classes;
  classes.reserve(found.size());
  for (auto& p : found) {
    SubgroupClass c;
    c.conjugates = std::move(p.conjugates);
    // The generators found belong to rep_members, which may not be the
    // smallest conjugate; only keep them when it is.
    if (c.conjugates.front() == p.rep_members)
      c.representative = Subgroup(g, c.conjugates.front(), std::move(p.rep_gens));
    else
      c.representative = Subgroup(g, c.conjugates.front());
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.conjugates.front() < b.conjugates.front();
  });
  return SubgroupLattice(g, std::move(classes));
}

/// A Sylow p-subgroup (full p-part of |G|); trivial when p does not divide |G|.
inline Subgroup sylow_subgroup(const SubgroupLattice& lattice, std::uint64_t p) {
  if (!is_prime(p)) throw Error("sylow_subgroup: " + std::to_string(p) + " is not prime");
  std::uint64_t target = p_part(lattice.parent()->order(), p);
  for (const auto& c : lattice.classes())
    if (c.order() == target) return c.representative;
  throw Error("no Sylow subgroup found; lattice is incomplete");
}

/// A subgroup whose order is the primes-part of |G|, if one exists.
inline std::optional<Subgroup> hall_subgroup(const SubgroupLattice& lattice, const std::set<std::uint64_t>& primes) {
  std::uint64_t target = pi_part(lattice.parent()->order(), primes);
  for (const auto& c : lattice.classes())
    if (c.order() == target) return c.representative;
  return std::nullopt;
}

/// Largest normal p-subgroup, as the intersection of all Sylow p-subgroups.
inline Subgroup largest_normal_p_subgroup(const SubgroupLattice& lattice, std::uint64_t p) {
  Subgroup syl = sylow_subgroup(lattice, p);
  auto idx = lattice.find_class(syl.members());
  const auto& cls = lattice.classes()[*idx];
  std::vector<ElementId> cur = cls.conjugates.front();
  for (const auto& c : cls.conjugates) {
    std::vector<ElementId> next;
    std::set_intersection(cur.begin(), cur.end(), c.begin(), c.end(), std::back_inserter(next));
    cur = std::move(next);
  }
  return Subgroup(lattice.parent(), std::move(cur));
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
inline std::vector<Subgroup> minimal_normal_subgroups(const SubgroupLattice& lattice) {
  auto normals = lattice.normal_subgroups();
  std::vector<Subgroup> out;
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : normals)
      if (!m.is_trivial() && m.order() < n.order() && m.is_subset_of(n)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(n);
  }
  return out;
}

/// 1 = N_0 < N_1 < ... < N_k = G with each N_{i+1} minimal normal above N_i.
inline std::vector<Subgroup> chief_series(const SubgroupLattice& lattice) {
  auto normals = lattice.normal_subgroups();  // sorted by order
  std::vector<Subgroup> series{normals.front()};
  while (!series.back().is_whole()) {
    const Subgroup& cur = series.back();
    for (const auto& n : normals)
      if (n.order() > cur.order() && cur.is_subset_of(n)) {
        series.push_back(n);
        break;
      }
  }
  return series;
}

}  // namespace monochar
