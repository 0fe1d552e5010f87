// Brute-force reference implementations used only by the tests. They avoid
// the library's fast paths: closures work on Perm values, induction uses the
// defining sum over all of G, and linear characters come from enumerating
// generator images.
#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "monochar/character.hpp"
#include "monochar/group.hpp"

namespace oracle {

using namespace monochar;

/// Sorted ids of the subgroup generated by gens, closing on Perm products.
inline std::vector<ElementId> perm_closure(const Group& g, const std::vector<ElementId>& gens) {
  std::set<Perm> s{Perm::identity(g.degree())};
  std::vector<Perm> frontier{Perm::identity(g.degree())};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier)
      for (auto x : gens) {
        Perm y = a * g.element(x);
        if (s.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  std::vector<ElementId> out;
  auto els = g.elements();
  for (const auto& p : s) out.push_back(static_cast<ElementId>(std::lower_bound(els.begin(), els.end(), p) - els.begin()));
  std::sort(out.begin(), out.end());
  return out;
}

/// A small generating set for a subgroup, chosen greedily from its members.
inline std::vector<ElementId> greedy_generators(const Group& g, const std::vector<ElementId>& members) {
  std::vector<ElementId> gens;
  std::set<ElementId> covered{g.identity()};
  for (auto x : members) {
    if (covered.contains(x)) continue;
    gens.push_back(x);
    auto c = perm_closure(g, gens);
    covered = std::set<ElementId>(c.begin(), c.end());
  }
  return gens;
}

/// Every subgroup: all <a, b>, then joins of pairs until nothing new appears.
inline std::set<std::vector<ElementId>> all_subgroups(const Group& g) {
  std::set<std::vector<ElementId>> subs;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = a; b < g.order(); ++b) subs.insert(perm_closure(g, {a, b}));
  std::vector<std::vector<ElementId>> all(subs.begin(), subs.end());
  std::vector<std::vector<ElementId>> gens;
  for (const auto& h : all) gens.push_back(greedy_generators(g, h));
  // Semi-naive: each round joins the newly found subgroups with everything.
  std::size_t fresh_from = 0;
  while (fresh_from < all.size()) {
    const std::size_t fresh_to = all.size();
    for (std::size_t i = fresh_from; i < fresh_to; ++i)
      for (std::size_t j = 0; j < fresh_to; ++j) {
        if (j >= fresh_from && j <= i) continue;
        std::vector<ElementId> both = gens[i];
        both.insert(both.end(), gens[j].begin(), gens[j].end());
        auto h = perm_closure(g, both);
        if (subs.insert(h).second) {
          all.push_back(h);
          gens.push_back(greedy_generators(g, h));
        }
      }
    fresh_from = fresh_to;
  }
  return subs;
}

/// Linear characters of the subgroup on members, as exponent maps x -> k with
/// value z_e^k (e = exponent of the field), enumerated by generator images.
inline std::vector<std::vector<std::uint32_t>> linear_characters(const Group& g, const std::vector<ElementId>& members) {
  const std::uint32_t e = g.field().exponent();
  std::unordered_map<ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
  // Greedy generating set.
  std::vector<ElementId> gens;
  {
    std::vector<ElementId> cur{0};
    std::set<ElementId> in{0};
    for (auto x : members) {
      if (in.contains(x)) continue;
      gens.push_back(x);
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (auto s : gens) {
          ElementId y = g.mul(cur[i], s);
          if (in.insert(y).second) cur.push_back(y);
        }
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> img(gens.size(), 0);
  for (;;) {
    // Extend the assignment along words in the generators; reject clashes.
    std::vector<std::int64_t> val(members.size(), -1);
    val[pos[0]] = 0;
    std::vector<ElementId> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t s = 0; s < gens.size() && ok; ++s) {
        ElementId y = g.mul(queue[i], gens[s]);
        auto v = static_cast<std::int64_t>((val[pos[queue[i]]] + img[s]) % e);
        if (val[pos[y]] < 0) {
          val[pos[y]] = v;
          queue.push_back(y);
        } else if (val[pos[y]] != v) {
          ok = false;
        }
      }
    if (ok)
      for (auto a : members)
        for (auto b : members)
          if ((val[pos[a]] + val[pos[b]]) % e != val[pos[g.mul(a, b)]]) ok = false;
    if (ok) {
      std::vector<std::uint32_t> row(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) row[i] = static_cast<std::uint32_t>(val[i]);
      out.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < img.size() && ++img[k] == e) img[k++] = 0;
    if (k == img.size()) break;
  }
  return out;
}

/// Class function of G induced from values on member elements, by the
/// defining formula (1/|H|) sum_{x in G} theta(x g x^-1).
inline std::vector<Residue> induce_by_definition(const Group& g, const std::vector<ElementId>& members,
                                                 const std::vector<Residue>& theta_on_members) {
  const auto& F = g.field();
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<std::int64_t>(i);
  std::vector<Residue> out(g.num_classes());
  for (ClassId c = 0; c < g.num_classes(); ++c) {
    ElementId rep = g.class_rep(c);
    Residue acc{0};
    for (ElementId x = 0; x < g.order(); ++x) {
      auto p = pos[g.mul(g.mul(x, rep), g.inv(x))];
      if (p >= 0) acc = F.add(acc, theta_on_members[p]);
    }
    out[c] = F.div(acc, F.from_int(static_cast<std::int64_t>(members.size())));
  }
  return out;
}

inline std::vector<Residue> exponent_to_residues(const Field& f, const std::vector<std::uint32_t>& ks) {
  std::vector<Residue> out;
  Residue w{f.root()};
  for (auto k : ks) out.push_back(f.pow(w, k));
  return out;
}

/// Indices of table rows that are induced from some linear character of some
/// subgroup, trying every subgroup (all conjugates) and every linear character.
inline std::set<std::size_t> monomial_rows(const CharacterTable& t) {
  const auto& g = *t.group();
  std::set<std::size_t> out;
  for (const auto& h : all_subgroups(g)) {
    std::size_t index = g.order() / h.size();
    bool wanted = false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (static_cast<std::size_t>(t[i].degree()) == index && !out.contains(i)) wanted = true;
    if (!wanted) continue;
    for (const auto& lam : linear_characters(g, h)) {
      auto induced = induce_by_definition(g, h, exponent_to_residues(g.field(), lam));
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].values() == induced) out.insert(i);
    }
  }
  return out;
}

}  // namespace oracle
