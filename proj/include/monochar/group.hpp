// Fully enumerated permutation groups with a Cayley table, conjugacy
// classes and power maps; subgroups, commutators, series and quotients.
//
// Elements are numbered in lexicographic order of their image arrays, so the
// identity is always element 0 and a subgroup's own numbering agrees with the
// order of its member ids in the parent.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "monochar/modular.hpp"
#include "monochar/perm.hpp"

namespace monochar {

using ElementId = std::uint32_t;
using ClassId = std::uint32_t;

/// Content hash of a group's element list; equal fingerprints mean the same
/// set of permutations, hence identical ids, classes and tables.
struct Fingerprint {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

namespace detail {

class FingerprintBuilder {
 public:
  void add(const Perm& e) {
    for (auto p : e.images()) {
      a_ = (a_ ^ p) * 1099511628211ull;
      b_ ^= p + 0x9e3779b97f4a7c15ull + (b_ << 6) + (b_ >> 2);
    }
  }
  Fingerprint finish(std::size_t order, std::size_t degree) const {
    return Fingerprint{a_ ^ order, b_ ^ (static_cast<std::uint64_t>(degree) << 32)};
  }

 private:
  std::uint64_t a_ = 1469598103934665603ull;
  std::uint64_t b_ = 0x9e3779b97f4a7c15ull;
};

}  // namespace detail

struct BuildOptions {
  std::size_t order_cap = 10000;
  /// Inherited field for groups derived from another group.
  std::optional<Field> field;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Perm& element(ElementId id) const { return elements_[id]; }
  std::span<const Perm> elements() const { return elements_; }
  std::span<const ElementId> generators() const { return generators_; }

  ElementId identity() const { return 0; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[static_cast<std::size_t>(a) * order() + b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, std::int64_t k) const {
    std::int64_t o = element_order(a);
    k %= o;
    if (k < 0) k += o;
    ElementId r = identity(), base = a;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }
  /// g x g^-1
  ElementId conjugate(ElementId x, ElementId g) const { return mul(mul(g, x), inv(g)); }
  /// a b a^-1 b^-1
  ElementId commutator(ElementId a, ElementId b) const { return mul(mul(mul(a, b), inv(a)), inv(b)); }
  std::uint32_t element_order(ElementId a) const { return orders_[a]; }
  std::uint32_t exponent() const { return exponent_; }
  bool is_abelian() const { return classes_.size() == order(); }

  std::size_t num_classes() const { return classes_.size(); }
  ClassId class_of(ElementId a) const { return class_of_[a]; }
  std::span<const ElementId> class_members(ClassId c) const { return classes_[c]; }
  ElementId class_rep(ClassId c) const { return classes_[c].front(); }
  std::size_t class_size(ClassId c) const { return classes_[c].size(); }
  std::size_t centralizer_order(ClassId c) const { return order() / classes_[c].size(); }
  ClassId inverse_class(ClassId c) const { return inverse_class_[c]; }
  /// Class of g^k for g in class c.
  ClassId power_class(ClassId c, std::int64_t k) const { return class_of(pow(class_rep(c), k)); }

  const Field& field() const { return field_; }
  std::uint64_t cayley_hash() const { return cayley_hash_; }
  const Fingerprint& fingerprint() const { return fingerprint_; }

  /// For subgroup views: the group this was carved out of, and the parent id
  /// of each element. Null parent for groups built from generators.
  const GroupPtr& parent() const { return parent_; }
  std::span<const ElementId> parent_ids() const { return parent_ids_; }

  /// Closure of the generators; element ids are lexicographic by images.
  static GroupPtr build(const std::vector<Perm>& gens, const BuildOptions& options = {}) {
    if (gens.empty()) throw Error("at least one generator is required");
    const std::size_t degree = gens.front().degree();
    if (degree == 0) throw Error("degree must be at least 1");
    for (const auto& g : gens)
      if (g.degree() != degree) throw Error("generators have different degrees");
    if (options.order_cap > 65535) throw Error("order cap above 65535 is not supported");

    std::unordered_map<Perm, std::uint32_t, PermHash> index;
    std::vector<Perm> elems{Perm::identity(degree)};
    std::vector<std::uint32_t> tree_parent{0}, tree_gen{0};
    index.emplace(elems[0], 0);
    std::vector<std::vector<std::uint32_t>> right(gens.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Perm y = elems[i] * gens[s];
        auto [it, inserted] = index.try_emplace(std::move(y), static_cast<std::uint32_t>(elems.size()));
        if (inserted) {
          if (elems.size() >= options.order_cap)
            throw Error("group order exceeds the configured cap of " + std::to_string(options.order_cap));
          elems.push_back(it->first);
          tree_parent.push_back(static_cast<std::uint32_t>(i));
          tree_gen.push_back(static_cast<std::uint32_t>(s));
        }
        right[s].push_back(it->second);
      }
    }
    index.clear();

    const std::size_t n = elems.size();
    std::vector<std::uint32_t> by_lex(n);
    std::iota(by_lex.begin(), by_lex.end(), 0u);
    std::sort(by_lex.begin(), by_lex.end(), [&](auto x, auto y) { return elems[x] < elems[y]; });
    std::vector<std::uint32_t> new_id(n);
    for (std::size_t i = 0; i < n; ++i) new_id[by_lex[i]] = static_cast<std::uint32_t>(i);

    auto g = std::shared_ptr<Group>(new Group());
    g->degree_ = degree;
    g->elements_.reserve(n);
    for (auto old : by_lex) g->elements_.push_back(std::move(elems[old]));
    g->mul_.assign(n * n, 0);
    // a * b = (a * parent(b)) * s, filled in discovery order of b.
    for (std::size_t a_old = 0; a_old < n; ++a_old) {
      std::vector<std::uint32_t> row(n);  // old ids
      row[0] = static_cast<std::uint32_t>(a_old);
      for (std::size_t b = 1; b < n; ++b) row[b] = right[tree_gen[b]][row[tree_parent[b]]];
      const std::size_t a = new_id[a_old];
      for (std::size_t b = 0; b < n; ++b) g->mul_[a * n + new_id[b]] = static_cast<std::uint16_t>(new_id[row[b]]);
    }
    for (const auto& s : gens) {
      auto it = std::lower_bound(g->elements_.begin(), g->elements_.end(), s);
      g->generators_.push_back(static_cast<ElementId>(it - g->elements_.begin()));
    }
    g->finish(options.field);
    return g;
  }

  /// The subgroup on sorted parent ids `members` as a group in its own right.
  static GroupPtr view_of(const GroupPtr& parent, std::vector<ElementId> members) {
    const std::size_t n = members.size();
    std::vector<std::int32_t> pos(parent->order(), -1);
    for (std::size_t i = 0; i < n; ++i) pos[members[i]] = static_cast<std::int32_t>(i);
    auto g = std::shared_ptr<Group>(new Group());
    g->degree_ = parent->degree();
    g->elements_.reserve(n);
    for (auto m : members) g->elements_.push_back(parent->element(m));
    g->mul_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::int32_t k = pos[parent->mul(members[i], members[j])];
        if (k < 0) throw Error("member set is not closed under multiplication");
        g->mul_[i * n + j] = static_cast<std::uint16_t>(k);
      }
    g->parent_ = parent;
    g->parent_ids_ = std::move(members);
    g->generators_ = g->greedy_generators();
    g->finish(parent->field());
    return g;
  }

 private:
  Group() = default;

  std::vector<ElementId> greedy_generators() const {
    std::vector<ElementId> gens;
    std::vector<char> in(order(), 0);
    in[0] = 1;
    std::vector<ElementId> members{0};
    for (ElementId x = 0; x < order(); ++x) {
      if (in[x]) continue;
      gens.push_back(x);
      // Grow the closure with the new generator.
      std::vector<ElementId> queue(members.begin(), members.end());
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto s : gens) {
          ElementId y = mul(queue[i], s);
          if (!in[y]) {
            in[y] = 1;
            queue.push_back(y);
          }
        }
      members = std::move(queue);
    }
    return gens;
  }

  void finish(const std::optional<Field>& field) {
    const std::size_t n = order();
    orders_.assign(n, 0);
    inverse_.assign(n, 0);
    exponent_ = 1;
    for (ElementId a = 0; a < n; ++a) {
      ElementId x = a, prev = 0;
      std::uint32_t k = 1;
      while (x != 0) {
        prev = x;
        x = mul(x, a);
        ++k;
      }
      // Loop exits with a^k = e; prev = a^(k-1) = a^-1.
      orders_[a] = (a == 0) ? 1 : k;
      inverse_[a] = prev;
      exponent_ = std::lcm(exponent_, orders_[a]);
    }

    class_of_.assign(n, static_cast<ClassId>(-1));
    classes_.clear();
    for (ElementId x = 0; x < n; ++x) {
      if (class_of_[x] != static_cast<ClassId>(-1)) continue;
      ClassId c = static_cast<ClassId>(classes_.size());
      std::vector<ElementId> orbit{x};
      class_of_[x] = c;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (auto g : generators_) {
          ElementId y = conjugate(orbit[i], g);
          if (class_of_[y] == static_cast<ClassId>(-1)) {
            class_of_[y] = c;
            orbit.push_back(y);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      classes_.push_back(std::move(orbit));
    }
    inverse_class_.resize(classes_.size());
    for (ClassId c = 0; c < classes_.size(); ++c) inverse_class_[c] = class_of(inv(class_rep(c)));

    field_ = field ? *field : Field::for_group(n, exponent_);
    if (field_.exponent() % exponent_ != 0) throw Error("inherited field does not contain the group exponent");

    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ n) * 1099511628211ull;
    for (auto v : mul_) h = (h ^ v) * 1099511628211ull;
    cayley_hash_ = h;

    detail::FingerprintBuilder fb;
    for (const auto& e : elements_) fb.add(e);
    fingerprint_ = fb.finish(n, degree_);
  }

  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<std::uint16_t> mul_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
  std::vector<std::uint32_t> orders_;
  std::uint32_t exponent_ = 1;
  std::vector<ClassId> class_of_;
  std::vector<std::vector<ElementId>> classes_;
  std::vector<ClassId> inverse_class_;
  Field field_;
  std::uint64_t cayley_hash_ = 0;
  Fingerprint fingerprint_;
  GroupPtr parent_;
  std::vector<ElementId> parent_ids_;
};

inline GroupPtr build_group(const std::vector<Perm>& generators, const BuildOptions& options = {}) {
  return Group::build(generators, options);
}

/// Two handles describe the same permutation group.
inline bool same_group(const Group& a, const Group& b) {
  return &a == &b || (a.order() == b.order() && a.degree() == b.degree() && a.fingerprint() == b.fingerprint());
}

/// Sorted element ids of the subgroup generated by gens.
inline std::vector<ElementId> closure(const Group& g, std::span<const ElementId> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<ElementId> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : gens) {
      ElementId y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

/**
 * A subgroup of a parent group, held as its sorted member ids. Copies share
 * lazily computed data (generating set and the group view).
 */
class Subgroup {
 public:
  Subgroup() = default;

  /// Trusted constructor: members must be a sorted subgroup of parent.
  Subgroup(GroupPtr parent, std::vector<ElementId> members, std::vector<ElementId> gens = {})
      : parent_(std::move(parent)), members_(std::move(members)), cache_(std::make_shared<Cache>()) {
    in_.assign(parent_->order(), 0);
    for (auto m : members_) in_[m] = 1;
    if (!gens.empty()) {
      cache_->gens = std::move(gens);
      std::call_once(cache_->gens_once, [] {});
    }
    normal_ = true;
    for (auto g : parent_->generators()) {
      for (auto m : members_)
        if (!in_[parent_->conjugate(m, g)]) {
          normal_ = false;
          break;
        }
      if (!normal_) break;
    }
  }

  /// Validating constructor for externally supplied member sets.
  static Subgroup from_members(GroupPtr parent, std::vector<ElementId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto m : members)
      if (m >= parent->order()) throw Error("element id out of range");
    if (closure(*parent, members) != members) throw Error("member set is not a subgroup");
    return Subgroup(std::move(parent), std::move(members));
  }

  static Subgroup generated_by(GroupPtr parent, std::span<const ElementId> gens) {
    auto members = closure(*parent, gens);
    std::vector<ElementId> g(gens.begin(), gens.end());
    g.erase(std::remove(g.begin(), g.end(), parent->identity()), g.end());
    return Subgroup(std::move(parent), std::move(members), std::move(g));
  }

  static Subgroup whole(GroupPtr parent) {
    std::vector<ElementId> all(parent->order());
    std::iota(all.begin(), all.end(), 0u);
    std::vector<ElementId> gens(parent->generators().begin(), parent->generators().end());
    return Subgroup(std::move(parent), std::move(all), std::move(gens));
  }

  static Subgroup trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

  const GroupPtr& parent() const { return parent_; }
  std::span<const ElementId> members() const { return members_; }
  const std::vector<ElementId>& member_vector() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(ElementId x) const { return in_[x] != 0; }
  bool is_normal() const { return normal_; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  bool is_subset_of(const Subgroup& other) const {
    if (order() > other.order()) return false;
    for (auto m : members_)
      if (!other.contains(m)) return false;
    return true;
  }

  /// A small generating set (empty for the trivial subgroup).
  std::span<const ElementId> generators() const {
    std::call_once(cache_->gens_once, [this] {
      std::vector<char> in(parent_->order(), 0);
      in[0] = 1;
      std::vector<ElementId> cur{0};
      for (auto x : members_) {
        if (in[x]) continue;
        cache_->gens.push_back(x);
        for (std::size_t i = 0; i < cur.size(); ++i)
          for (auto s : cache_->gens) {
            ElementId y = parent_->mul(cur[i], s);
            if (!in[y]) {
              in[y] = 1;
              cur.push_back(y);
            }
          }
      }
    });
    return cache_->gens;
  }

  /// This subgroup as a group; its element i is parent element members()[i].
  const GroupPtr& view() const {
    std::call_once(cache_->view_once, [this] { cache_->view = Group::view_of(parent_, members_); });
    return cache_->view;
  }

  /// Equals view()->fingerprint() without building the view.
  const Fingerprint& fingerprint() const {
    std::call_once(cache_->fp_once, [this] {
      detail::FingerprintBuilder fb;
      for (auto m : members_) fb.add(parent_->element(m));
      cache_->fp = fb.finish(members_.size(), parent_->degree());
    });
    return cache_->fp;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.get() == b.parent_.get() && a.members_ == b.members_;
  }

 private:
  struct Cache {
    std::once_flag gens_once;
    std::once_flag view_once;
    std::once_flag fp_once;
    std::vector<ElementId> gens;
    Fingerprint fp;
    GroupPtr view;
  };

  GroupPtr parent_;
  std::vector<ElementId> members_;
  std::vector<char> in_;
  bool normal_ = false;
  std::shared_ptr<Cache> cache_;
};

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<ElementId> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup::generated_by(a.parent(), gens);
}

/// g H g^-1
inline Subgroup conjugate(const Subgroup& h, ElementId g) {
  const auto& G = *h.parent();
  std::vector<ElementId> out;
  out.reserve(h.order());
  for (auto m : h.members()) out.push_back(G.conjugate(m, g));
  std::sort(out.begin(), out.end());
  return Subgroup(h.parent(), std::move(out));
}

inline Subgroup normalizer(const Subgroup& h) {
  const auto& G = *h.parent();
  std::vector<ElementId> out;
  for (ElementId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (auto m : h.generators())
      if (!h.contains(G.conjugate(m, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup(h.parent(), std::move(out));
}

/// Smallest subgroup containing seeds and normalized by every element of conjugators.
inline Subgroup normal_closure(const GroupPtr& parent, std::vector<ElementId> seeds,
                               std::span<const ElementId> conjugators) {
  const auto& G = *parent;
  std::vector<ElementId> gens;
  for (auto s : seeds)
    if (s != G.identity()) gens.push_back(s);
  for (;;) {
    auto members = closure(G, gens);
    std::vector<char> in(G.order(), 0);
    for (auto m : members) in[m] = 1;
    bool grew = false;
    for (std::size_t i = 0; i < gens.size() && !grew; ++i)
      for (auto t : conjugators) {
        ElementId y = G.conjugate(gens[i], t);
        if (!in[y]) {
          gens.push_back(y);
          grew = true;
          break;
        }
      }
    if (!grew) return Subgroup(parent, std::move(members), std::move(gens));
  }
}

/// [A, B], generated by all a b a^-1 b^-1.
inline Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.parent().get() != b.parent().get()) throw Error("subgroups belong to different groups");
  const auto& G = *a.parent();
  std::vector<ElementId> seeds;
  for (auto x : a.generators())
    for (auto y : b.generators()) seeds.push_back(G.commutator(x, y));
  // [A,B] is the normal closure in <A,B> of the generator commutators.
  std::vector<ElementId> conj(a.generators().begin(), a.generators().end());
  conj.insert(conj.end(), b.generators().begin(), b.generators().end());
  return normal_closure(a.parent(), std::move(seeds), conj);
}

inline Subgroup derived_subgroup(const Subgroup& h) { return commutator_subgroup(h, h); }

struct DerivedSeries {
  std::vector<Subgroup> terms;  ///< top, top', top'', ... until stable
  bool solvable = false;
  /// Number of strict steps to the trivial subgroup; empty when not solvable.
  std::optional<std::size_t> derived_length;
};

inline DerivedSeries derived_series(const Subgroup& top) {
  DerivedSeries s;
  s.terms.push_back(top);
  for (;;) {
    Subgroup next = derived_subgroup(s.terms.back());
    if (next.order() == s.terms.back().order()) break;
    s.terms.push_back(std::move(next));
  }
  s.solvable = s.terms.back().is_trivial();
  if (s.solvable) s.derived_length = s.terms.size() - 1;
  return s;
}

inline DerivedSeries derived_series(const GroupPtr& g) { return derived_series(Subgroup::whole(g)); }

inline Subgroup center(const GroupPtr& g) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g->order(); ++x) {
    bool central = true;
    for (auto s : g->generators())
      if (g->mul(x, s) != g->mul(s, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

/// A subgroup of view->parent() that lies inside view, renumbered in view ids.
inline Subgroup into_view(const GroupPtr& view, const Subgroup& s) {
  auto ids = view->parent_ids();
  std::vector<ElementId> out;
  out.reserve(s.order());
  for (auto m : s.members()) {
    auto it = std::lower_bound(ids.begin(), ids.end(), m);
    if (it == ids.end() || *it != m) throw Error("subgroup is not contained in the view");
    out.push_back(static_cast<ElementId>(it - ids.begin()));
  }
  return Subgroup(view, std::move(out));
}

/// A subgroup of a view, renumbered as a subgroup of the view's parent.
inline Subgroup out_of_view(const Subgroup& s) {
  const auto& view = s.parent();
  if (!view->parent()) throw Error("group is not a subgroup view");
  std::vector<ElementId> out;
  out.reserve(s.order());
  for (auto m : s.members()) out.push_back(view->parent_ids()[m]);
  return Subgroup(view->parent(), std::move(out));
}

/// G/N realized as the action of G on the left cosets of N.
struct Quotient {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr group;
  std::vector<ElementId> projection;  ///< source id -> quotient id

  ElementId project(ElementId g) const { return projection[g]; }

  Subgroup image(const Subgroup& h) const {
    std::vector<ElementId> out;
    for (auto m : h.members()) out.push_back(projection[m]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Subgroup(group, std::move(out));
  }

  Subgroup preimage(const Subgroup& hbar) const {
    std::vector<ElementId> out;
    for (ElementId g = 0; g < source->order(); ++g)
      if (hbar.contains(projection[g])) out.push_back(g);
    return Subgroup(source, std::move(out));
  }
};

inline Quotient quotient_group(const Subgroup& n) {
  if (!n.is_normal()) throw Error("quotient requires a normal subgroup");
  const auto& G = *n.parent();
  // Coset of g: the left coset gN, labelled by first appearance in id order.
  std::vector<std::uint32_t> coset(G.order(), static_cast<std::uint32_t>(-1));
  std::vector<ElementId> reps;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (coset[g] != static_cast<std::uint32_t>(-1)) continue;
    auto label = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    for (auto m : n.members()) coset[G.mul(g, m)] = label;
  }
  const std::size_t k = reps.size();
  auto action = [&](ElementId x) {
    std::vector<Point> img(k);
    for (std::size_t c = 0; c < k; ++c) img[c] = coset[G.mul(x, reps[c])];
    return Perm(std::move(img));
  };
  // Left multiplication is a left action; invert to get the right action
  // matching Perm's left-to-right product.
  std::vector<Perm> gens;
  for (auto s : G.generators()) gens.push_back(action(G.inv(s)));
  BuildOptions opts;
  opts.order_cap = 65535;
  opts.field = G.field();
  Quotient q;
  q.source = n.parent();
  q.kernel = n;
  q.group = Group::build(gens, opts);
  std::vector<ElementId> by_coset(k);
  for (std::size_t c = 0; c < k; ++c) {
    Perm p = action(G.inv(reps[c]));
    auto els = q.group->elements();
    auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || *it != p) throw Error("coset action image not found");
    by_coset[c] = static_cast<ElementId>(it - els.begin());
  }
  q.projection.resize(G.order());
  for (ElementId g = 0; g < G.order(); ++g) q.projection[g] = by_coset[coset[g]];
  return q;
}

}  // namespace monochar
