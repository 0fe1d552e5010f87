// Memo of everything derived from a group: character tables, subgroup
// lattices, linear characters and derived series, for the group and
// every subgroup or quotient met while working on it.
//
// Groups are interned by content (fingerprint and field), so two handles on
// the same permutation group share one entry. Character tables are further
// shared between groups with identical Cayley tables and fields, which covers
// conjugate subgroups whose element orderings happen to agree.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "monochar/character.hpp"
#include "monochar/lattice.hpp"
#include "monochar/table_io.hpp"

namespace monochar {

struct WorkspaceOptions {
  std::size_t order_cap = 10000;
  /// Persistent table cache; none keeps everything in memory.
  std::optional<TableCache> disk_cache;
};

class Workspace {
 public:
  explicit Workspace(WorkspaceOptions options = {}) : options_(std::move(options)) {}

  /// The canonical handle for g's content.
  GroupPtr intern(const GroupPtr& g) { return info(g).group; }

  /// Canonical handle for a subgroup regarded as a group.
  GroupPtr view(const Subgroup& h) {
    std::lock_guard lock(mutex_);
    Key k{h.fingerprint(), h.parent()->field().prime(), h.parent()->field().root()};
    if (auto it = groups_.find(k); it != groups_.end()) return it->second->group;
    return info_locked(h.view()).group;
  }

  const CharacterTable& table(const GroupPtr& g) {
    std::lock_guard lock(mutex_);
    auto& gi = info_locked(g);
    if (!gi.table) gi.table = std::make_unique<CharacterTable>(shared_table(gi.group));
    return *gi.table;
  }

  const SubgroupLattice& lattice(const GroupPtr& g) {
    std::lock_guard lock(mutex_);
    auto& gi = info_locked(g);
    if (!gi.lattice) gi.lattice = std::make_unique<SubgroupLattice>(enumerate_subgroups(gi.group, options_.order_cap));
    return *gi.lattice;
  }

  const DerivedSeries& derived(const GroupPtr& g) {
    std::lock_guard lock(mutex_);
    auto& gi = info_locked(g);
    if (!gi.derived) gi.derived = std::make_unique<DerivedSeries>(derived_series(gi.group));
    return *gi.derived;
  }

  /// Linear characters of g, as lifts of the irreducibles of g/g'.
  const std::vector<ClassFunction>& linear_characters(const GroupPtr& g) {
    std::lock_guard lock(mutex_);
    auto& gi = info_locked(g);
    if (!gi.linear) {
      std::vector<ClassFunction> out;
      const auto& ds = derived(gi.group);
      Subgroup d = ds.terms.size() > 1 ? ds.terms[1] : ds.terms[0];
      if (d.is_trivial()) {
        for (const auto& chi : table(gi.group).irreducibles())
          if (chi.degree() == 1) out.push_back(chi);
      } else {
        auto q = quotient_group(d);
        q.group = intern(q.group);
        for (const auto& psi : table(q.group).irreducibles()) out.push_back(lift(psi, q));
      }
      gi.linear = std::make_unique<std::vector<ClassFunction>>(std::move(out));
    }
    return *gi.linear;
  }

  /// Row of chi in the table of its group; throws if chi is not irreducible.
  std::size_t irreducible_index(const ClassFunction& chi) {
    const auto& t = table(chi.group());
    ClassFunction c(t.group(), chi.values());
    if (auto i = t.index_of(c)) return *i;
    throw Error("character is not irreducible");
  }

  /// Generic per-group memo slot for higher layers, keyed by a small tag.
  template <class T>
  T& slot(const GroupPtr& g, int tag) {
    std::lock_guard lock(mutex_);
    auto& gi = info_locked(g);
    auto& p = gi.slots[tag];
    if (!p) p = std::shared_ptr<void>(new T(), [](void* x) { delete static_cast<T*>(x); });
    return *static_cast<T*>(p.get());
  }

  /// Serializes compound operations on the memo.
  std::recursive_mutex& mutex() { return mutex_; }

  std::size_t tables_computed() const { return tables_computed_; }

 private:
  using Key = std::tuple<Fingerprint, std::uint64_t, std::uint64_t>;
  using TableKey = std::tuple<std::uint64_t, std::size_t, std::size_t, std::uint64_t, std::uint64_t>;

  struct GroupInfo {
    GroupPtr group;
    std::unique_ptr<CharacterTable> table;
    std::unique_ptr<SubgroupLattice> lattice;
    std::unique_ptr<DerivedSeries> derived;
    std::unique_ptr<std::vector<ClassFunction>> linear;
    std::map<int, std::shared_ptr<void>> slots;
  };

  struct SharedRows {
    std::vector<std::vector<Residue>> values;
    std::vector<std::vector<CyclotomicValue>> lifted;
    std::vector<std::uint16_t> cayley;  // guards against hash collisions
  };

  GroupInfo& info(const GroupPtr& g) {
    std::lock_guard lock(mutex_);
    return info_locked(g);
  }

  GroupInfo& info_locked(const GroupPtr& g) {
    Key k{g->fingerprint(), g->field().prime(), g->field().root()};
    auto& slot = groups_[k];
    if (!slot) {
      slot = std::make_unique<GroupInfo>();
      slot->group = g;
    }
    return *slot;
  }

  static std::vector<std::uint16_t> cayley_of(const Group& g) {
    std::vector<std::uint16_t> m(g.order() * g.order());
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b) m[a * g.order() + b] = static_cast<std::uint16_t>(g.mul(a, b));
    return m;
  }

  // Only small groups are shared by Cayley table; the table is compared in
  // full, so a hash collision cannot hand out the wrong rows.
  static constexpr std::size_t kShareLimit = 512;

  CharacterTable shared_table(const GroupPtr& g) {
    TableKey k{g->cayley_hash(), g->order(), g->num_classes(), g->field().prime(), g->field().root()};
    const bool share = g->order() <= kShareLimit;
    if (share) {
      auto it = tables_.find(k);
      if (it != tables_.end() && it->second.cayley == cayley_of(*g)) {
        std::vector<ClassFunction> irr;
        for (const auto& v : it->second.values) irr.emplace_back(g, v);
        return CharacterTable(g, std::move(irr), it->second.lifted);
      }
    }
    std::optional<CharacterTable> t;
    if (options_.disk_cache) t = options_.disk_cache->load(g);
    if (!t) {
      t = character_table(g);
      ++tables_computed_;
      if (options_.disk_cache) options_.disk_cache->store(*t);
    }
    if (share) {
      SharedRows rows;
      for (const auto& chi : t->irreducibles()) rows.values.push_back(chi.values());
      rows.lifted = t->lifted();
      rows.cayley = cayley_of(*g);
      tables_[k] = std::move(rows);
    }
    return *t;
  }

  WorkspaceOptions options_;
  std::recursive_mutex mutex_;
  std::map<Key, std::unique_ptr<GroupInfo>> groups_;
  std::map<TableKey, SharedRows> tables_;
  std::size_t tables_computed_ = 0;
};

}  // namespace monochar
