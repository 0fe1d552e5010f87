// Text serialization of character tables and the on-disk table cache.
//
// Format (whitespace separated integers after the header):
//
//     MONOCHAR-TABLE v1
//     <cayley-hash> <order> <prime> <root> <exponent> <nclasses>
//     <rep> <size> <element-order>              one line per class
//     <degree> <o m_0 .. m_{o-1}> ...           one line per irreducible,
//                                               one group per class
//
// A record is accepted only if every field matches the group it is loaded
// for and the decoded table passes the orthogonality check; anything else is
// treated as absent.
#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "monochar/character.hpp"

namespace monochar {

inline void write_table(std::ostream& out, const CharacterTable& t) {
  const auto& G = *t.group();
  out << "MONOCHAR-TABLE v1\n";
  out << G.cayley_hash() << ' ' << G.order() << ' ' << G.field().prime() << ' ' << G.field().root() << ' '
      << G.field().exponent() << ' ' << G.num_classes() << '\n';
  for (ClassId c = 0; c < G.num_classes(); ++c)
    out << G.class_rep(c) << ' ' << G.class_size(c) << ' ' << G.element_order(G.class_rep(c)) << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << t[i].degree();
    for (const auto& cv : t.lifted()[i]) {
      out << ' ' << cv.order;
      for (auto m : cv.mult) out << ' ' << m;
    }
    out << '\n';
  }
}

/// Decodes a record for g; nullopt if it is malformed or belongs elsewhere.
inline std::optional<CharacterTable> read_table(std::istream& in, const GroupPtr& g) {
  const auto& G = *g;
  std::string line;
  if (!std::getline(in, line) || line != "MONOCHAR-TABLE v1") return std::nullopt;
  std::uint64_t hash = 0, order = 0, prime = 0, root = 0, exponent = 0, ncl = 0;
  if (!(in >> hash >> order >> prime >> root >> exponent >> ncl)) return std::nullopt;
  if (hash != G.cayley_hash() || order != G.order() || prime != G.field().prime() || root != G.field().root() ||
      exponent != G.field().exponent() || ncl != G.num_classes())
    return std::nullopt;
  for (ClassId c = 0; c < ncl; ++c) {
    std::uint64_t rep = 0, size = 0, eo = 0;
    if (!(in >> rep >> size >> eo)) return std::nullopt;
    if (rep != G.class_rep(c) || size != G.class_size(c) || eo != G.element_order(G.class_rep(c))) return std::nullopt;
  }
  std::vector<ClassFunction> irr;
  std::vector<std::vector<CyclotomicValue>> lifted;
  for (std::size_t i = 0; i < ncl; ++i) {
    std::int64_t deg = 0;
    if (!(in >> deg) || deg < 1) return std::nullopt;
    std::vector<CyclotomicValue> row(ncl);
    std::vector<Residue> vals(ncl);
    for (ClassId c = 0; c < ncl; ++c) {
      auto& cv = row[c];
      if (!(in >> cv.order) || cv.order != G.element_order(G.class_rep(c))) return std::nullopt;
      cv.mult.resize(cv.order);
      for (auto& m : cv.mult)
        if (!(in >> m) || m < 0 || m > deg) return std::nullopt;
      if (cv.degree() != deg) return std::nullopt;
      vals[c] = cv.reduce(G.field());
    }
    irr.emplace_back(g, std::move(vals));
    lifted.push_back(std::move(row));
  }
  std::vector<std::vector<Residue>> rows;
  for (const auto& chi : irr) rows.push_back(chi.values());
  try {
    detail::check_orthogonality(G, rows);
  } catch (const Error&) {
    return std::nullopt;
  }
  return CharacterTable(g, std::move(irr), std::move(lifted));
}

/// Directory of table records, one file per (Cayley hash, prime).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// MONOCHAR_CACHE if set, otherwise ./.monochar-cache.
  static TableCache from_environment() {
    const char* env = std::getenv("MONOCHAR_CACHE");
    return TableCache(env && *env ? std::filesystem::path(env) : std::filesystem::path(".monochar-cache"));
  }

  const std::filesystem::path& directory() const { return dir_; }

  std::filesystem::path path_for(const Group& g) const {
    std::ostringstream name;
    name << std::hex << g.cayley_hash() << '-' << std::dec << g.order() << '-' << g.field().prime() << ".tbl";
    return dir_ / name.str();
  }

  std::optional<CharacterTable> load(const GroupPtr& g) const {
    std::ifstream in(path_for(*g));
    if (!in) return std::nullopt;
    return read_table(in, g);
  }

  /// Writes to a temporary file and renames it into place, so readers never
  /// see a partial record. Failures are ignored: the cache is an optimization.
  void store(const CharacterTable& t) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    auto target = path_for(*t.group());
    auto tmp = target;
    static std::atomic<std::uint64_t> counter{0};
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "." +
           std::to_string(counter++);
    {
      std::ofstream out(tmp);
      if (!out) return;
      write_table(out, t);
      if (!out) {
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace monochar
