#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "monochar/monochar.hpp"

using namespace monochar;

namespace {

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
  for (const auto& e : cat)
    if (e.name == name) return &e;
  return nullptr;
}

std::filesystem::path fresh_dir(const std::string& tag) {
  auto d = std::filesystem::temp_directory_path() / ("monochar-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST(Catalog, OrderBoundAndFilters) {
  CatalogOptions co;
  co.max_order = 24;
  co.include_named = false;
  auto cat = build_catalog(co);
  ASSERT_FALSE(cat.empty());
  for (const auto& e : cat) EXPECT_LE(e.order, 24u) << e.name;
  ASSERT_NE(find_entry(cat, "sl2_3"), nullptr);
  EXPECT_EQ(find_entry(cat, "sl2_3")->order, 24u);
  EXPECT_TRUE(std::is_sorted(cat.begin(), cat.end(),
                             [](const CatalogEntry& a, const CatalogEntry& b) { return a.order < b.order; }));

  co.odd_only = true;
  for (const auto& e : build_catalog(co)) EXPECT_EQ(e.order % 2, 1u) << e.name;
}

TEST(Catalog, NamedEntriesAndLargeOnes) {
  CatalogOptions co;
  co.max_order = 10;
  auto cat = build_catalog(co);
  ASSERT_NE(find_entry(cat, "heis_sd:5,3"), nullptr);
  EXPECT_EQ(find_entry(cat, "dade_vdw"), nullptr);
  co.include_large = true;
  EXPECT_NE(find_entry(build_catalog(co), "dade_vdw"), nullptr);
  EXPECT_THROW(construct("dade_vdw"), Error);
}

TEST(Catalog, ExpectedFactsHold) {
  CatalogOptions co;
  co.max_order = 60;
  co.include_named = false;
  for (const auto& e : build_catalog(co)) {
    if (e.expected_cd.empty() && e.expected_mcd.empty()) continue;
    GroupContext c(e, {});
    auto err = check_expected(c);
    EXPECT_FALSE(err.has_value()) << e.name << ": " << err.value_or("");
  }
}

TEST(TableCache, RoundTrip) {
  auto dir = fresh_dir("roundtrip");
  TableCache cache(dir);
  Workspace ws;
  auto g = ws.intern(sl2_3_group());
  const auto& t = ws.table(g);
  EXPECT_FALSE(cache.load(g).has_value());
  cache.store(t);
  auto back = cache.load(g);
  ASSERT_TRUE(back.has_value());
  ASSERT_EQ(back->size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_TRUE((*back)[i] == t[i]);
  std::filesystem::remove_all(dir);
}

TEST(TableCache, CorruptFileIsRecomputed) {
  auto dir = fresh_dir("corrupt");
  TableCache cache(dir);
  Workspace plain;
  auto g = plain.intern(symmetric_group(4));
  cache.store(plain.table(g));
  {
    std::ofstream out(cache.path_for(*g), std::ios::trunc);
    out << "not a table\n";
  }
  EXPECT_FALSE(cache.load(g).has_value());

  WorkspaceOptions o;
  o.disk_cache = cache;
  Workspace cached(o);
  auto h = cached.intern(symmetric_group(4));
  const auto& t = cached.table(h);
  EXPECT_EQ(t.size(), 5u);
  EXPECT_TRUE(cache.load(h).has_value());
  std::filesystem::remove_all(dir);
}

TEST(Verify, SmallCatalogPasses) {
  CatalogOptions co;
  co.max_order = 30;
  VerifyOptions vo;
  vo.threads = 2;
  auto rep = verify(build_catalog(co), vo);
  EXPECT_FALSE(rep.any_fail());
  EXPECT_EQ(rep.theorems.size(), theorem_registry().size());
}

TEST(Verify, SingleTheoremSelection) {
  CatalogOptions co;
  co.max_order = 20;
  VerifyOptions vo;
  vo.ids = {"T1.4"};
  auto rep = verify(build_catalog(co), vo);
  ASSERT_EQ(rep.theorems.size(), 1u);
  EXPECT_EQ(rep.theorems[0].id, "T1.4");
  EXPECT_EQ(find_theorem("X9.9"), nullptr);
}

TEST(Verify, OutputIsDeterministic) {
  CatalogOptions co;
  co.max_order = 36;
  VerifyOptions one;
  one.threads = 1;
  VerifyOptions many;
  many.threads = 4;
  auto a = verification_json(verify(build_catalog(co), one), false).dump();
  auto b = verification_json(verify(build_catalog(co), many), false).dump();
  EXPECT_EQ(a, b);
}
