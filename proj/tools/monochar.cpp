// monochar: character tables, monomiality reports and theorem checks over a
// catalog of finite permutation groups.
//
// Exit status: 0 when every check passes, 1 when any check fails, 2 on bad
// usage or input.

#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "monochar/monochar.hpp"

using namespace monochar;

namespace {

WorkspaceOptions workspace_options(bool use_cache) {
  WorkspaceOptions o;
  if (use_cache) o.disk_cache = TableCache::from_environment();
  return o;
}

CatalogEntry entry_for(const std::string& recipe) {
  CatalogEntry e;
  e.name = recipe;
  return e;
}

/// Value of a scan key for one group, as text for comparison.
std::optional<std::string> scan_value(GroupContext& c, const std::string& key) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  const auto& r = c.report();
  if (key == "order") return std::to_string(c.group()->order());
  if (key == "odd") return b(c.odd());
  if (key == "abelian") return b(c.group()->is_abelian());
  if (key == "mcd_size") return std::to_string(r.mcd.size());
  if (key == "cd_size") return std::to_string(r.cd.size());
  if (key == "cd") return detail::set_string(r.cd);
  if (key == "mcd") return detail::set_string(r.mcd);
  if (key == "squarefree_cd") return b(detail::all_squarefree(r.cd));
  if (key == "m_group") return b(r.m_group);
  if (key == "super_m_group") return b(r.super_m_group);
  if (key == "star") return b(hypothesis_star(r).has_value());
  const auto& s = c.profile();
  if (key == "solvable") return b(s.solvable);
  if (key == "nilpotent") return b(s.nilpotent);
  if (key == "supersolvable") return b(s.supersolvable);
  if (key == "metabelian") return b(s.metabelian);
  if (key == "dl") return s.derived_length ? std::to_string(*s.derived_length) : "none";
  if (key == "fh") return s.fitting_height ? std::to_string(*s.fitting_height) : "none";
  return std::nullopt;
}

const std::vector<std::string> kScanKeys = {"order",  "odd",    "abelian",       "mcd_size", "cd_size",
                                            "cd",     "mcd",    "squarefree_cd", "m_group",  "super_m_group",
                                            "star",   "solvable", "nilpotent",   "supersolvable", "metabelian",
                                            "dl",     "fh"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character-theoretic monomiality toolkit"};
  app.require_subcommand(1);
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Do not read or write the table cache (MONOCHAR_CACHE)");

  std::string group;
  bool json = false;

  auto* irr = app.add_subcommand("irr", "Print the character table in cyclotomic form");
  irr->add_option("group", group, "Group recipe, e.g. cyclic:3, sl2_3, file:path")->required();
  irr->add_flag("--json", json, "Machine-readable output");

  auto* cls = app.add_subcommand("classify", "Monomiality report and structure profile");
  cls->add_option("group", group, "Group recipe")->required();
  cls->add_flag("--json", json, "Machine-readable output");

  std::string theorem = "all";
  CatalogOptions cat;
  bool timing = false, verbose = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* ver = app.add_subcommand("verify", "Run theorem checks over the catalog");
  ver->add_option("theorem", theorem, "Theorem id or 'all'")->required();
  ver->add_option("--max-order", cat.max_order, "Largest order in the generated families")->capture_default_str();
  ver->add_flag("--odd-only", cat.odd_only, "Keep only groups of odd order");
  ver->add_flag("!--no-named", cat.include_named, "Drop the named entries above the bound");
  ver->add_flag("--include-large", cat.include_large, "Add entries beyond desk scale");
  ver->add_flag("--json", json, "Machine-readable output");
  ver->add_flag("--timing", timing, "Include timings (output is then not reproducible byte for byte)");
  ver->add_flag("-v,--verbose", verbose, "List passing groups too");
  ver->add_option("-j,--jobs", jobs, "Worker threads")->capture_default_str();

  std::vector<std::string> where;
  auto* scan = app.add_subcommand("scan", "List catalog groups matching key=value predicates");
  scan->add_option("--max-order", cat.max_order, "Largest order in the generated families")->capture_default_str();
  scan->add_flag("--odd-only", cat.odd_only, "Keep only groups of odd order");
  scan->add_flag("!--no-named", cat.include_named, "Drop the named entries above the bound");
  scan->add_option("--where", where, "Predicates such as mcd_size=2 squarefree_cd=true odd=true");
  scan->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto wopts = workspace_options(!no_cache);
    if (*irr) {
      GroupContext c(entry_for(group), wopts);
      if (json)
        std::cout << table_json(c.table()).dump(2) << "\n";
      else
        write_table_text(std::cout, c.table());
      return 0;
    }
    if (*cls) {
      GroupContext c(entry_for(group), wopts);
      if (json)
        std::cout << group_report_json(c).dump(2) << "\n";
      else
        write_group_report_text(std::cout, c);
      return 0;
    }
    if (*ver) {
      VerifyOptions vo;
      vo.workspace = wopts;
      vo.threads = jobs;
      if (theorem != "all") {
        if (!find_theorem(theorem)) throw UsageError("unknown theorem id '" + theorem + "'");
        vo.ids = {theorem};
      }
      auto rep = verify(build_catalog(cat), vo);
      if (json)
        std::cout << verification_json(rep, timing).dump(2) << "\n";
      else
        write_verification_text(std::cout, rep, timing, verbose);
      return rep.any_fail() ? 1 : 0;
    }
    if (*scan) {
      std::vector<std::pair<std::string, std::string>> preds;
      for (const auto& w : where) {
        auto eq = w.find('=');
        if (eq == std::string::npos) throw UsageError("predicate '" + w + "' is not key=value");
        auto key = w.substr(0, eq);
        if (std::find(kScanKeys.begin(), kScanKeys.end(), key) == kScanKeys.end())
          throw UsageError("unknown scan key '" + key + "'");
        preds.emplace_back(key, w.substr(eq + 1));
      }
      Json hits = Json::array();
      for (const auto& e : build_catalog(cat)) {
        std::unique_ptr<GroupContext> c;
        try {
          c = std::make_unique<GroupContext>(e, wopts);
        } catch (const std::exception&) {
          continue;
        }
        bool ok = true;
        for (const auto& [k, v] : preds)
          if (scan_value(*c, k) != v) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (json)
          hits.push_back({{"group", e.name}, {"order", c->group()->order()}, {"cd", *scan_value(*c, "cd")},
                          {"mcd", *scan_value(*c, "mcd")}});
        else
          std::cout << e.name << "  order " << c->group()->order() << "  cd=" << *scan_value(*c, "cd")
                    << " mcd=" << *scan_value(*c, "mcd") << "\n";
      }
      if (json) std::cout << hits.dump(2) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "monochar: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "monochar: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
