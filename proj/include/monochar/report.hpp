// Human-readable and JSON renderings of character tables, group
// reports and verification results. Output is deterministic: timings
// appear only on request.
#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "monochar/verify.hpp"

namespace monochar {

using Json = nlohmann::ordered_json;

inline Json set_json(const std::set<std::int64_t>& s) { return Json(std::vector<std::int64_t>(s.begin(), s.end())); }

inline Json table_json(const CharacterTable& t) {
  const auto& G = *t.group();
  Json classes = Json::array();
  for (ClassId c = 0; c < G.num_classes(); ++c)
    classes.push_back({{"representative", G.element(G.class_rep(c)).to_cycles()},
                       {"size", G.class_size(c)},
                       {"element_order", G.element_order(G.class_rep(c))}});
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json vals = Json::array();
    for (const auto& v : t.lifted()[i]) vals.push_back(v.to_string());
    rows.push_back({{"degree", t[i].degree()}, {"values", vals}});
  }
  return {{"order", G.order()}, {"prime", t.prime()}, {"classes", classes}, {"irreducibles", rows}};
}

inline void write_table_text(std::ostream& os, const CharacterTable& t) {
  const auto& G = *t.group();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"", "|K|"};
  std::vector<std::string> ord{"", "ord"};
  for (ClassId c = 0; c < G.num_classes(); ++c) {
    head.push_back(std::to_string(G.class_size(c)));
    ord.push_back(std::to_string(G.element_order(G.class_rep(c))));
  }
  cells.push_back(head);
  cells.push_back(ord);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1), ""};
    for (const auto& v : t.lifted()[i]) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
  os << "order " << G.order() << ", " << G.num_classes() << " classes\n";
  for (const auto& r : cells) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << r[j];
    os << "\n";
  }
  os << "z<n> is exp(2 pi i / n); k*z means multiplicity k\n";
}

inline Json profile_json(const StructureProfile& s) {
  Json j;
  j["solvable"] = s.solvable;
  j["derived_length"] = s.derived_length ? Json(*s.derived_length) : Json(nullptr);
  j["fitting_height"] = s.fitting_height ? Json(*s.fitting_height) : Json(nullptr);
  j["nilpotent"] = s.nilpotent;
  j["supersolvable"] = s.supersolvable;
  j["metabelian"] = s.metabelian;
  j["primes"] = s.primes;
  Json ns = Json::object(), nc = Json::object();
  for (const auto& [p, v] : s.normal_sylow) ns[std::to_string(p)] = v;
  for (const auto& [p, v] : s.normal_p_complement) nc[std::to_string(p)] = v;
  j["normal_sylow"] = ns;
  j["normal_p_complement"] = nc;
  return j;
}

inline Json group_report_json(GroupContext& c) {
  const auto& r = c.report();
  Json chars = Json::array();
  for (const auto& ch : r.characters) {
    Json x;
    x["index"] = ch.index;
    x["degree"] = ch.degree;
    x["monomial"] = ch.witness.has_value();
    if (ch.witness) x["source_order"] = ch.witness->subgroup.order();
    x["primitive"] = ch.primitive;
    x["super_monomial"] = ch.super_monomial.holds;
    if (ch.super_monomial.counterexample) x["counterexample_order"] = ch.super_monomial.counterexample->subgroup.order();
    chars.push_back(std::move(x));
  }
  Json j;
  j["group"] = c.entry().name;
  j["order"] = c.group()->order();
  if (!c.construction().note.empty()) j["note"] = c.construction().note;
  j["cd"] = set_json(r.cd);
  j["mcd"] = set_json(r.mcd);
  j["m_group"] = r.m_group;
  j["super_m_group"] = r.super_m_group;
  auto star = hypothesis_star(r);
  j["degree_pattern"] = star ? Json({{"m", star->first}, {"p", star->second}}) : Json(nullptr);
  j["characters"] = chars;
  j["structure"] = profile_json(c.profile());
  return j;
}

inline void write_group_report_text(std::ostream& os, GroupContext& c) {
  const auto& r = c.report();
  const auto& s = c.profile();
  os << c.entry().name << "  order " << c.group()->order() << "\n";
  if (!c.construction().note.empty()) os << "  " << c.construction().note << "\n";
  os << "  cd=" << detail::set_string(r.cd) << " mcd=" << detail::set_string(r.mcd) << "\n";
  os << "  M-group: " << (r.m_group ? "yes" : "no") << "  super M-group: " << (r.super_m_group ? "yes" : "no") << "\n";
  if (auto star = hypothesis_star(r)) os << "  degree pattern: m=" << star->first << " p=" << star->second << "\n";
  os << "  solvable: " << (s.solvable ? "yes" : "no");
  if (s.derived_length) os << "  derived length " << *s.derived_length;
  if (s.fitting_height) os << "  fitting height " << *s.fitting_height;
  os << "\n  nilpotent: " << (s.nilpotent ? "yes" : "no") << "  supersolvable: " << (s.supersolvable ? "yes" : "no")
     << "  metabelian: " << (s.metabelian ? "yes" : "no") << "\n";
  for (auto p : s.primes)
    os << "  p=" << p << ": normal Sylow " << (s.normal_sylow.at(p) ? "yes" : "no") << ", normal p-complement "
       << (s.normal_p_complement.at(p) ? "yes" : "no") << "\n";
  for (const auto& ch : r.characters) {
    os << "  X." << ch.index + 1 << " degree " << ch.degree;
    if (ch.witness)
      os << "  monomial from order " << ch.witness->subgroup.order();
    else
      os << "  not monomial";
    if (ch.degree > 1 && ch.primitive) os << ", primitive";
    os << (ch.super_monomial.holds ? ", super-monomial" : ", not super-monomial") << "\n";
  }
}

inline Json verification_json(const VerificationReport& rep, bool timing) {
  Json theorems = Json::array();
  for (const auto& t : rep.theorems) {
    Json outs = Json::array();
    for (const auto& o : t.outcomes) {
      Json x{{"group", o.group}, {"order", o.order}, {"status", to_string(o.status)}, {"detail", o.detail}};
      if (o.status == Status::fail) {
        x["witness"] = {{"group", o.group},
                        {"character", o.witness.character ? Json(*o.witness.character) : Json(nullptr)},
                        {"subgroup", o.witness.subgroup}};
      }
      if (timing) x["seconds"] = o.seconds;
      outs.push_back(std::move(x));
    }
    Json tj{{"id", t.id},
            {"title", t.title},
            {"pass", t.count(Status::pass)},
            {"fail", t.count(Status::fail)},
            {"not_applicable", t.count(Status::not_applicable)},
            {"applicable_somewhere", t.count(Status::pass) + t.count(Status::fail) > 0}};
    if (timing) tj["seconds"] = t.seconds;
    tj["outcomes"] = outs;
    theorems.push_back(std::move(tj));
  }
  Json j{{"theorems", theorems}, {"skipped", rep.skipped}, {"any_fail", rep.any_fail()}};
  if (timing) j["seconds"] = rep.seconds;
  return j;
}

inline void write_verification_text(std::ostream& os, const VerificationReport& rep, bool timing, bool verbose) {
  for (const auto& t : rep.theorems) {
    os << std::left << std::setw(7) << t.id << std::right << " pass " << std::setw(4) << t.count(Status::pass)
       << "  fail " << std::setw(3) << t.count(Status::fail) << "  n/a " << std::setw(4)
       << t.count(Status::not_applicable);
    if (timing) os << "  " << std::fixed << std::setprecision(2) << t.seconds << "s";
    os << "  " << t.title << "\n";
    if (t.count(Status::pass) + t.count(Status::fail) == 0) os << "        not applicable on any group in the catalog\n";
    for (const auto& o : t.outcomes) {
      if (o.status == Status::fail || (verbose && o.status == Status::pass)) {
        os << "        " << to_string(o.status) << " " << o.group << ": " << o.detail;
        if (o.status == Status::fail) {
          if (o.witness.character) os << " [character " << *o.witness.character << "]";
          if (!o.witness.subgroup.empty()) os << " [subgroup of order " << o.witness.subgroup.size() << "]";
        }
        os << "\n";
      }
    }
  }
  for (const auto& s : rep.skipped) os << "skipped " << s << "\n";
  if (timing) os << "total " << std::fixed << std::setprecision(2) << rep.seconds << "s\n";
  os << (rep.any_fail() ? "RESULT: FAIL" : "RESULT: PASS") << "\n";
}

}  // namespace monochar
