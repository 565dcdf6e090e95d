#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace plesken {

namespace {

const char* kind_name(FactorDescriptor::Kind k) {
  switch (k) {
    case FactorDescriptor::Kind::Abelian:
      return "abelian";
    case FactorDescriptor::Kind::Classical:
      return "classical";
    case FactorDescriptor::Kind::Unidentified:
      return "unidentified";
  }
  return "unidentified";
}

std::string field_name(const Analysis& a) {
  std::string s = "F_" + std::to_string(a.prime);
  if (a.field_degree > 1) s += "^" + std::to_string(a.field_degree);
  return s;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

void write_header(std::ostream& os, const Analysis& a) {
  os << "group " << a.group << ", order " << a.order << ", over " << field_name(a) << "\n";
  os << "dim L = " << a.dim_L << " (formula " << a.dim_formula << ")\n";
  os << "blocks: " << a.blocks.size() << "\n";
  for (std::size_t b = 0; b < a.blocks.size(); ++b)
    os << "  b" << b << "  dim " << a.blocks[b].dim << (a.blocks[b].defect_zero ? "  defect 0" : "") << "\n";
  os << "summands:\n";
  for (std::size_t i = 0; i < a.summands.size(); ++i) {
    const auto& s = a.summands[i];
    os << "  a" << i << "  blocks";
    for (auto b : s.blocks) os << " b" << b;
    os << "  dim " << s.dim << ":";
    for (const auto& f : s.factors) os << " " << to_string(f);
    os << "\n";
  }
}

}  // namespace

Json factor_json(const FactorDescriptor& f) {
  Json j;
  j["kind"] = kind_name(f.kind);
  j["dim"] = f.dim;
  j["family"] = f.kind == FactorDescriptor::Kind::Classical ? Json(f.family) : Json(nullptr);
  j["rank"] = f.kind == FactorDescriptor::Kind::Classical ? Json(f.rank) : Json(nullptr);
  j["field_degree"] = f.field_degree;
  if (!f.alternatives.empty()) {
    Json alt = Json::array();
    for (const auto& [fam, r] : f.alternatives) alt.push_back(fam + std::to_string(r));
    j["alternatives"] = alt;
  }
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Json analysis_json(const Analysis& a, const std::string& mode) {
  Json j;
  j["group"] = a.group;
  j["order"] = a.order;
  j["prime"] = a.prime;
  j["field_degree"] = a.field_degree;
  j["mode"] = mode;
  j["dim_L"] = a.dim_L;
  j["dim_formula"] = a.dim_formula;
  j["blocks"] = Json::array();
  for (const auto& b : a.blocks) j["blocks"].push_back({{"dim", b.dim}, {"defect_zero", b.defect_zero}});
  j["summands"] = Json::array();
  for (const auto& s : a.summands) {
    Json sj;
    sj["block"] = s.blocks.empty() ? Json(nullptr) : Json(s.blocks.front());
    sj["blocks"] = s.blocks;
    sj["dim"] = s.dim;
    sj["defect_zero"] = s.defect_zero;
    sj["factors"] = Json::array();
    for (const auto& f : s.factors) sj["factors"].push_back(factor_json(f));
    j["summands"].push_back(sj);
  }
  return j;
}

Json to_json(const ConjectureReport& r) {
  Json j = analysis_json(r.analysis, "modular");
  j["brauer"] = Json::array();
  for (const auto& c : r.brauer) j["brauer"].push_back({{"degree", c.degree}, {"indicator", c.indicator}});
  Json matches = Json::array();
  for (const auto& m : r.part3_matches)
    matches.push_back({{"predicted", to_string(m.predicted)}, {"matched", m.matched}, {"computed", m.computed}, {"note", m.note}});
  Json ab = Json::object();
  for (const auto& [d, n] : r.abelian_summary) ab[std::to_string(d)] = n;
  j["verdicts"] = {{"part1", r.part1}, {"part2", r.part2}, {"part3", r.part3}, {"part4", r.part4}};
  j["part3_matches"] = matches;
  j["unpredicted"] = r.unpredicted;
  j["abelian_summary"] = ab;
  j["abelian_total"] = r.abelian_total;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const OrdinaryReport& r) {
  Json j = analysis_json(r.analysis, "ordinary");
  j["characters"] = Json::array();
  for (const auto& c : r.characters)
    j["characters"].push_back({{"degree", c.degree}, {"indicator", c.indicator}, {"field_orbit_size", c.field_orbit_size}});
  Json matches = Json::array();
  for (const auto& m : r.matches)
    matches.push_back({{"predicted", to_string(m.predicted)}, {"matched", m.matched}, {"computed", m.computed}, {"note", m.note}});
  j["verdicts"] = {{"ordinary", r.passed}};
  j["matches"] = matches;
  j["unpredicted"] = r.unpredicted;
  j["abelian_total"] = r.abelian_total;
  j["predicted_abelian"] = r.predicted.abelian_dim;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const DensityResult& r) {
  Json j;
  j["bound"] = r.bound;
  j["primes"] = r.primes;
  j["rows"] = Json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"f7", row.f7_split ? "split" : "irreducible"},
                         {"f9", row.f9_split ? "split" : "irreducible"},
                         {"count", row.count},
                         {"frequency", row.frequency(r.primes)},
                         {"expected", row.expected},
                         {"decomposition", row.decomposition}});
  return j;
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream os;
  write_header(os, r.analysis);
  os << "brauer characters:";
  for (const auto& c : r.brauer) os << " " << c.degree << indicator_symbol(c.indicator);
  os << "\n";
  os << "part 1 (direct sum over blocks): " << pass_fail(r.part1) << "  [" << r.projected_dim << " of " << r.analysis.dim_L
     << "]\n";
  os << "part 2 (factors abelian or classical): " << pass_fail(r.part2);
  for (const auto& u : r.unidentified) os << "  " << to_string(u) << (u.note.empty() ? "" : " [" + u.note + "]");
  os << "\n";
  os << "part 3 (predicted classical factors): " << pass_fail(r.part3) << "\n";
  for (const auto& m : r.part3_matches)
    os << "  " << to_string(m.predicted) << " -> " << (m.matched ? m.computed : "missing")
       << (m.note.empty() ? "" : "  (" + m.note + ")") << "\n";
  for (const auto& u : r.unpredicted) os << "  unpredicted " << u << "\n";
  os << "part 4 (defect-0 blocks give classical summands): " << pass_fail(r.part4) << "\n";
  for (const auto& d : r.part4_blocks) os << "  a" << d.summand << ": " << d.factors << (d.classical ? "" : "  FAIL") << "\n";
  os << "abelian factors:";
  for (const auto& [d, n] : r.abelian_summary) os << " Ab(" << d << ")" << (n > 1 ? " x" + std::to_string(n) : "");
  os << "  total " << r.abelian_total << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string to_text(const OrdinaryReport& r) {
  std::ostringstream os;
  write_header(os, r.analysis);
  os << "characters:";
  for (const auto& c : r.characters) {
    os << " " << c.degree << indicator_symbol(c.indicator);
    if (c.field_orbit_size > 1) os << "/" << c.field_orbit_size;
  }
  os << "\n";
  os << "ordinary prediction: " << pass_fail(r.passed) << "\n";
  for (const auto& m : r.matches)
    os << "  " << to_string(m.predicted) << " -> " << (m.matched ? m.computed : "missing")
       << (m.note.empty() ? "" : "  (" + m.note + ")") << "\n";
  for (const auto& u : r.unpredicted) os << "  unpredicted " << u << "\n";
  os << "abelian dimension " << r.abelian_total << " (predicted " << r.predicted.abelian_dim << ")\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string to_text(const DensityResult& r) {
  std::ostringstream os;
  os << "primes below " << r.bound << " (excluding 2, 3, 7): " << r.primes << "\n";
  os << "f7           f9           count   observed  expected  decomposition\n";
  for (const auto& row : r.rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-12s %6zu   %.4f    %.4f    ", row.f7_split ? "split" : "irreducible",
                  row.f9_split ? "split" : "irreducible", row.count, row.frequency(r.primes), row.expected);
    os << line << row.decomposition << "\n";
  }
  return os.str();
}

}  // namespace plesken
