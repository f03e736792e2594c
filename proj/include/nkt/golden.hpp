#pragma once

// Reproduction of the classification tables 2-7 and comparison against
// transcribed reference records.
//
// Reference files (one per table, tableN.txt) hold one record per line:
//   table | preset | tag | b1 | b2 [| key=value ...]
// Table 2 records use the tag "kappa" with the root in the b1 column, or the
// tag "real" (any kappa) with empty value columns. Options:
//   a0=1      compare both sides after substituting a0 = 1
//   note=...  free-text annotation carried into reports
// allowlist.txt lists known misprints that are reported but not failed:
//   table | preset | field | reason          (field: kappa, b1, b2 or tag)

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nkt/classification.hpp"
#include "nkt/expr_parser.hpp"

#ifndef NKT_DEFAULT_GOLDEN_DIR
#define NKT_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace nkt {

struct TableSpec {
  int which = 0;
  ConditionKind condition = ConditionKind::t_flat;
  std::string_view caption;
  std::vector<PresetName> rows;    // published rows, in published order
  std::vector<PresetName> absent;  // derivable rows the published table leaves out
};

inline TableSpec table_spec(int which) {
  using P = PresetName;
  const std::vector<P> catalog = {P::C_star, P::C,  P::L,  P::V,  P::P_star, P::P,  P::M,  P::W0, P::W0_star, P::W1,
                                  P::W1_star, P::W2, P::W3, P::W4, P::W5,     P::W6, P::W7, P::W8, P::W9};
  std::vector<P> without_w7;
  for (P p : catalog)
    if (p != P::W7) without_w7.push_back(p);
  switch (which) {
    case 2: return {2, ConditionKind::t_flat, "T-flat: kappa", catalog, {}};
    case 3: return {3, ConditionKind::quasi_t_flat, "quasi-T-flat", without_w7, {P::W7}};
    case 4: return {4, ConditionKind::phi_t_flat, "phi-T-flat", without_w7, {P::W7}};
    case 5:
      return {5, ConditionKind::xi_t_flat, "xi-T-flat", {P::C_star, P::C, P::L, P::M, P::W2, P::W3, P::W7, P::W9}, {}};
    case 6:
      return {6,
              ConditionKind::t_dot_r,
              "T(xi, X).R = 0",
              {P::P_star, P::W1, P::W1_star, P::W2, P::W4, P::W5, P::W6, P::W7, P::W8},
              {}};
    case 7:
      return {7,
              ConditionKind::t_dot_s,
              "T(xi, X).S = 0",
              {P::P_star, P::P, P::W1, P::W1_star, P::W2, P::W4, P::W5, P::W6, P::W7, P::W8},
              {}};
    default: break;
  }
  throw error(errc::invalid_argument, "no table " + std::to_string(which) + " (expected 2..7)");
}

struct GoldenRecord {
  int table = 0;
  PresetName preset = PresetName::riemann;
  std::string tag;  // kappa | real | Einstein | eta-Einstein
  std::optional<RationalExpr> b1, b2;
  std::string b1_text, b2_text;
  Bindings compare_at;
  std::string note;
  std::string source;
};

struct AllowEntry {
  int table = 0;
  PresetName preset = PresetName::riemann;
  std::string field;
  std::string reason;
};

inline std::string golden_dir() {
  if (const char* env = std::getenv("NKT_GOLDEN_DIR"); env && *env) return env;
  return NKT_DEFAULT_GOLDEN_DIR;
}

namespace detail {

inline std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, '|')) out.push_back(trim(field));
  return out;
}

/// Non-empty, non-comment lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> data_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_argument, "cannot open '" + path + "'");
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line_no, line);
  }
  return out;
}

}  // namespace detail

inline std::vector<GoldenRecord> load_golden(int which, const std::string& dir = golden_dir()) {
  const std::string path = dir + "/table" + std::to_string(which) + ".txt";
  std::vector<GoldenRecord> out;
  for (const auto& [line_no, line] : detail::data_lines(path)) {
    const std::string where = path + ":" + std::to_string(line_no);
    auto fields = detail::split_fields(line);
    if (fields.size() < 5) throw error(errc::parse_error, where + ": expected 5 '|'-separated fields");
    GoldenRecord rec;
    rec.source = where;
    try {
      rec.table = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw error(errc::parse_error, where + ": bad table id '" + fields[0] + "'");
    }
    if (rec.table != which) throw error(errc::parse_error, where + ": record belongs to table " + fields[0]);
    auto p = preset_from_name(fields[1]);
    if (!p) throw error(errc::parse_error, where + ": unknown preset '" + fields[1] + "'");
    rec.preset = *p;
    rec.tag = fields[2];
    const bool kappa_table = which == 2;
    if (kappa_table ? (rec.tag != "kappa" && rec.tag != "real")
                    : (rec.tag != "Einstein" && rec.tag != "eta-Einstein"))
      throw error(errc::parse_error, where + ": bad tag '" + rec.tag + "'");
    auto parse = [&](const std::string& text) -> std::optional<RationalExpr> {
      if (text.empty() || text == "-") return std::nullopt;
      try {
        return parse_expr(text);
      } catch (const error& e) {
        throw error(errc::parse_error, where + ": " + e.what());
      }
    };
    rec.b1_text = fields[3];
    rec.b2_text = fields[4];
    rec.b1 = parse(fields[3]);
    rec.b2 = parse(fields[4]);
    for (std::size_t i = 5; i < fields.size(); ++i) {
      auto eq = fields[i].find('=');
      if (eq == std::string::npos) throw error(errc::parse_error, where + ": option needs key=value");
      std::string key = fields[i].substr(0, eq), value = fields[i].substr(eq + 1);
      if (key == "note") {
        rec.note = value;
      } else if (auto v = var_from_name(key)) {
        rec.compare_at[*v] = parse_rational(value);
      } else {
        throw error(errc::parse_error, where + ": unknown option '" + key + "'");
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<AllowEntry> load_allowlist(const std::string& dir = golden_dir()) {
  const std::string path = dir + "/allowlist.txt";
  std::vector<AllowEntry> out;
  for (const auto& [line_no, line] : detail::data_lines(path)) {
    const std::string where = path + ":" + std::to_string(line_no);
    auto fields = detail::split_fields(line);
    if (fields.size() != 4) throw error(errc::parse_error, where + ": expected 4 '|'-separated fields");
    AllowEntry e;
    try {
      e.table = std::stoi(fields[0]);
    } catch (const std::exception&) {
      throw error(errc::parse_error, where + ": bad table id '" + fields[0] + "'");
    }
    auto p = preset_from_name(fields[1]);
    if (!p) throw error(errc::parse_error, where + ": unknown preset '" + fields[1] + "'");
    e.preset = *p;
    e.field = fields[2];
    e.reason = fields[3];
    out.push_back(std::move(e));
  }
  return out;
}

struct FieldDiff {
  std::string field;
  std::string derived;
  std::string expected;
  bool allowed = false;
  std::string reason;
};

struct ClassificationRow {
  enum class Status { match, allowed, mismatch, not_compared };

  int table = 0;
  PresetName preset = PresetName::riemann;
  ConditionKind condition = ConditionKind::t_flat;
  std::optional<KappaSolution> kappa;
  std::optional<EtaEinsteinForm> form;
  std::vector<std::string> flags;
  std::string expected_tag;
  std::string note;
  std::vector<FieldDiff> diffs;
  Status status = Status::not_compared;

  std::string rendered_value() const {
    if (kappa) return render_kappa(*kappa);
    if (form) return form->render();
    return "";
  }
  std::string derived_tag() const {
    if (kappa) return kappa->is_identity() ? "real" : "kappa";
    if (form) return std::string(to_string(form->tag));
    return "";
  }
};

inline std::string_view to_string(ClassificationRow::Status s) {
  switch (s) {
    case ClassificationRow::Status::match: return "match";
    case ClassificationRow::Status::allowed: return "allowed";
    case ClassificationRow::Status::mismatch: return "mismatch";
    case ClassificationRow::Status::not_compared: return "not-compared";
  }
  return "";
}

struct TableReport {
  int which = 0;
  std::string caption;
  ConditionKind condition = ConditionKind::t_flat;
  std::vector<ClassificationRow> rows;

  std::size_t count(ClassificationRow::Status s) const {
    std::size_t out = 0;
    for (const auto& r : rows) out += r.status == s;
    return out;
  }
  bool ok() const { return count(ClassificationRow::Status::mismatch) == 0; }
};

/// Derives one row without comparing it.
inline ClassificationRow derive_row(int which, ConditionKind condition, PresetName p) {
  ClassificationRow row;
  row.table = which;
  row.preset = p;
  row.condition = condition;
  TCoeffs c = preset(p);
  row.flags = c.flags;
  if (condition == ConditionKind::t_flat)
    row.kappa = t_flat_kappa(c);
  else
    row.form = classify(c, condition, true);
  return row;
}

namespace detail {

inline void compare_row(ClassificationRow& row, const GoldenRecord& rec, const std::vector<AllowEntry>& allow) {
  row.expected_tag = rec.tag;
  row.note = rec.note;
  if (!rec.compare_at.empty()) {
    std::string f = "compared at";
    for (const auto& [v, value] : rec.compare_at) f += " " + std::string(name_of(v)) + "=" + to_string(value);
    row.flags.push_back(f);
  }
  auto at = [&](const RationalExpr& e) { return substitute(e, rec.compare_at); };
  auto add = [&](std::string field, std::string derived, std::string expected) {
    FieldDiff d{field, std::move(derived), std::move(expected), false, ""};
    for (const auto& a : allow)
      if (a.table == row.table && a.preset == row.preset && a.field == field) {
        d.allowed = true;
        d.reason = a.reason;
      }
    row.diffs.push_back(std::move(d));
  };
  auto compare_expr = [&](const std::string& field, const RationalExpr& derived,
                          const std::optional<RationalExpr>& expected, const std::string& text) {
    if (!expected) return;
    RationalExpr d = at(derived), e = at(*expected);
    if (d != e) add(field, d.to_string(), e.to_string() + "  [" + text + "]");
  };

  if (row.kappa) {
    const KappaSolution& k = *row.kappa;
    if (rec.tag == "real") {
      if (!k.is_identity()) add("kappa", render_kappa(k), "a real number");
    } else if (!k.is_unique()) {
      add("kappa", render_kappa(k), rec.b1_text);
    } else {
      compare_expr("kappa", k.root, rec.b1, rec.b1_text);
    }
  } else if (row.form) {
    const EtaEinsteinForm& f = *row.form;
    if (f.degenerate()) {
      add("tag", "degenerate", rec.tag);
    } else {
      compare_expr("b1", f.b1, rec.b1, rec.b1_text);
      compare_expr("b2", f.b2, rec.b2, rec.b2_text);
      if (std::string(to_string(f.tag)) != rec.tag) add("tag", std::string(to_string(f.tag)), rec.tag);
    }
  }
  bool any_hard = false, any_allowed = false;
  for (const auto& d : row.diffs) (d.allowed ? any_allowed : any_hard) = true;
  row.status = any_hard ? ClassificationRow::Status::mismatch
                        : (any_allowed ? ClassificationRow::Status::allowed : ClassificationRow::Status::match);
}

}  // namespace detail

/// Derives every row of a table, in published order, and diffs it against the
/// reference records. Rows the published table omits are appended, flagged
/// and never compared.
inline TableReport reproduce_table(int which, const std::string& dir = golden_dir()) {
  TableSpec spec = table_spec(which);
  auto golden = load_golden(which, dir);
  auto allow = load_allowlist(dir);
  TableReport report;
  report.which = which;
  report.caption = std::string(spec.caption);
  report.condition = spec.condition;
  for (PresetName p : spec.rows) {
    ClassificationRow row = derive_row(which, spec.condition, p);
    auto rec = std::find_if(golden.begin(), golden.end(), [&](const GoldenRecord& g) { return g.preset == p; });
    if (rec == golden.end()) {
      row.diffs.push_back({"record", row.rendered_value(), "(missing reference record)", false, ""});
      row.status = ClassificationRow::Status::mismatch;
    } else {
      detail::compare_row(row, *rec, allow);
    }
    report.rows.push_back(std::move(row));
  }
  for (PresetName p : spec.absent) {
    ClassificationRow row = derive_row(which, spec.condition, p);
    row.flags.push_back("absent-from-table");
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace nkt
