#pragma once

// Command-line front end. run() is the whole program; tools/nkt_main.cpp only
// forwards argv, so tests drive it in-process.
//
// Exit codes: 0 success, 1 usage or model error, 2 reference-table mismatch
// (table) or failed check (example1).

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nkt/golden.hpp"

namespace nkt::cli {

using json = nlohmann::ordered_json;

enum class Format { text, md, json };

inline Format format_from_name(const std::string& s) {
  if (s == "md") return Format::md;
  if (s == "json") return Format::json;
  return Format::text;
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- helpers

/// p + q sqrt(n) at a concrete n, e.g. "3 - 2*sqrt(2)".
inline std::string render_at(const RationalExpr& e, long n) {
  const Bindings at{{Var::n, Rational(n)}};
  auto [even, odd] = detail::split_sqrt_n(e.numerator());
  Rational d = e.denominator().evaluate(at);
  Rational p = even.evaluate(at) / d, q = odd.evaluate(at) / d;
  if (auto root = exact_sqrt(Integer(n))) return to_string(p + q * Rational(*root));
  const std::string radical = "sqrt(" + std::to_string(n) + ")";
  auto term = [&](const Rational& c) { return c == 1 ? radical : to_string(c) + "*" + radical; };
  if (q == 0) return to_string(p);
  if (p == 0) return q == -1 ? "-" + radical : term(q);
  return to_string(p) + (q > 0 ? " + " + term(q) : " - " + term(-q));
}

inline std::string md_escape(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|' || ch == '*' || ch == '_') out += '\\';
    out += ch;
  }
  return out;
}

inline json expr_or_null(const std::optional<RationalExpr>& e) { return e ? json(e->to_string()) : json(nullptr); }

inline std::string coefficient_list(const TCoeffs& c) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += "a" + std::to_string(i) + " = " + c[i].to_string();
  }
  return out.empty() ? "all zero" : out;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

/// Parses a flag value, prefixing any error with the flag name.
template <typename Parse>
auto flag_value(const std::string& flag, const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const error& e) {
    std::string message = e.what();
    auto colon = message.find(": ");
    throw error(e.code(), flag + ": " + (colon == std::string::npos ? message : message.substr(colon + 2)));
  }
}

inline Rational rational_flag(const std::string& flag, const std::string& text) {
  return flag_value(flag, text, [](const std::string& t) { return parse_rational(t); });
}

inline RationalExpr expr_flag(const std::string& flag, const std::string& text) {
  return flag_value(flag, text, [](const std::string& t) { return parse_expr(t); });
}

// ---------------------------------------------------------------- presets-list

inline int presets_list(Format f, bool as_printed, std::ostream& out) {
  auto get = [&](PresetName p) { return as_printed ? preset_as_printed(p) : preset(p); };
  if (f == Format::json) {
    json list = json::array();
    for (const auto& info : preset_table) {
      TCoeffs c = get(info.id);
      json coeffs = json::array();
      for (const auto& a : c.a) coeffs.push_back(a.to_string());
      list.push_back({{"name", info.name},
                      {"label", info.label},
                      {"description", info.description},
                      {"coefficients", coeffs},
                      {"flags", c.flags}});
    }
    emit_json(out, {{"command", "presets-list"}, {"as_printed", as_printed}, {"presets", list}});
    return 0;
  }
  if (f == Format::md) {
    out << "| preset | tensor | a0 | a1 | a2 | a3 | a4 | a5 | a6 | a7 | flags |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& info : preset_table) {
      TCoeffs c = get(info.id);
      out << "| " << md_escape(std::string(info.label)) << " | " << info.description;
      for (const auto& a : c.a) out << " | " << md_escape(a.to_string());
      out << " | " << join(c.flags, ", ") << " |\n";
    }
    return 0;
  }
  for (const auto& info : preset_table) {
    TCoeffs c = get(info.id);
    out << std::left << std::setw(9) << info.name << coefficient_list(c);
    if (!c.flags.empty()) out << "  [" << join(c.flags, ", ") << "]";
    out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- model audit

inline std::string nullity_summary(const AuditReport& report, const NullityFit& fit, const CurvatureData& d) {
  const bool h_zero = max_abs(d.h) == 0;
  for (const auto& c : report.checks)
    if (!c.passed) return "not a contact metric structure: " + c.name + " fails";
  if (!fit.exact) return "not a (κ,μ)-space: max residual " + to_string(fit.max_residual);
  if (fit.kappa == 1 && h_zero) return "Sasakian: κ=1, h=0";
  std::string out = fit.mu == 0 ? "N(κ)-contact: " : "(κ,μ)-space: ";
  out += "κ=" + to_string(fit.kappa) + ", μ=" + to_string(fit.mu) + (h_zero ? ", h=0" : ", h≠0");
  return out;
}

inline json audit_json(const FrameModel& m) {
  AuditReport report = contact_audit(m);
  CurvatureData d = curvature(m);
  NullityFit fit = nullity_fit(m, d);
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"component", c.component}, {"detail", c.detail}});
  return {{"model", m.name},
          {"dim", m.dim},
          {"xi", m.xi + 1},
          {"passed", report.passed()},
          {"checks", checks},
          {"nullity",
           {{"kappa", to_string(fit.kappa)},
            {"mu", to_string(fit.mu)},
            {"exact", fit.exact},
            {"max_residual", to_string(fit.max_residual)},
            {"ricci_xi_verified", fit.ricci_xi_verified}}},
          {"scalar_curvature", to_string(d.scalar)},
          {"h_zero", max_abs(d.h) == 0},
          {"summary", nullity_summary(report, fit, d)}};
}

/// Human-readable audit; every line starts with `prefix` (used to emit model files with comments).
inline void audit_text(const json& a, std::ostream& out, const std::string& prefix, bool md) {
  if (md) {
    out << "| check | result | detail |\n|---|---|---|\n";
    for (const auto& c : a["checks"])
      out << "| " << c["name"].get<std::string>() << " | " << (c["passed"].get<bool>() ? "pass" : "FAIL") << " | "
          << md_escape(c["detail"].get<std::string>()) << " |\n";
    out << "\n";
  } else {
    for (const auto& c : a["checks"]) {
      out << prefix << std::left << std::setw(14) << c["name"].get<std::string>()
          << (c["passed"].get<bool>() ? "pass" : "FAIL");
      if (!c["detail"].get<std::string>().empty()) out << "  " << c["detail"].get<std::string>();
      out << "\n";
    }
  }
  const auto& fit = a["nullity"];
  out << prefix << "nullity: kappa = " << fit["kappa"].get<std::string>() << ", mu = " << fit["mu"].get<std::string>()
      << (fit["exact"].get<bool>() ? " (exact)" : " (max residual " + fit["max_residual"].get<std::string>() + ")")
      << (md ? "  \n" : "\n");
  out << prefix << "scalar curvature: " << a["scalar_curvature"].get<std::string>() << (md ? "  \n" : "\n");
  out << prefix << a["summary"].get<std::string>() << "\n";
}

inline int model_audit(Format f, const std::string& path, std::ostream& out) {
  FrameModel m = read_model_file(path);
  validate_structure(m);
  json a = audit_json(m);
  if (f == Format::json) {
    json j = {{"command", "model-audit"}};
    j.update(a);
    emit_json(out, j);
    return 0;
  }
  if (f == Format::md) out << "## " << md_escape(m.name) << "\n\n";
  else out << "model: " << m.name << "\n";
  audit_text(a, out, "", f == Format::md);
  return 0;
}

inline int model_build(Format f, const std::string& lambda_text, bool audit, const std::string& output,
                       std::ostream& out) {
  Rational lambda = rational_flag("--lambda", lambda_text);
  FrameModel m = nk_lie_group_3d(lambda);
  const std::string text = write_model(m);
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) throw error(errc::invalid_argument, "cannot write '" + output + "'");
    file << text;
  }
  if (f == Format::json) {
    json j = {{"command", "model-build"}, {"lambda", to_string(lambda)}, {"model", text}};
    if (audit) j["audit"] = audit_json(m);
    emit_json(out, j);
    return 0;
  }
  if (f == Format::md) {
    out << "```\n" << text << "```\n";
    if (audit) {
      out << "\n";
      audit_text(audit_json(m), out, "", true);
    }
    return 0;
  }
  out << text;
  if (audit) audit_text(audit_json(m), out, "# ", false);
  return 0;
}

// ---------------------------------------------------------------- classify

inline PresetName require_preset(const std::string& name) {
  auto p = preset_from_name(name);
  if (!p) throw error(errc::invalid_argument, "--preset: unknown preset '" + name + "'");
  return *p;
}

inline ConditionKind require_condition(const std::string& name) {
  auto k = condition_from_name(name);
  if (!k) throw error(errc::invalid_argument, "--condition: unknown condition '" + name + "'");
  return *k;
}

inline json kappa_json(const KappaSolution& s) {
  return {{"kind", "kappa"},
          {"solution", to_string(s.kind)},
          {"kappa", s.is_unique() ? json(s.root.to_string()) : json(nullptr)},
          {"side_condition", s.is_unique() ? json(s.side_condition.to_string()) : json(nullptr)}};
}

inline json form_json(const EtaEinsteinForm& f) {
  return {{"kind", "form"},
          {"tag", to_string(f.tag)},
          {"b1", f.degenerate() ? json(nullptr) : json(f.b1.to_string())},
          {"b2", f.degenerate() ? json(nullptr) : json(f.b2.to_string())},
          {"A", f.a_part.to_string()},
          {"B", f.b_part.to_string()},
          {"C", f.denominator_condition.to_string()}};
}

inline int classify_cmd(Format f, const std::string& preset_name, const std::string& condition_name,
                        bool substitute_scalar, bool as_printed, std::ostream& out) {
  PresetName p = require_preset(preset_name);
  ConditionKind kind = require_condition(condition_name);
  TCoeffs c = as_printed ? preset_as_printed(p) : preset(p);
  std::optional<KappaSolution> kappa;
  std::optional<EtaEinsteinForm> form;
  if (kind == ConditionKind::t_flat)
    kappa = t_flat_kappa(c);
  else
    form = classify(c, kind, substitute_scalar);
  const bool r_step = substitute_scalar && (kind == ConditionKind::quasi_t_flat || kind == ConditionKind::phi_t_flat ||
                                            kind == ConditionKind::t_dot_s);
  if (f == Format::json) {
    json j = {{"command", "classify"},
              {"preset", to_string(p)},
              {"condition", to_string(kind)},
              {"substitute_r", r_step},
              {"flags", c.flags},
              {"result", kappa ? kappa_json(*kappa) : form_json(*form)}};
    emit_json(out, j);
    return 0;
  }
  const std::string nl = f == Format::md ? "  \n" : "\n";
  out << "preset: " << to_string(p) << " (" << preset_info(p).description << ")" << nl;
  out << "condition: " << to_string(kind) << nl;
  if (!c.flags.empty()) out << "flags: " << join(c.flags, ", ") << nl;
  if (r_step) out << "step: r -> 2n(2n - 2 + kappa)" << nl;
  if (kappa) {
    out << "kappa: " << render_kappa(*kappa) << nl;
    if (kappa->is_unique() && !kappa->side_condition.is_constant())
      out << "valid where: " << kappa->side_condition.to_string() << " != 0" << nl;
  } else {
    out << "S = " << form->render() << nl;
    out << "type: " << to_string(form->tag) << nl;
    out << "requires: C = " << form->denominator_condition.to_string() << " != 0" << nl;
  }
  return 0;
}

// ---------------------------------------------------------------- table

inline std::string row_label(int which, PresetName p) {
  const std::string t(preset_info(p).label);
  switch (which) {
    case 2: return "g(" + t + "(X1,X2)X3,X4) = 0";
    case 3: return "g(" + t + "(φX1,X2)X3,φX4) = 0";
    case 4: return "g(" + t + "(φX1,φX2)φX3,φX4) = 0";
    case 5: return "ξ-" + t + "-flat";
    case 6: return t + "(ξ,X1).R = 0";
    case 7: return t + "(ξ,X1).S = 0";
    default: return t;
  }
}

inline json table_json(const TableReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json diffs = json::array();
    for (const auto& d : row.diffs)
      diffs.push_back({{"field", d.field},
                       {"derived", d.derived},
                       {"expected", d.expected},
                       {"allowed", d.allowed},
                       {"reason", d.reason}});
    json jr = {{"preset", to_string(row.preset)},
               {"label", preset_info(row.preset).label},
               {"status", to_string(row.status)},
               {"tag", row.derived_tag()},
               {"expected_tag", row.expected_tag},
               {"value", row.rendered_value()}};
    if (row.kappa) {
      jr["kappa"] = kappa_json(*row.kappa);
    } else {
      jr["form"] = form_json(*row.form);
    }
    jr["flags"] = row.flags;
    jr["note"] = row.note;
    jr["diffs"] = diffs;
    rows.push_back(jr);
  }
  using S = ClassificationRow::Status;
  return {{"command", "table"},
          {"table", r.which},
          {"caption", r.caption},
          {"condition", to_string(r.condition)},
          {"ok", r.ok()},
          {"summary",
           {{"rows", r.rows.size()},
            {"match", r.count(S::match)},
            {"allowed", r.count(S::allowed)},
            {"mismatch", r.count(S::mismatch)},
            {"not_compared", r.count(S::not_compared)}}},
          {"rows", rows}};
}

inline int table_cmd(Format f, int which, const std::string& dir, std::ostream& out) {
  TableReport r = reproduce_table(which, dir.empty() ? golden_dir() : dir);
  using S = ClassificationRow::Status;
  const int code = r.ok() ? 0 : 2;
  if (f == Format::json) {
    emit_json(out, table_json(r));
    return code;
  }
  std::ostringstream summary;
  summary << r.rows.size() << " rows: " << r.count(S::match) << " match, " << r.count(S::allowed) << " allowed, "
          << r.count(S::mismatch) << " mismatch, " << r.count(S::not_compared) << " not compared";
  if (f == Format::md) {
    out << "### Table " << which << ": " << r.caption << "\n\n";
    if (which == 2) {
      out << "| N(κ)-contact metric manifold | κ | check |\n|---|---|---|\n";
      for (const auto& row : r.rows)
        out << "| " << md_escape(row_label(which, row.preset)) << " | `" << row.rendered_value() << "` | "
            << to_string(row.status) << " |\n";
    } else {
      out << "| N(κ)-contact metric manifold | η-Einstein / Einstein | S = | check |\n|---|---|---|---|\n";
      for (const auto& row : r.rows) {
        std::string tag = row.form->degenerate() ? "-" : (row.form->tag == FormTag::einstein ? "Einstein" : "η-Einstein");
        out << "| " << md_escape(row_label(which, row.preset)) << " | " << tag << " | "
            << "`" << row.form->render("η⊗η") << "` | " << to_string(row.status) << " |\n";
      }
    }
    out << "\n" << summary.str() << "\n";
    bool header = false;
    for (const auto& row : r.rows) {
      for (const auto& note : row.flags)
        if (note == "absent-from-table") out << "\n- " << md_escape(std::string(preset_info(row.preset).label)) << ": derived, absent from the reference table";
      if (!row.note.empty()) out << "\n- " << md_escape(std::string(preset_info(row.preset).label)) << ": " << row.note;
      for (const auto& d : row.diffs) {
        if (!header) {
          out << "\n\nDifferences:\n";
          header = true;
        }
        out << "\n- " << md_escape(std::string(preset_info(row.preset).label)) << " " << d.field
            << (d.allowed ? " (allowed: " + d.reason + ")" : " (MISMATCH)") << ": derived `" << d.derived
            << "`, reference `" << d.expected << "`";
      }
    }
    out << "\n";
    return code;
  }
  out << "Table " << which << ": " << r.caption << "\n";
  for (const auto& row : r.rows) {
    out << "  " << std::left << std::setw(8) << to_string(row.preset) << std::setw(13) << to_string(row.status)
        << std::setw(13) << row.derived_tag() << row.rendered_value();
    if (!row.flags.empty()) out << "  [" << join(row.flags, ", ") << "]";
    out << "\n";
    if (!row.note.empty()) out << "      note: " << row.note << "\n";
    for (const auto& d : row.diffs) {
      out << "      " << d.field << (d.allowed ? " allowed (" + d.reason + ")" : " MISMATCH") << "\n";
      out << "        derived:   " << d.derived << "\n";
      out << "        reference: " << d.expected << "\n";
    }
  }
  out << summary.str() << "\n";
  return code;
}

// ---------------------------------------------------------------- residual

struct ResidualArgs {
  std::string lambda, model_path, preset_name, condition_name, a0, a1;
  bool xi_strict = false;
  std::string variant = "printed";
};

inline int residual_cmd(Format f, const ResidualArgs& args, std::ostream& out) {
  if (args.lambda.empty() == args.model_path.empty())
    throw error(errc::invalid_argument, "give exactly one of --lambda or --model");
  FrameModel m = args.model_path.empty() ? nk_lie_group_3d(rational_flag("--lambda", args.lambda))
                                         : read_model_file(args.model_path);
  PresetName p = require_preset(args.preset_name);
  ConditionKind kind = require_condition(args.condition_name);
  TCoeffs c = preset(p);
  Bindings at{{Var::n, Rational(static_cast<long>(m.n()))}};
  if (!args.a0.empty()) at[Var::a0] = rational_flag("--a0", args.a0);
  if (!args.a1.empty()) at[Var::a1] = rational_flag("--a1", args.a1);
  ResidualOptions options;
  options.xi_strict = args.xi_strict;
  if (args.variant == "standard")
    options.variant = DerivationVariant::standard;
  else if (args.variant != "printed")
    throw error(errc::invalid_argument, "--variant: expected printed or standard");
  CurvatureData d = curvature(m);
  Rational residual = condition_residual(m, d, evaluate_coeffs(c, at), kind, options);
  std::vector<std::string> flags = c.flags;
  if (kind == ConditionKind::xi_t_flat) flags.push_back(options.xi_strict ? "xi-strict" : "xi-slice");
  if (kind == ConditionKind::t_dot_r)
    flags.push_back(options.variant == DerivationVariant::standard ? "variant=standard" : "variant=printed");
  if (f == Format::json) {
    emit_json(out, {{"command", "residual"},
                    {"model", m.name},
                    {"preset", to_string(p)},
                    {"condition", to_string(kind)},
                    {"residual", to_string(residual)},
                    {"flags", flags}});
    return 0;
  }
  const std::string nl = f == Format::md ? "  \n" : "\n";
  out << "model: " << m.name << nl << "preset: " << to_string(p) << nl << "condition: " << to_string(kind) << nl;
  if (!flags.empty()) out << "flags: " << join(flags, ", ") << nl;
  out << "residual = " << to_string(residual) << "\n";
  return 0;
}

// ---------------------------------------------------------------- example1, deform

inline int example1_cmd(Format f, long n, const std::string& sign_text, std::ostream& out) {
  int sign = 0;
  if (sign_text == "+" || sign_text == "plus") sign = 1;
  if (sign_text == "-" || sign_text == "minus") sign = -1;
  if (sign == 0) throw error(errc::invalid_argument, "--sign: expected + or -");
  Example1Report r = example1_check(n, sign);
  auto both = [&](const RationalExpr& e) { return json{{"symbolic", e.to_string()}, {"value", render_at(e, n)}}; };
  if (f == Format::json) {
    emit_json(out, {{"command", "example1"},
                    {"n", n},
                    {"sign", sign > 0 ? "+" : "-"},
                    {"c", both(r.c)},
                    {"a", both(r.a)},
                    {"kappa", both(r.kappa)},
                    {"mu", both(r.mu)},
                    {"abs_one_minus_c", both(r.one_minus_c_abs)},
                    {"boeckx", both(r.boeckx_value)},
                    {"deformed", {{"kappa", both(r.deformed.kappa)}, {"mu", both(r.deformed.mu)}}},
                    {"deformed_as_printed",
                     {{"kappa", both(r.deformed_as_printed.kappa)}, {"mu", both(r.deformed_as_printed.mu)}}},
                    {"checks",
                     {{"root_positive", r.root_positive},
                      {"boeckx_is_sqrt_n", r.boeckx_is_sqrt_n},
                      {"deformed_is_target", r.deformed_is_target},
                      {"deformed_boeckx_is_sqrt_n", r.deformed_boeckx_is_sqrt_n}}},
                    {"passed", r.passed()}});
    return r.passed() ? 0 : 2;
  }
  const std::string nl = f == Format::md ? "  \n" : "\n";
  auto line = [&](const std::string& name, const RationalExpr& e) {
    const std::string symbolic = e.to_string(), value = render_at(e, n);
    out << name << " = " << symbolic << (symbolic == value ? "" : " = " + value) << nl;
  };
  out << "n = " << n << ", sign " << (sign > 0 ? "+" : "-") << " (s = sqrt(n))" << nl;
  line("c", r.c);
  line("a", r.a);
  line("kappa", r.kappa);
  line("mu", r.mu);
  line("|1 - c|", r.one_minus_c_abs);
  line("I(kappa, mu)", r.boeckx_value);
  line("deformed kappa", r.deformed.kappa);
  line("deformed mu", r.deformed.mu);
  line("deformed kappa (as printed)", r.deformed_as_printed.kappa);
  line("deformed mu (as printed)", r.deformed_as_printed.mu);
  out << (r.passed() ? "PASS" : "FAIL") << ": Boeckx invariant = sqrt(n), deformation gives N(1 - 1/n)" << "\n";
  return r.passed() ? 0 : 2;
}

inline std::string boeckx_text(const RationalExpr& kappa, const RationalExpr& mu) {
  try {
    BoeckxValue b = boeckx_invariant(kappa, mu);
    return b.value ? b.value->to_string() : "sqrt(" + b.squared.to_string() + ")";
  } catch (const error& e) {
    if (e.code() == errc::sasakian_input) return "undefined (kappa = 1)";
    return "not real";
  }
}

inline int deform_cmd(Format f, const std::string& kappa_text, const std::string& mu_text, const std::string& a_text,
                      const std::string& c_text, bool standard, std::ostream& out) {
  RationalExpr kappa = expr_flag("--kappa", kappa_text), mu = expr_flag("--mu", mu_text), a = expr_flag("--a", a_text);
  KappaMu result;
  if (standard) {
    result = d_homothetic_standard(kappa, mu, a);
  } else {
    if (c_text.empty()) throw error(errc::invalid_argument, "--c is required unless --standard is given");
    result = d_homothetic(kappa, mu, a, expr_flag("--c", c_text));
  }
  const std::string before = boeckx_text(kappa, mu), after = boeckx_text(result.kappa, result.mu);
  if (f == Format::json) {
    emit_json(out, {{"command", "deform"},
                    {"form", standard ? "standard" : "as-printed"},
                    {"kappa", kappa.to_string()},
                    {"mu", mu.to_string()},
                    {"a", a.to_string()},
                    {"c", standard ? json(nullptr) : json(expr_flag("--c", c_text).to_string())},
                    {"kappa_bar", result.kappa.to_string()},
                    {"mu_bar", result.mu.to_string()},
                    {"boeckx_before", before},
                    {"boeckx_after", after}});
    return 0;
  }
  const std::string nl = f == Format::md ? "  \n" : "\n";
  out << "kappa_bar = " << result.kappa.to_string() << nl;
  out << "mu_bar = " << result.mu.to_string() << nl;
  out << "Boeckx invariant: " << before << " -> " << after << "\n";
  return 0;
}

// ---------------------------------------------------------------- entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact T-curvature classification of N(kappa)-contact metric manifolds", "nkt"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "md", "json"}));

  bool as_printed = false;
  auto* presets = app.add_subcommand("presets-list", "List the named coefficient presets");
  presets->add_flag("--as-printed", as_printed, "Show catalog rows verbatim (W0* duplicates W0, printed W9 signs)");

  std::string path;
  auto* audit_cmd = app.add_subcommand("model-audit", "Audit a model file");
  audit_cmd->add_option("path", path, "Model file")->required();

  std::string lambda, output;
  bool audit = false;
  auto* build = app.add_subcommand("model-build", "Write the 3-dimensional N(1 - lambda^2) Lie group model");
  build->add_option("--lambda", lambda, "Rational lambda, e.g. 1/2")->required();
  build->add_flag("--audit", audit, "Append the contact audit");
  build->add_option("--output,-o", output, "Also write the model to this file");

  std::string preset_name, condition_name;
  bool substitute_scalar = false;
  auto* classify = app.add_subcommand("classify", "Derive the classification for one preset and condition");
  classify->add_option("--preset", preset_name, "Preset name, e.g. W7 or C_star")->required();
  classify->add_option("--condition", condition_name, "flat, xi-flat, quasi-flat, phi-flat, t-dot-r, t-dot-s")
      ->required();
  classify->add_flag("--substitute-r", substitute_scalar, "Replace r by 2n(2n - 2 + kappa)");
  classify->add_flag("--as-printed", as_printed, "Use the catalog row verbatim");

  int which = 0;
  std::string golden;
  auto* table = app.add_subcommand("table", "Reproduce a classification table and diff it against the reference");
  table->add_option("which", which, "Table number 2..7")->required()->check(CLI::Range(2, 7));
  table->add_option("--golden-dir", golden, "Reference directory (default: $NKT_GOLDEN_DIR or the built-in path)");

  ResidualArgs res;
  auto* residual = app.add_subcommand("residual", "Evaluate a condition residual on a model");
  residual->add_option("--lambda", res.lambda, "Use the Lie group model with this lambda");
  residual->add_option("--model", res.model_path, "Use a model file");
  residual->add_option("--preset", res.preset_name, "Preset name")->required();
  residual->add_option("--condition", res.condition_name, "Condition name")->required();
  residual->add_option("--a0", res.a0, "Value of a0 for presets with free parameters");
  residual->add_option("--a1", res.a1, "Value of a1 for presets with free parameters");
  residual->add_flag("--xi-strict", res.xi_strict, "xi-flat: require T(X, Y)xi = 0 for all X, Y");
  residual->add_option("--variant", res.variant, "t-dot-r fourth term: printed or standard")
      ->check(CLI::IsMember({"printed", "standard"}));

  long ex_n = 0;
  std::string sign;
  auto* example1 = app.add_subcommand("example1", "Check the tangent sphere bundle example in Q(sqrt(n))");
  example1->add_option("--n", ex_n, "Integer n >= 2")->required()->check(CLI::Range(2L, 1000000L));
  example1->add_option("--sign", sign, "+ or -")->required();

  std::string kappa_text, mu_text, a_text, c_text;
  bool standard = false;
  auto* deform = app.add_subcommand("deform", "Apply a D-homothetic deformation to (kappa, mu)");
  deform->add_option("--kappa", kappa_text, "kappa (expression)")->required();
  deform->add_option("--mu", mu_text, "mu (expression)")->required();
  deform->add_option("--a", a_text, "Deformation constant a")->required();
  deform->add_option("--c", c_text, "Constant c of the as-printed mu formula");
  deform->add_flag("--standard", standard, "Use kappa' = (kappa + a^2 - 1)/a^2, mu' = (mu + 2a - 2)/a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const Format f = format_from_name(format);
  try {
    if (*presets) return presets_list(f, as_printed, out);
    if (*audit_cmd) return model_audit(f, path, out);
    if (*build) return model_build(f, lambda, audit, output, out);
    if (*classify) return classify_cmd(f, preset_name, condition_name, substitute_scalar, as_printed, out);
    if (*table) return table_cmd(f, which, golden, out);
    if (*residual) return residual_cmd(f, res, out);
    if (*example1) return example1_cmd(f, ex_n, sign, out);
    if (*deform) return deform_cmd(f, kappa_text, mu_text, a_text, c_text, standard, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace nkt::cli
