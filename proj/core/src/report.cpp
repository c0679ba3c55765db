#include "wgshift/report.hpp"

#include <sstream>

#include <json.hpp>

#include "wgshift/errors.hpp"

using nlohmann::ordered_json;

namespace wgs {

namespace {

const char* predicate_name(std::size_t i) {
  static const char* names[] = {"pi1", "pi2", "pi3", "pi4",
                                "rho1", "rho2", "rho3", "rho4"};
  return names[i];
}

struct ImplicationRow {
  const char* name;
  const char* text;
};

const ImplicationRow kImplications[] = {
    {"i", "pi1 => pi3"},    {"ii", "pi3 => rho3"},  {"iii", "pi1 => rho1"},
    {"iv", "pi1 => rho3"},  {"v", "pi4 => pi2"},    {"vi", "rho4 => pi4"},
    {"vii", "rho2 => pi2"}, {"viii", "rho4 => pi2"}, {"ix", "rho1 => rho3"},
    {"x", "rho4 => rho2"},  {"xi", "pi3 => pi1"},   {"xii", "pi2 => pi4"},
    {"xiii", "rho2 => pi4"}, {"xiv", "pi3 => rho1"},
};

ordered_json report_json(const EntropyReport& r) {
  ordered_json root;
  root["finiteFibreWeighted"] = r.finite_fibre_weighted;
  root["finiteFibreUnweighted"] = r.finite_fibre_unweighted;
  root["entSetWeighted"] = to_string(r.ent_set_weighted);
  root["entSetUnweighted"] = to_string(r.ent_set_unweighted);
  root["entCsetWeighted"] = to_string(r.ent_cset_weighted);
  root["entCsetUnweighted"] = to_string(r.ent_cset_unweighted);
  ordered_json tau;
  tau["unbounded"] = r.tau.unbounded;
  if (r.tau.unbounded) {
    tau["value"] = nullptr;
    tau["reason"] = r.tau.reason;
  } else {
    tau["value"] = r.tau.value;
  }
  tau["horizon"] = r.tau.horizon;
  root["tauBound"] = tau;
  ordered_json preds;
  for (std::size_t i = 0; i < r.predicates.size(); ++i) {
    if (r.predicates[i])
      preds[predicate_name(i)] = *r.predicates[i];
    else
      preds[predicate_name(i)] = nullptr;
  }
  root["predicates"] = preds;
  return root;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string report_text(const EntropyReport& r) {
  std::ostringstream os;
  os << "finite fibres (weighted):   " << bool_word(r.finite_fibre_weighted) << "\n";
  os << "finite fibres (unweighted): " << bool_word(r.finite_fibre_unweighted) << "\n";
  os << "set entropy (weighted):     " << to_string(r.ent_set_weighted) << "\n";
  os << "set entropy (unweighted):   " << to_string(r.ent_set_unweighted) << "\n";
  os << "cset entropy (weighted):    " << to_string(r.ent_cset_weighted) << "\n";
  os << "cset entropy (unweighted):  " << to_string(r.ent_cset_unweighted) << "\n";
  if (r.tau.unbounded)
    os << "tau supremum:               unbounded (" << r.tau.reason << ")\n";
  else
    os << "tau supremum:               " << r.tau.value << "\n";
  os << "witness horizon:            " << r.tau.horizon << "\n";
  os << "predicates:                 ";
  for (std::size_t i = 0; i < r.predicates.size(); ++i) {
    if (i) os << " ";
    os << predicate_name(i) << "=";
    os << (r.predicates[i] ? bool_word(*r.predicates[i]) : "undefined");
  }
  os << "\n";
  return os.str();
}

std::string report_csv(const EntropyReport& r) {
  std::ostringstream os;
  os << "check,value\n";
  os << "finiteFibreWeighted," << bool_word(r.finite_fibre_weighted) << "\n";
  os << "finiteFibreUnweighted," << bool_word(r.finite_fibre_unweighted) << "\n";
  os << "entSetWeighted," << to_string(r.ent_set_weighted) << "\n";
  os << "entSetUnweighted," << to_string(r.ent_set_unweighted) << "\n";
  os << "entCsetWeighted," << to_string(r.ent_cset_weighted) << "\n";
  os << "entCsetUnweighted," << to_string(r.ent_cset_unweighted) << "\n";
  os << "tauUnbounded," << bool_word(r.tau.unbounded) << "\n";
  os << "tauValue," << (r.tau.unbounded ? std::string() : std::to_string(r.tau.value))
     << "\n";
  os << "tauHorizon," << r.tau.horizon << "\n";
  for (std::size_t i = 0; i < r.predicates.size(); ++i) {
    os << predicate_name(i) << ",";
    if (r.predicates[i]) os << bool_word(*r.predicates[i]);
    os << "\n";
  }
  return os.str();
}

} // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + name +
                                         "' (expected text, json, or csv)");
}

std::string render_report(const EntropyReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return report_text(r);
    case ReportFormat::Json: return report_json(r).dump(2) + "\n";
    case ReportFormat::Csv: return report_csv(r);
  }
  return {};
}

void table_a_accumulate(TableAResult& t, const std::string& label,
                        const EntropyReport& r) {
  ++t.instances_checked;
  for (const std::string& name : implication_check(r))
    t.violations.push_back(label + ": " + name);
  auto v = [&](Predicate i) { return *r.predicates[i]; };
  if (v(PI2) && !v(RHO2)) t.sep_pi2_not_rho2 = true;
  if (v(PI2) && v(RHO2)) t.sep_pi2_rho2 = true;
  if (v(RHO1) && !v(PI1)) t.sep_rho1_not_pi1 = true;
  if (r.ent_cset_weighted == CsetClass::Zero &&
      r.ent_cset_unweighted == CsetClass::Infinite)
    t.sep_csetw_zero_csetu_inf = true;
}

std::string render_table_a(const TableAResult& t, ReportFormat format) {
  struct Sep {
    const char* key;
    const char* text;
    bool hit;
  };
  const Sep seps[] = {
      {"pi2AndNotRho2", "pi2 true with rho2 false", t.sep_pi2_not_rho2},
      {"pi2AndRho2", "pi2 true with rho2 true", t.sep_pi2_rho2},
      {"rho1AndNotPi1", "rho1 true with pi1 false", t.sep_rho1_not_pi1},
      {"csetWeightedZeroUnweightedInfinite",
       "weighted cset entropy zero with unweighted infinite",
       t.sep_csetw_zero_csetu_inf},
  };

  if (format == ReportFormat::Json) {
    ordered_json root;
    root["instancesChecked"] = t.instances_checked;
    ordered_json impls;
    for (const ImplicationRow& row : kImplications) impls[row.name] = row.text;
    root["implications"] = impls;
    root["violations"] = t.violations;
    ordered_json sj;
    for (const Sep& s : seps) sj[s.key] = s.hit;
    root["separationsWitnessed"] = sj;
    return root.dump(2) + "\n";
  }
  auto violated = [&](const char* name) {
    for (const std::string& v : t.violations) {
      auto pos = v.rfind(": ");
      if (pos != std::string::npos && v.substr(pos + 2) == name) return true;
    }
    return false;
  };

  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "check,value\n";
    os << "instancesChecked," << t.instances_checked << "\n";
    for (const ImplicationRow& row : kImplications)
      os << "implication_" << row.name << ","
         << (violated(row.name) ? "violated" : "holds") << "\n";
    for (const Sep& s : seps) os << s.key << "," << bool_word(s.hit) << "\n";
    return os.str();
  }

  std::ostringstream os;
  os << "implication table over " << t.instances_checked
     << " finite-fibre instance(s)\n";
  for (const ImplicationRow& row : kImplications) {
    bool ok = !violated(row.name);
    os << "  " << row.name;
    for (std::size_t pad = std::string(row.name).size(); pad < 5; ++pad) os << " ";
    os << row.text;
    for (std::size_t pad = std::string(row.text).size(); pad < 14; ++pad) os << " ";
    os << (ok ? "holds" : "VIOLATED") << "\n";
  }
  if (!t.violations.empty()) {
    os << "violations:\n";
    for (const std::string& v : t.violations) os << "  " << v << "\n";
  }
  os << "separations witnessed:\n";
  for (const Sep& s : seps)
    os << "  " << s.text << ": " << (s.hit ? "yes" : "no") << "\n";
  return os.str();
}

} // namespace wgs
