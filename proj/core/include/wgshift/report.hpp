#ifndef WGSHIFT_REPORT_HPP
#define WGSHIFT_REPORT_HPP

#include <string>
#include <vector>

#include "wgshift/analyzer.hpp"

namespace wgs {

enum class ReportFormat { Text, Json, Csv };

// Accepts "text", "json", "csv"; throws ParseError otherwise.
ReportFormat parse_format(const std::string& name);

// Stable machine schema: finiteFibreWeighted, finiteFibreUnweighted,
// entSetWeighted, entSetUnweighted, entCsetWeighted, entCsetUnweighted,
// tauBound{unbounded,value,horizon,reason}, predicates{pi1..pi4,rho1..rho4}.
// Undefined predicates render as null (json), empty (csv), "undefined" (text).
std::string render_report(const EntropyReport& r, ReportFormat format);

struct TableAResult {
  std::uint64_t instances_checked = 0;
  std::vector<std::string> violations; // "label: implication-name"
  bool sep_pi2_not_rho2 = false;       // witnessed by some instance
  bool sep_pi2_rho2 = false;
  bool sep_rho1_not_pi1 = false;
  bool sep_csetw_zero_csetu_inf = false;
};

// Feeds one classified instance into the tally.
void table_a_accumulate(TableAResult& t, const std::string& label,
                        const EntropyReport& r);

std::string render_table_a(const TableAResult& t, ReportFormat format);

} // namespace wgs

#endif
