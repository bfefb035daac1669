#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sigmaperm/harness.hpp"

namespace sigmaperm {

// Line-delimited report records. Each record is one JSON object on one line
// with the fields of VerificationReport; the summary block is a single object
// tagged "summary".

std::string to_json_line(const VerificationReport& report);
std::string to_json_line(const SuiteSummary& summary);

/// Throws ParseError on malformed input or missing fields.
VerificationReport parse_report_line(std::string_view line);
SuiteSummary parse_summary_line(std::string_view line);

/// One human-readable line, e.g. "S4 [2|3] T4: pass (0.41 ms)"; witnesses
/// follow on indented lines.
std::string to_text(const VerificationReport& report);
std::string to_text(const SuiteSummary& summary);

void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports,
                   bool json);
void write_summary(std::ostream& out, const SuiteSummary& summary, bool json);

}  // namespace sigmaperm
