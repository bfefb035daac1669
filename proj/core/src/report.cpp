#include "sigmaperm/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "sigmaperm/errors.hpp"

namespace sigmaperm {

using nlohmann::json;

namespace {

json witness_json(const Witness& w) {
  json out = {{"subgroup", w.subgroup}, {"block", w.block}, {"offending", w.offending}};
  if (!w.members.empty()) {
    out["members"] = w.members;
  }
  return out;
}

json parse_object(std::string_view line) {
  json value = json::parse(line, nullptr, false);
  if (value.is_discarded() || !value.is_object()) {
    throw ParseError("report line is not a JSON object");
  }
  return value;
}

template <typename T>
T field(const json& object, const char* name) {
  const auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError(std::string("report field \"") + name + "\" missing");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("report field \"") + name + "\" has the wrong type");
  }
}

std::string format_ms(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", ms);
  return buffer;
}

}  // namespace

std::string to_json_line(const VerificationReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(witness_json(w));
  }
  const json out = {
      {"group_id", report.group_id},   {"sigma", report.sigma},
      {"claim", to_string(report.claim)}, {"status", to_string(report.status)},
      {"witnesses", witnesses},        {"timing_ms", report.timing_ms},
  };
  return out.dump();
}

std::string to_json_line(const SuiteSummary& s) {
  const json out = {{"summary",
                     {{"groups", s.groups},
                      {"reports", s.reports},
                      {"passed", s.passed},
                      {"failed", s.failed},
                      {"inapplicable", s.inapplicable},
                      {"findings", s.findings},
                      {"elapsed_ms", s.elapsed_ms},
                      {"exit_code", s.exit_code}}}};
  return out.dump();
}

VerificationReport parse_report_line(std::string_view line) {
  const json value = parse_object(line);
  VerificationReport report;
  report.group_id = field<std::string>(value, "group_id");
  report.sigma = field<std::string>(value, "sigma");
  report.claim = parse_claim(field<std::string>(value, "claim"));
  report.status = parse_status(field<std::string>(value, "status"));
  report.timing_ms = field<double>(value, "timing_ms");
  for (const auto& w : field<json>(value, "witnesses")) {
    Witness witness;
    witness.subgroup = field<std::string>(w, "subgroup");
    witness.block = field<std::string>(w, "block");
    witness.offending = field<std::string>(w, "offending");
    if (w.contains("members")) {
      witness.members = field<std::vector<std::string>>(w, "members");
    }
    report.witnesses.push_back(std::move(witness));
  }
  return report;
}

SuiteSummary parse_summary_line(std::string_view line) {
  const json value = field<json>(parse_object(line), "summary");
  SuiteSummary s;
  s.groups = field<std::size_t>(value, "groups");
  s.reports = field<std::size_t>(value, "reports");
  s.passed = field<std::size_t>(value, "passed");
  s.failed = field<std::size_t>(value, "failed");
  s.inapplicable = field<std::size_t>(value, "inapplicable");
  s.findings = field<std::size_t>(value, "findings");
  s.elapsed_ms = field<double>(value, "elapsed_ms");
  s.exit_code = field<int>(value, "exit_code");
  return s;
}

std::string to_text(const VerificationReport& report) {
  std::string out = report.group_id + " [" + report.sigma + "] " +
                    to_string(report.claim) + ": " + to_string(report.status) +
                    " (" + format_ms(report.timing_ms) + " ms)";
  for (const auto& w : report.witnesses) {
    out += "\n  " + w.subgroup;
    if (!w.block.empty()) {
      out += " block {" + w.block + "}";
    }
    out += ": " + w.offending;
    if (!w.members.empty()) {
      out += "\n    elements:";
      for (const auto& m : w.members) {
        out += " " + m;
      }
    }
  }
  return out;
}

std::string to_text(const SuiteSummary& s) {
  return "groups " + std::to_string(s.groups) + ", reports " +
         std::to_string(s.reports) + ": " + std::to_string(s.passed) + " pass, " +
         std::to_string(s.failed) + " fail, " + std::to_string(s.inapplicable) +
         " inapplicable, " + std::to_string(s.findings) + " findings (" +
         format_ms(s.elapsed_ms) + " ms), exit " + std::to_string(s.exit_code);
}

void write_reports(std::ostream& out, const std::vector<VerificationReport>& reports,
                   bool json_mode) {
  for (const auto& r : reports) {
    out << (json_mode ? to_json_line(r) : to_text(r)) << '\n';
  }
}

void write_summary(std::ostream& out, const SuiteSummary& summary, bool json_mode) {
  out << (json_mode ? to_json_line(summary) : to_text(summary)) << '\n';
}

}  // namespace sigmaperm
