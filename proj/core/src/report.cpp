#include "hypercheck/report.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hypercheck {

namespace {

using json = nlohmann::ordered_json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json summary_json(const Summary& s) { return {{"pass", s.pass}, {"fail", s.fail}, {"error", s.error}}; }

json case_json(const CaseResult& c) {
  json j;
  j["identity"] = c.report.identity_name;
  json params = json::object();
  for (const auto& [k, v] : c.report.params) params[k] = number(v);
  j["params"] = params;
  j["lhs"] = number(c.report.lhs);
  j["rhs"] = number(c.report.rhs);
  j["abs_err"] = number(c.report.abs_err);
  j["rel_err"] = number(c.report.rel_err);
  j["tol"] = number(c.report.tol);
  j["pass"] = c.report.pass;
  j["status"] = status_name(c.status);
  if (!c.report.detail.empty()) j["detail"] = c.report.detail;
  if (c.status == CaseStatus::error) j["error"] = c.error;
  return j;
}

json suite_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["tolerance"] = r.tolerance;
  j["config"] = {{"tolerance", r.tolerance}, {"families", r.families}};
  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(case_json(c));
  j["cases"] = cases;
  j["summary"] = summary_json(r.summary);
  j["wall_ms"] = r.wall_ms;
  return j;
}

std::string fmt(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string message(const CaseResult& c) { return c.status == CaseStatus::error ? c.error : c.report.detail; }

std::string to_csv(const RunResult& result) {
  std::set<std::string> columns;
  for (const auto& s : result.suites) {
    for (const auto& c : s.cases) {
      for (const auto& [k, v] : c.report.params) columns.insert(k);
    }
  }
  std::ostringstream out;
  out << "suite,identity";
  for (const auto& col : columns) out << "," << csv_field(col);
  out << ",lhs,rhs,abs_err,rel_err,tol,pass,status,detail\n";
  for (const auto& s : result.suites) {
    for (const auto& c : s.cases) {
      out << csv_field(s.suite) << "," << csv_field(c.report.identity_name);
      for (const auto& col : columns) {
        out << ",";
        const auto it = c.report.params.find(col);
        if (it != c.report.params.end()) out << fmt(it->second);
      }
      out << "," << fmt(c.report.lhs) << "," << fmt(c.report.rhs) << "," << fmt(c.report.abs_err) << ","
          << fmt(c.report.rel_err) << "," << fmt(c.report.tol) << "," << (c.report.pass ? "true" : "false") << ","
          << status_name(c.status) << "," << csv_field(message(c)) << "\n";
    }
  }
  return out.str();
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch == '\n' ? ' ' : ch;
  }
  return out;
}

std::string to_markdown(const RunResult& result) {
  std::ostringstream out;
  for (const auto& s : result.suites) {
    out << "## " << s.suite << "\n\n";
    out << "tolerance " << fmt(s.tolerance) << ", " << s.summary.pass << " pass, " << s.summary.fail << " fail, "
        << s.summary.error << " error\n\n";
    out << "| identity | params | lhs | rhs | rel_err | status | detail |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& c : s.cases) {
      std::string params;
      for (const auto& [k, v] : c.report.params) params += (params.empty() ? "" : ", ") + k + "=" + fmt(v);
      out << "| " << c.report.identity_name << " | " << md_cell(params) << " | " << fmt(c.report.lhs) << " | "
          << fmt(c.report.rhs) << " | " << fmt(c.report.rel_err) << " | " << status_name(c.status) << " | "
          << md_cell(message(c)) << " |\n";
    }
    out << "\nwall_ms: " << fmt(s.wall_ms) << "\n\n";
  }
  if (result.combined) {
    out << "## total\n\n" << result.summary.pass << " pass, " << result.summary.fail << " fail, "
        << result.summary.error << " error\n\nwall_ms: " << fmt(result.wall_ms) << "\n";
  }
  return out.str();
}

}  // namespace

std::string format_report(const RunResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return to_csv(result);
    case OutputFormat::markdown:
      return to_markdown(result);
    case OutputFormat::json:
      break;
  }
  json j;
  if (!result.combined && result.suites.size() == 1) {
    j = suite_json(result.suites.front());
  } else {
    json suites = json::array();
    for (const auto& s : result.suites) suites.push_back(suite_json(s));
    j["suites"] = suites;
    j["summary"] = summary_json(result.summary);
    j["wall_ms"] = result.wall_ms;
  }
  return j.dump(2) + "\n";
}

void write_report(const RunResult& result, OutputFormat format, const std::optional<std::string>& path) {
  const std::string text = format_report(result, format);
  if (!path || path->empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(*path);
  if (!out) throw std::runtime_error("cannot write report to '" + *path + "'");
  out << text;
}

}  // namespace hypercheck
