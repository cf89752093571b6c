#include "beltca_cli/report.hpp"

#include <algorithm>

namespace beltca::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::string quote_value(const std::string& v) {
  if (v.empty()) return "-";
  const bool plain = std::none_of(v.begin(), v.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '"' || c == '=' || c == '\\';
  });
  if (plain) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string format_record(const Record& r) {
  return "suite=" + quote_value(r.suite) + " check=" + quote_value(r.check) + " status=" + to_string(r.status) +
         " witness=" + quote_value(r.witness);
}

void Report::add(std::string suite, std::string check, Status status, std::string witness) {
  records_.push_back({std::move(suite), std::move(check), status, std::move(witness)});
}

void Report::add(const std::string& suite, const std::string& prefix, const VerificationReport& r) {
  for (const auto& e : r.entries) add(suite, prefix + "." + e.check, e.passed, e.detail);
}

void Report::add(const std::string& suite, const std::string& prefix, const RelationSuiteReport& r) {
  for (const auto& c : r.checks) {
    const Status s = c.status == CheckStatus::Pass   ? Status::Pass
                     : c.status == CheckStatus::Fail ? Status::Fail
                                                     : Status::Inconclusive;
    add(suite, prefix + "." + c.kind + "." + c.word, s, c.witness);
  }
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [s](const Record& r) { return r.status == s; }));
}

void Report::write(std::ostream& out) const {
  for (const auto& r : records_) out << format_record(r) << '\n';
}

std::string Report::summary() const {
  return "summary: " + std::to_string(records_.size()) + " checks, " + std::to_string(count(Status::Pass)) +
         " passed, " + std::to_string(count(Status::Fail)) + " failed, " +
         std::to_string(count(Status::Inconclusive)) + " inconclusive, " + std::to_string(count(Status::Skip)) +
         " skipped";
}

}  // namespace beltca::cli
