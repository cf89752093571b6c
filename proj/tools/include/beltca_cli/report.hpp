#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "beltca/automorphism.hpp"
#include "beltca/relations.hpp"

namespace beltca::cli {

enum class Status { Pass, Fail, Inconclusive, Skip };
const char* to_string(Status s);

/// One line `suite=... check=... status=... witness=...`.
struct Record {
  std::string suite, check;
  Status status = Status::Pass;
  std::string witness;
};

/// Values containing whitespace, '"' or '=' are double-quoted with '\' escapes;
/// an empty value is written as "-".
std::string quote_value(const std::string& v);
std::string format_record(const Record& r);

class Report {
 public:
  void add(std::string suite, std::string check, Status status, std::string witness = {});
  void add(const std::string& suite, const std::string& check, bool ok, std::string witness = {}) {
    add(suite, check, ok ? Status::Pass : Status::Fail, std::move(witness));
  }
  /// Each entry becomes "<prefix>.<entry check>".
  void add(const std::string& suite, const std::string& prefix, const VerificationReport& r);
  void add(const std::string& suite, const std::string& prefix, const RelationSuiteReport& r);

  const std::vector<Record>& records() const { return records_; }
  std::size_t count(Status s) const;
  /// No failures and nothing inconclusive.
  bool ok() const { return count(Status::Fail) == 0 && count(Status::Inconclusive) == 0; }

  void write(std::ostream& out) const;
  /// "summary: N checks, P passed, F failed, I inconclusive, S skipped".
  std::string summary() const;

 private:
  std::vector<Record> records_;
};

}  // namespace beltca::cli
