#pragma once

#include <string>
#include <vector>

namespace polylaw::report {

// Outcome of a law-checking run: per-tag counters plus a capped list of
// concrete violation witnesses. A report is clean iff nothing failed.
struct Report {
  struct TagStat {
    std::string tag;
    long long checked = 0;
    long long failed = 0;
  };
  struct Violation {
    std::string tag;
    std::string witness;
  };

  std::vector<TagStat> stats;
  std::vector<Violation> violations;
  std::size_t witness_cap = 32;

  void pass(const std::string& tag);
  void fail(const std::string& tag, const std::string& witness);
  void check(const std::string& tag, bool ok, const std::string& witness);
  void merge(const Report& other);
  bool clean() const;
  long long total_checked() const;

  std::string to_text() const;
  std::string to_json() const;  // stable field order, machine-readable
};

}  // namespace polylaw::report
