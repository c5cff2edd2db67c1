#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vvmf {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

class Report {
 public:
  /// Passes iff expected == computed.
  void expect(std::string name, std::string expected, std::string computed);
  void add(Check check) { checks_.push_back(std::move(check)); }
  /// Appends every check of `other`, prefixing names with "prefix/".
  void merge(const Report& other, const std::string& prefix = "");

  const std::vector<Check>& checks() const { return checks_; }
  bool ok() const;
  std::size_t failures() const;
  /// Name of the first failing check, or "" if none failed.
  std::string first_failure() const;

  /// Aligned "status name expected computed" table.
  void write_text(std::ostream& os) const;
  /// One "CHECK name expected computed status" line per check.
  void write_machine(std::ostream& os) const;

 private:
  std::vector<Check> checks_;
};

}  // namespace vvmf
