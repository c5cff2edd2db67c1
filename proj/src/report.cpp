#include "vvmf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace vvmf {

namespace {

// Machine lines are whitespace separated, so spaces inside values are squeezed out.
std::string token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ') out += c;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

void Report::expect(std::string name, std::string expected, std::string computed) {
  const bool pass = expected == computed;
  checks_.push_back(Check{std::move(name), std::move(expected), std::move(computed), pass});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + "/" + copy.name;
    checks_.push_back(std::move(copy));
  }
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::string Report::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.pass) return c.name;
  }
  return "";
}

void Report::write_text(std::ostream& os) const {
  std::size_t wn = 5, we = 8;
  for (const auto& c : checks_) {
    wn = std::max(wn, c.name.size());
    we = std::max(we, c.expected.size());
  }
  os << std::left << std::setw(6) << "status" << ' ' << std::setw(static_cast<int>(wn)) << "check" << "  "
     << std::setw(static_cast<int>(we)) << "expected" << "  computed\n";
  for (const auto& c : checks_) {
    os << std::setw(6) << (c.pass ? "PASS" : "FAIL") << ' ' << std::setw(static_cast<int>(wn)) << c.name << "  "
       << std::setw(static_cast<int>(we)) << c.expected << "  " << c.computed << '\n';
  }
  os << std::right << (checks_.size() - failures()) << '/' << checks_.size() << " checks passed\n";
}

void Report::write_machine(std::ostream& os) const {
  for (const auto& c : checks_) {
    os << "CHECK " << token(c.name) << ' ' << token(c.expected) << ' ' << token(c.computed) << ' '
       << (c.pass ? "pass" : "fail") << '\n';
  }
}

}  // namespace vvmf
