#include "qgc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qgc {

void VerificationReport::add(std::string name, double residual, double tol, std::string detail) {
  checks_.push_back({std::move(name), residual, tol, residual <= tol, std::move(detail)});
}

void VerificationReport::add_flag(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + c.name;
    checks_.push_back(std::move(copy));
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

double VerificationReport::max_residual() const {
  double worst = 0.0;
  for (const auto& c : checks_) worst = std::max(worst, c.residual);
  return worst;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_string() const {
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.name.size());
  std::ostringstream out;
  if (!subject_.empty()) out << subject_ << "\n";
  char buf[64];
  for (const auto& c : checks_) {
    out << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name
        << std::string(width - c.name.size(), ' ');
    std::snprintf(buf, sizeof buf, "  residual %.3e  tol %.1e", c.residual, c.tol);
    out << buf;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << "  verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace qgc
