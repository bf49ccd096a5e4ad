#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qgc {

/// One named check of a verifier: the worst residual seen and the bound it
/// was held to.
struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool passed = true;
  std::string detail;
};

/// Structured outcome of a verifier. Failure of a check is data, not an
/// exception; callers decide what a failed report means.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  /// Records a residual check; passes iff residual <= tol.
  void add(std::string name, double residual, double tol, std::string detail = {});
  /// Records a predicate that has no meaningful residual.
  void add_flag(std::string name, bool ok, std::string detail = {});
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  double max_residual() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  const std::string& subject() const { return subject_; }

  /// Aligned human-readable table, one line per check.
  std::string to_string() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised by the exact solvers instead of returning an unproven answer.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A constructive transformation produced an object that failed its own
/// verifier. Carries the report so the residuals are not lost.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, VerificationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

}  // namespace qgc
