#pragma once

// Exact chromatic data for two classical graphs and their four products,
// checked against the product inequalities.

#include <string>
#include <vector>

#include "qgc/classical.hpp"
#include "qgc/io.hpp"

namespace qgc {

struct BoundsLine {
  std::string name;
  std::string statement;  // with the numbers filled in
  bool holds = true;
  bool tight = false;     // holds with equality
};

struct BoundsReport {
  std::size_t n_g = 0, n_h = 0;
  std::size_t chi_g = 0, chi_h = 0;
  std::size_t chi_cartesian = 0, chi_categorical = 0, chi_lexicographic = 0, chi_strong = 0;
  /// χ_b(G) with b = χ(H).
  std::size_t chi_b_g = 0;
  std::vector<BoundsLine> lines;

  bool all_hold() const;
  Json to_json() const;
  /// Human-readable table, one line per inequality.
  std::string table() const;
};

/// Throws SizeGuardError when a product exceeds the solver limits.
BoundsReport bounds_report(const ClassicalGraph& g, const ClassicalGraph& h, const SolverLimits& limits = {});

}  // namespace qgc
