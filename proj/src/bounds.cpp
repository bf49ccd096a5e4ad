#include "qgc/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace qgc {
namespace {

std::string num(std::size_t x) { return std::to_string(x); }

BoundsLine le(std::string name, const std::string& lhs_text, std::size_t lhs, const std::string& rhs_text,
              std::size_t rhs) {
  return {std::move(name), lhs_text + " = " + num(lhs) + " <= " + num(rhs) + " = " + rhs_text, lhs <= rhs,
          lhs == rhs};
}

}  // namespace

bool BoundsReport::all_hold() const {
  return std::all_of(lines.begin(), lines.end(), [](const BoundsLine& l) { return l.holds; });
}

Json BoundsReport::to_json() const {
  Json ls = Json::array();
  for (const auto& l : lines)
    ls.push_back({{"name", l.name}, {"statement", l.statement}, {"holds", l.holds}, {"tight", l.tight}});
  return {{"v", kSchemaVersion},
          {"kind", "bounds_report"},
          {"vertices", {n_g, n_h}},
          {"chi", {{"G", chi_g},
                   {"H", chi_h},
                   {"cartesian", chi_cartesian},
                   {"categorical", chi_categorical},
                   {"lexicographic", chi_lexicographic},
                   {"strong", chi_strong},
                   {"chi_b_G", chi_b_g}}},
          {"inequalities", ls},
          {"all_hold", all_hold()}};
}

std::string BoundsReport::table() const {
  std::ostringstream out;
  out << "G: " << n_g << " vertices, chi = " << chi_g << "; H: " << n_h << " vertices, chi = " << chi_h << "\n";
  std::size_t width = 0;
  for (const auto& l : lines) width = std::max(width, l.name.size());
  for (const auto& l : lines) {
    out << (l.holds ? "HOLDS " : "FAILS ") << l.name << std::string(width - l.name.size() + 2, ' ') << l.statement
        << (l.tight ? "  (tight)" : "") << "\n";
  }
  out << "verdict: " << (all_hold() ? "all inequalities hold" : "VIOLATION") << "\n";
  return out.str();
}

BoundsReport bounds_report(const ClassicalGraph& g, const ClassicalGraph& h, const SolverLimits& limits) {
  BoundsReport r;
  r.n_g = g.vertex_count();
  r.n_h = h.vertex_count();
  r.chi_g = chromatic_exact(g, limits);
  r.chi_h = chromatic_exact(h, limits);
  r.chi_cartesian = chromatic_exact(classical_product(g, h, ProductKind::cartesian), limits);
  r.chi_categorical = chromatic_exact(classical_product(g, h, ProductKind::categorical), limits);
  r.chi_lexicographic = chromatic_exact(classical_product(g, h, ProductKind::lexicographic), limits);
  r.chi_strong = chromatic_exact(classical_product(g, h, ProductKind::strong), limits);
  r.chi_b_g = bfold_exact(g, r.chi_h, limits).colours;

  const std::size_t mx = std::max(r.chi_g, r.chi_h), mn = std::min(r.chi_g, r.chi_h), prod = r.chi_g * r.chi_h;
  const std::string b = num(r.chi_h);
  r.lines.push_back(le("sabidussi", "max(chi(G), chi(H))", mx, "chi(G [] H)", r.chi_cartesian));
  r.lines.push_back(le("hedetniemi", "chi(G x H)", r.chi_categorical, "min(chi(G), chi(H))", mn));
  r.lines.push_back(le("strong_lower", "max(chi(G), chi(H))", mx, "chi(G [x] H)", r.chi_strong));
  r.lines.push_back(le("strong_upper", "chi(G [x] H)", r.chi_strong, "chi(G) chi(H)", prod));
  r.lines.push_back(le("cartesian_upper", "chi(G [] H)", r.chi_cartesian, "chi(G) chi(H)", prod));
  r.lines.push_back(le("lexicographic_bound", "chi(G[H])", r.chi_lexicographic, "chi_" + b + "(G)", r.chi_b_g));
  r.lines.push_back(le("bfold_upper", "chi_" + b + "(G)", r.chi_b_g, "chi(G) chi(H)", prod));
  r.lines.push_back({"lexicographic_identity",
                     "chi(G[H]) = " + num(r.chi_lexicographic) + (r.chi_lexicographic == r.chi_b_g ? " = " : " != ") +
                         num(r.chi_b_g) + " = chi_" + b + "(G)",
                     r.chi_lexicographic == r.chi_b_g, r.chi_lexicographic == r.chi_b_g});
  return r;
}

}  // namespace qgc
