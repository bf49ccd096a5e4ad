#pragma once

// Test-side oracles. These deliberately avoid the library's solvers and
// product code: plain enumeration straight from the definitions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Edge = std::pair<std::size_t, std::size_t>;
using EdgeSet = std::set<Edge>;

inline Edge ordered(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline bool adjacent(const EdgeSet& e, std::size_t u, std::size_t v) { return e.count(ordered(u, v)) > 0; }

inline EdgeSet cycle_edges(std::size_t n) {
  EdgeSet e;
  if (n == 2) e.insert({0, 1});
  if (n >= 3)
    for (std::size_t i = 0; i < n; ++i) e.insert(ordered(i, (i + 1) % n));
  return e;
}

inline EdgeSet complete_edges(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.insert({i, j});
  return e;
}

inline EdgeSet path_edges(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.insert({i, i + 1});
  return e;
}

/// Product edge rules as stated in words: "(v,a) ~ (w,b) iff ...".
enum class Rule { cartesian, categorical, lexicographic, strong };

inline EdgeSet product_edges(std::size_t ng, const EdgeSet& eg, std::size_t nh, const EdgeSet& eh, Rule rule) {
  EdgeSet out;
  auto id = [nh](std::size_t v, std::size_t a) { return v * nh + a; };
  for (std::size_t v = 0; v < ng; ++v)
    for (std::size_t a = 0; a < nh; ++a)
      for (std::size_t w = 0; w < ng; ++w)
        for (std::size_t b = 0; b < nh; ++b) {
          if (v == w && a == b) continue;
          const bool vw = adjacent(eg, v, w), ab = adjacent(eh, a, b);
          bool e = false;
          switch (rule) {
            case Rule::cartesian: e = (v == w && ab) || (a == b && vw); break;
            case Rule::categorical: e = vw && ab; break;
            case Rule::lexicographic: e = vw || (v == w && ab); break;
            case Rule::strong: e = (v == w && ab) || (a == b && vw) || (vw && ab); break;
          }
          if (e) out.insert(ordered(id(v, a), id(w, b)));
        }
  return out;
}

/// Smallest c admitting a b-fold colouring, by plain backtracking over
/// b-subsets of [c] in vertex order. Only the first vertex is pinned to
/// {0..b-1} (valid by palette symmetry). Meant for graphs of <= 10 vertices.
inline std::size_t bfold_chromatic(std::size_t n, const EdgeSet& edges, std::size_t b) {
  for (std::size_t c = b;; ++c) {
    std::vector<unsigned> sets;
    for (unsigned m = 0; m < (1u << c); ++m)
      if (static_cast<std::size_t>(__builtin_popcount(m)) == b) sets.push_back(m);
    std::vector<unsigned> assign(n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t v) -> bool {
      if (v == n) return true;
      for (unsigned s : sets) {
        if (v == 0 && s != (1u << b) - 1) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u)
          if (adjacent(edges, u, v) && (assign[u] & s)) ok = false;
        if (!ok) continue;
        assign[v] = s;
        if (go(v + 1)) return true;
      }
      return false;
    };
    if (go(0)) return c;
  }
}

inline std::size_t chromatic(std::size_t n, const EdgeSet& edges) { return bfold_chromatic(n, edges, 1); }

/// Haar-ish random unitary from the QR of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < n; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return q;
}

inline Eigen::MatrixXcd random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
  return a;
}

}  // namespace oracle
