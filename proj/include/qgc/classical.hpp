#pragma once

// Finite simple graphs and exact colouring oracles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qgc {

enum class ProductKind { cartesian, categorical, lexicographic, strong };

std::string_view to_string(ProductKind kind);
/// Throws InvalidInput for an unknown name.
ProductKind parse_product_kind(std::string_view name);
inline constexpr ProductKind kAllProductKinds[] = {ProductKind::cartesian, ProductKind::categorical,
                                                   ProductKind::lexicographic, ProductKind::strong};

/// Undirected graph on vertices 0..n-1 without loops or parallel edges.
class ClassicalGraph {
 public:
  explicit ClassicalGraph(std::size_t vertex_count = 1);
  /// Duplicate edges are merged; loops and out-of-range endpoints throw
  /// InvalidInput.
  ClassicalGraph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Sorted pairs (u, v) with u < v.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
  std::vector<std::size_t> neighbours(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  void add_edge(std::size_t u, std::size_t v);

  friend bool operator==(const ClassicalGraph& a, const ClassicalGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<bool> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

ClassicalGraph cycle(std::size_t n);
ClassicalGraph complete(std::size_t n);
ClassicalGraph path(std::size_t n);
ClassicalGraph petersen();
/// G(n, p) driven by Lcg64; pairs (i, j), i < j, are visited in
/// lexicographic order and kept when the next uniform draw is < p.
ClassicalGraph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Knuth's MMIX linear congruential generator:
/// state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64);
/// uniform() returns the top 53 bits of the new state scaled to [0, 1).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();

 private:
  std::uint64_t state_;
};

/// b colours per vertex, drawn from 0..palette_size-1 (each set sorted).
struct BFoldAssignment {
  std::size_t palette_size = 0;
  std::size_t fold = 1;
  std::vector<std::vector<std::size_t>> colours;
};

/// True iff every set has exactly `fold` distinct colours below
/// palette_size and adjacent vertices get disjoint sets.
bool is_valid_assignment(const ClassicalGraph& g, const BFoldAssignment& w);

struct SolverLimits {
  std::size_t max_vertices = 40;
  std::size_t max_fold = 6;
  /// Search-tree nodes before giving up with SizeGuardError.
  std::uint64_t max_nodes = 200'000'000;
};

struct BFoldResult {
  std::size_t colours = 0;
  BFoldAssignment witness;
};

/// Exact χ_b(G) with a validated witness. Throws SizeGuardError rather
/// than return an unproven value.
BFoldResult bfold_exact(const ClassicalGraph& g, std::size_t b, const SolverLimits& limits = {});
std::size_t chromatic_exact(const ClassicalGraph& g, const SolverLimits& limits = {});
/// Whether a b-fold colouring with exactly the given palette exists.
std::optional<BFoldAssignment> bfold_colouring(const ClassicalGraph& g, std::size_t b,
                                               std::size_t palette, const SolverLimits& limits = {});

std::size_t clique_number(const ClassicalGraph& g);
std::size_t independence_number(const ClassicalGraph& g);

/// b-subsets of {0..c-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t c, std::size_t b);
/// Vertex i is subsets(c, b)[i]; edges join disjoint subsets.
ClassicalGraph kneser(std::size_t c, std::size_t b);
/// Backtracking search for a homomorphism G -> K_{c,b}.
bool kneser_hom_check(const ClassicalGraph& g, std::size_t c, std::size_t b,
                      const SolverLimits& limits = {});

/// Vertex (v, w) is numbered v * |V(H)| + w.
ClassicalGraph classical_product(const ClassicalGraph& g, const ClassicalGraph& h, ProductKind kind);

}  // namespace qgc
