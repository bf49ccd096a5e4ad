#include "qgc/classical.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qgc/report.hpp"

namespace qgc {
namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<Mask> adjacency_masks(const ClassicalGraph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

void guard_vertices(const ClassicalGraph& g, const SolverLimits& limits) {
  if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64)
    throw SizeGuardError("instance too large: " + std::to_string(g.vertex_count()) +
                         " vertices exceeds the solver limit of " +
                         std::to_string(std::min<std::size_t>(limits.max_vertices, 64)));
}

// Maximum clique by branch and bound with a greedy-colouring bound.
class MaxClique {
 public:
  explicit MaxClique(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  std::size_t solve() {
    Mask all = adj_.empty() ? 0 : (adj_.size() == 64 ? ~Mask{0} : bit(adj_.size()) - 1);
    expand(0, all);
    return best_;
  }

 private:
  void expand(std::size_t size, Mask candidates) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    // Colour classes give an upper bound on what `candidates` can add.
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (vertex, bound)
    Mask uncoloured = candidates;
    std::size_t colour = 0;
    while (uncoloured) {
      ++colour;
      Mask q = uncoloured;
      while (q) {
        const auto v = static_cast<std::size_t>(std::countr_zero(q));
        q &= ~bit(v);
        q &= ~adj_[v];
        uncoloured &= ~bit(v);
        order.emplace_back(v, colour);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (size + it->second <= best_) return;
      const std::size_t v = it->first;
      expand(size + 1, candidates & adj_[v]);
      candidates &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  std::size_t best_ = 0;
};

// Decides whether g has a b-fold colouring from a palette of c colours.
// Vertices are picked by saturation; a vertex may only introduce the
// lowest unused colours, which removes palette permutations.
class BFoldSearch {
 public:
  BFoldSearch(const ClassicalGraph& g, std::size_t b, std::size_t c, const SolverLimits& limits)
      : adj_(adjacency_masks(g)), n_(g.vertex_count()), b_(b), c_(c), limits_(limits),
        colour_(n_, 0), forbidden_(n_, 0) {}

  std::optional<BFoldAssignment> run() {
    if (!search(0, 0)) return std::nullopt;
    BFoldAssignment w{c_, b_, {}};
    for (std::size_t v = 0; v < n_; ++v) {
      std::vector<std::size_t> set;
      for (Mask m = colour_[v]; m; m &= m - 1) set.push_back(static_cast<std::size_t>(std::countr_zero(m)));
      w.colours.push_back(std::move(set));
    }
    return w;
  }

 private:
  bool search(std::size_t coloured, std::size_t used) {
    if (++nodes_ > limits_.max_nodes)
      throw SizeGuardError("instance too large: b-fold search exceeded " +
                           std::to_string(limits_.max_nodes) + " nodes");
    if (coloured == n_) return true;

    std::size_t pick = n_;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v]) continue;
      const int sat = std::popcount(forbidden_[v]);
      if (c_ - static_cast<std::size_t>(sat) < b_) return false;
      const auto deg = static_cast<std::size_t>(std::popcount(adj_[v]));
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }

    const Mask used_mask = used == 64 ? ~Mask{0} : bit(used) - 1;
    const Mask old_free = used_mask & ~forbidden_[pick];
    std::vector<std::size_t> old_colours;
    for (Mask m = old_free; m; m &= m - 1) old_colours.push_back(static_cast<std::size_t>(std::countr_zero(m)));

    // j fresh colours (used .. used+j-1) plus b-j previously used ones.
    for (std::size_t fresh = 0; fresh <= b_; ++fresh) {
      if (used + fresh > c_) break;
      const std::size_t reuse = b_ - fresh;
      if (reuse > old_colours.size()) continue;
      Mask fresh_mask = 0;
      for (std::size_t i = 0; i < fresh; ++i) fresh_mask |= bit(used + i);
      if (try_subsets(pick, old_colours, 0, reuse, fresh_mask, coloured, used + fresh)) return true;
    }
    return false;
  }

  bool try_subsets(std::size_t v, const std::vector<std::size_t>& pool, std::size_t start,
                   std::size_t remaining, Mask chosen, std::size_t coloured, std::size_t used) {
    if (remaining == 0) return assign(v, chosen, coloured, used);
    for (std::size_t i = start; i + remaining <= pool.size(); ++i)
      if (try_subsets(v, pool, i + 1, remaining - 1, chosen | bit(pool[i]), coloured, used)) return true;
    return false;
  }

  bool assign(std::size_t v, Mask set, std::size_t coloured, std::size_t used) {
    colour_[v] = set;
    std::vector<std::pair<std::size_t, Mask>> saved;
    for (Mask m = adj_[v]; m; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      saved.emplace_back(u, forbidden_[u]);
      forbidden_[u] |= set;
    }
    if (search(coloured + 1, used)) return true;
    for (const auto& [u, f] : saved) forbidden_[u] = f;
    colour_[v] = 0;
    return false;
  }

  std::vector<Mask> adj_;
  std::size_t n_, b_, c_;
  SolverLimits limits_;
  std::vector<Mask> colour_;
  std::vector<Mask> forbidden_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::categorical: return "categorical";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::strong: return "strong";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view name) {
  for (auto k : kAllProductKinds)
    if (to_string(k) == name) return k;
  throw InvalidInput("unknown product kind '" + std::string(name) +
                     "' (expected cartesian, categorical, lexicographic or strong)");
}

// ---------------------------------------------------------------------------

ClassicalGraph::ClassicalGraph(std::size_t vertex_count) : n_(vertex_count), adj_(n_ * n_, false) {
  if (n_ == 0) throw InvalidInput("a graph needs at least one vertex");
}

ClassicalGraph::ClassicalGraph(std::size_t vertex_count,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : ClassicalGraph(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void ClassicalGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_)
    throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
  if (u == v) throw InvalidInput("loops are not allowed (vertex " + std::to_string(u) + ")");
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = true;
  auto e = std::minmax(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), std::pair(e.first, e.second)),
                {e.first, e.second});
}

std::vector<std::size_t> ClassicalGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (adj_[v * n_ + u]) out.push_back(u);
  return out;
}

std::size_t ClassicalGraph::degree(std::size_t v) const { return neighbours(v).size(); }

ClassicalGraph cycle(std::size_t n) {
  ClassicalGraph g(n);
  if (n == 2) g.add_edge(0, 1);
  if (n >= 3)
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

ClassicalGraph complete(std::size_t n) {
  ClassicalGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

ClassicalGraph path(std::size_t n) {
  ClassicalGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

ClassicalGraph petersen() { return kneser(5, 2); }

std::uint64_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

double Lcg64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ClassicalGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidInput("edge probability must lie in [0, 1]");
  ClassicalGraph g(n);
  Lcg64 rng(seed);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.add_edge(i, j);
  return g;
}

// ---------------------------------------------------------------------------

bool is_valid_assignment(const ClassicalGraph& g, const BFoldAssignment& w) {
  if (w.colours.size() != g.vertex_count() || w.fold == 0) return false;
  for (const auto& set : w.colours) {
    if (set.size() != w.fold) return false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= w.palette_size) return false;
      if (i > 0 && set[i - 1] >= set[i]) return false;
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const auto& a = w.colours[u];
    const auto& b = w.colours[v];
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

std::size_t clique_number(const ClassicalGraph& g) {
  if (g.vertex_count() > 64) throw SizeGuardError("clique search is limited to 64 vertices");
  return MaxClique(adjacency_masks(g)).solve();
}

std::size_t independence_number(const ClassicalGraph& g) {
  if (g.vertex_count() > 64) throw SizeGuardError("independent-set search is limited to 64 vertices");
  auto adj = adjacency_masks(g);
  const std::size_t n = g.vertex_count();
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  for (std::size_t v = 0; v < n; ++v) adj[v] = all & ~adj[v] & ~bit(v);
  return MaxClique(std::move(adj)).solve();
}

std::optional<BFoldAssignment> bfold_colouring(const ClassicalGraph& g, std::size_t b,
                                               std::size_t palette, const SolverLimits& limits) {
  if (b == 0) throw InvalidInput("fold must be at least 1");
  guard_vertices(g, limits);
  if (b > limits.max_fold) throw SizeGuardError("instance too large: fold " + std::to_string(b));
  if (palette > 64) throw SizeGuardError("instance too large: palette of " + std::to_string(palette));
  if (palette < b) return std::nullopt;
  auto w = BFoldSearch(g, b, palette, limits).run();
  if (w && !is_valid_assignment(g, *w))
    throw std::logic_error("b-fold search produced an invalid witness");
  return w;
}

BFoldResult bfold_exact(const ClassicalGraph& g, std::size_t b, const SolverLimits& limits) {
  if (b == 0) throw InvalidInput("fold must be at least 1");
  guard_vertices(g, limits);
  if (b > limits.max_fold) throw SizeGuardError("instance too large: fold " + std::to_string(b));
  const std::size_t n = g.vertex_count();
  // Each colour class is independent: c * alpha >= b * n. Cliques need b*omega.
  const std::size_t alpha = independence_number(g);
  std::size_t c = std::max(b * clique_number(g), (b * n + alpha - 1) / alpha);
  for (;; ++c) {
    if (auto w = bfold_colouring(g, b, c, limits)) return {c, std::move(*w)};
  }
}

std::size_t chromatic_exact(const ClassicalGraph& g, const SolverLimits& limits) {
  return bfold_exact(g, 1, limits).colours;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> subsets(std::size_t c, std::size_t b) {
  std::vector<std::vector<std::size_t>> out;
  if (b > c) return out;
  std::vector<std::size_t> cur(b);
  for (std::size_t i = 0; i < b; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = b;
    while (i > 0 && cur[i - 1] == c - b + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < b; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

ClassicalGraph kneser(std::size_t c, std::size_t b) {
  if (b == 0 || c < b) throw InvalidInput("Kneser graph needs c >= b >= 1");
  const auto sets = subsets(c, b);
  if (sets.size() > 5000) throw SizeGuardError("instance too large: Kneser graph with " +
                                               std::to_string(sets.size()) + " vertices");
  ClassicalGraph g(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      if (common.empty()) g.add_edge(i, j);
    }
  return g;
}

bool kneser_hom_check(const ClassicalGraph& g, std::size_t c, std::size_t b, const SolverLimits& limits) {
  guard_vertices(g, limits);
  const ClassicalGraph k = kneser(c, b);
  const std::size_t n = g.vertex_count();
  const std::size_t m = k.vertex_count();

  // Breadth-first order so each vertex after a component root has an
  // already-mapped neighbour; roots may map to vertex 0 by transitivity.
  std::vector<std::size_t> order;
  std::vector<bool> root(n, false), seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    root[s] = true;
    seen[s] = true;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      const std::size_t v = order[head++];
      for (auto u : g.neighbours(v))
        if (!seen[u]) {
          seen[u] = true;
          order.push_back(u);
        }
    }
  }

  std::vector<std::size_t> image(n, m);
  std::uint64_t nodes = 0;
  auto extend = [&](auto&& self, std::size_t pos) -> bool {
    if (++nodes > limits.max_nodes) throw SizeGuardError("instance too large: Kneser search exceeded node budget");
    if (pos == n) return true;
    const std::size_t v = order[pos];
    const std::size_t last = root[v] ? 1 : m;
    for (std::size_t t = 0; t < last; ++t) {
      bool ok = true;
      for (auto u : g.neighbours(v))
        if (image[u] != m && !k.adjacent(image[u], t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[v] = t;
      if (self(self, pos + 1)) return true;
      image[v] = m;
    }
    return false;
  };
  return extend(extend, 0);
}

ClassicalGraph classical_product(const ClassicalGraph& g, const ClassicalGraph& h, ProductKind kind) {
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
  ClassicalGraph out(ng * nh);
  for (std::size_t v = 0; v < ng; ++v)
    for (std::size_t a = 0; a < nh; ++a)
      for (std::size_t w = 0; w < ng; ++w)
        for (std::size_t b = 0; b < nh; ++b) {
          const std::size_t x = v * nh + a, y = w * nh + b;
          if (x >= y) continue;
          const bool gv = g.adjacent(v, w), hv = h.adjacent(a, b);
          const bool cart = (gv && a == b) || (v == w && hv);
          bool edge = false;
          switch (kind) {
            case ProductKind::cartesian: edge = cart; break;
            case ProductKind::categorical: edge = gv && hv; break;
            case ProductKind::lexicographic: edge = gv || (v == w && hv); break;
            case ProductKind::strong: edge = cart || (gv && hv); break;
          }
          if (edge) out.add_edge(x, y);
        }
  return out;
}

}  // namespace qgc
