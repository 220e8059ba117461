#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cascnet/common.hpp"
#include "cascnet/rng.hpp"

namespace cascnet {

struct Edge {
  int node = 0;  // neighbor id (child in out-lists, parent in in-lists)
  double p = 0.0;
};

// Directed graph with per-edge infection probabilities p_ji in (0,1].
// Nodes are dense ids 0..n-1; self-edges are rejected. Adjacency is kept
// both ways (children for simulation, parents for estimation), sorted by
// neighbor id. Build it fully, then treat it as immutable; const graphs
// are safe to share across threads.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(int n) : out_(n), in_(n) {
    if (n < 0) throw DomainError("graph: negative node count");
  }

  int node_count() const { return static_cast<int>(out_.size()); }
  int edge_count() const { return edge_count_; }

  void add_edge(int from, int to, double p) {
    check_node(from);
    check_node(to);
    if (from == to) throw DomainError("graph: self-edge " + std::to_string(from));
    if (!(p > 0.0 && p <= 1.0))
      throw DomainError("graph: edge probability must be in (0,1], got " +
                        std::to_string(p));
    if (has_edge(from, to))
      throw DomainError("graph: duplicate edge " + std::to_string(from) + "->" +
                        std::to_string(to));
    insert_sorted(out_[from], {to, p});
    insert_sorted(in_[to], {from, p});
    ++edge_count_;
  }

  bool has_edge(int from, int to) const {
    return find(out_[from], to) != nullptr;
  }

  // 0 if the edge is absent.
  double edge_prob(int from, int to) const {
    const Edge* e = find(out_[from], to);
    return e ? e->p : 0.0;
  }

  const std::vector<Edge>& children(int j) const { return out_[j]; }
  const std::vector<Edge>& parents(int i) const { return in_[i]; }

  std::vector<int> parent_ids(int i) const {
    std::vector<int> ids;
    ids.reserve(in_[i].size());
    for (const Edge& e : in_[i]) ids.push_back(e.node);
    return ids;
  }

  std::vector<std::tuple<int, int, double>> edges() const {
    std::vector<std::tuple<int, int, double>> es;
    es.reserve(edge_count_);
    for (int j = 0; j < node_count(); ++j)
      for (const Edge& e : out_[j]) es.emplace_back(j, e.node, e.p);
    return es;
  }

 private:
  void check_node(int v) const {
    if (v < 0 || v >= node_count())
      throw DomainError("graph: node " + std::to_string(v) + " out of range");
  }
  static const Edge* find(const std::vector<Edge>& list, int node) {
    auto it = std::lower_bound(list.begin(), list.end(), node,
                               [](const Edge& e, int v) { return e.node < v; });
    return (it != list.end() && it->node == node) ? &*it : nullptr;
  }
  static void insert_sorted(std::vector<Edge>& list, Edge e) {
    auto it = std::lower_bound(list.begin(), list.end(), e.node,
                               [](const Edge& x, int v) { return x.node < v; });
    list.insert(it, e);
  }

  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  int edge_count_ = 0;
};

// Candidate parent sets S_i. When paired with a ground-truth graph the true
// parents must be contained in candidates[i]. Lists are sorted and never
// contain i itself.
struct SuperGraph {
  int n = 0;
  std::vector<std::vector<int>> candidates;

  static SuperGraph full(int n) {
    SuperGraph sg;
    sg.n = n;
    sg.candidates.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != i) sg.candidates[i].push_back(j);
    return sg;
  }
};

struct UndirectedGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized (min,max) pairs

  void add_edge(int a, int b) {
    if (a == b) throw DomainError("undirected graph: self-loop");
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  bool has_edge(int a, int b) const {
    return edges.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> ns;
    for (const auto& [a, b] : edges) {
      if (a == v) ns.push_back(b);
      if (b == v) ns.push_back(a);
    }
    std::sort(ns.begin(), ns.end());
    return ns;
  }
};

// alpha = 1 - max_i sum_{k in V_i} p_ki. Positive alpha means every node's
// incoming probability mass is below 1 (correlation decay); may be <= 0.
inline double correlation_decay_alpha(const WeightedDigraph& g) {
  double max_sum = 0.0;
  for (int i = 0; i < g.node_count(); ++i) {
    double s = 0.0;
    for (const Edge& e : g.parents(i)) s += e.p;
    max_sum = std::max(max_sum, s);
  }
  return 1.0 - max_sum;
}

// Undirected edge {i,j} iff (i,j) or (j,i) is a directed edge, or i and j
// share a common child.
inline UndirectedGraph moralize(const WeightedDigraph& g) {
  UndirectedGraph m;
  m.n = g.node_count();
  for (const auto& [from, to, p] : g.edges()) m.add_edge(from, to);
  for (int child = 0; child < g.node_count(); ++child) {
    const auto& ps = g.parents(child);
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = a + 1; b < ps.size(); ++b)
        m.add_edge(ps[a].node, ps[b].node);
  }
  return m;
}

// Per-edge probability assignment for generators.
struct EdgeProbLaw {
  double lo = 0.0;
  double hi = 0.0;  // lo == hi means the constant law

  static EdgeProbLaw constant(double p) { return {p, p}; }
  static EdgeProbLaw uniform(double lo, double hi) { return {lo, hi}; }

  void validate() const {
    if (!(lo > 0.0 && hi <= 1.0 && lo <= hi))
      throw DomainError("edge probability law must lie in (0,1]");
  }
  double draw(Rng& rng) const { return lo == hi ? lo : rng.uniform_in(lo, hi); }
};

// w x h lattice, 4-neighbor adjacency, both edge directions present.
// Node (x, y) has id y*w + x.
inline WeightedDigraph generate_grid2d(int w, int h, EdgeProbLaw law,
                                       uint64_t seed) {
  if (w < 1 || h < 1) throw DomainError("grid2d: dimensions must be positive");
  law.validate();
  Rng rng = Rng::stream(seed, 0);
  WeightedDigraph g(w * h);
  auto id = [w](int x, int y) { return y * w + x; };
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) {
        g.add_edge(id(x, y), id(x + 1, y), law.draw(rng));
        g.add_edge(id(x + 1, y), id(x, y), law.draw(rng));
      }
      if (y + 1 < h) {
        g.add_edge(id(x, y), id(x, y + 1), law.draw(rng));
        g.add_edge(id(x, y + 1), id(x, y), law.draw(rng));
      }
    }
  return g;
}

// Every node receives exactly d parents, sampled uniformly among the other
// nodes with rejection of self-loops and duplicates (bounded retries).
inline WeightedDigraph generate_random_regular(int n, int d, EdgeProbLaw law,
                                               uint64_t seed) {
  if (n < 1 || d < 0) throw DomainError("random_regular: bad parameters");
  if (d > n - 1)
    throw DomainError("random_regular: in-degree " + std::to_string(d) +
                      " infeasible with n=" + std::to_string(n));
  law.validate();
  Rng rng = Rng::stream(seed, 0);
  WeightedDigraph g(n);
  const int max_attempts = 100 * (d + 1);
  for (int i = 0; i < n; ++i) {
    std::vector<int> chosen;
    int attempts = 0;
    while (static_cast<int>(chosen.size()) < d) {
      if (++attempts > max_attempts)
        throw DomainError("random_regular: sampling retries exhausted");
      int j = static_cast<int>(rng.uniform_below(n));
      if (j == i || std::find(chosen.begin(), chosen.end(), j) != chosen.end())
        continue;
      chosen.push_back(j);
    }
    std::sort(chosen.begin(), chosen.end());
    for (int j : chosen) g.add_edge(j, i, law.draw(rng));
  }
  return g;
}

// Rooted random tree; edges point parent -> child, every node has at most
// max_children children. Node 0 is the root.
inline WeightedDigraph generate_random_tree(int n, int max_children,
                                            EdgeProbLaw law, uint64_t seed) {
  if (n < 1 || max_children < 1) throw DomainError("random_tree: bad parameters");
  law.validate();
  Rng rng = Rng::stream(seed, 0);
  WeightedDigraph g(n);
  std::vector<int> child_count(n, 0);
  std::vector<int> open;  // nodes that can still take a child
  open.push_back(0);
  for (int k = 1; k < n; ++k) {
    if (open.empty())
      throw DomainError("random_tree: no nodes with free child slots");
    const size_t pos = rng.uniform_below(open.size());
    const int parent = open[pos];
    g.add_edge(parent, k, law.draw(rng));
    if (++child_count[parent] >= max_children)
      open.erase(open.begin() + pos);
    if (max_children > 0) open.push_back(k);
  }
  return g;
}

inline WeightedDigraph generate_erdos_renyi(int n, double p_edge,
                                            EdgeProbLaw law, uint64_t seed) {
  if (n < 1) throw DomainError("erdos_renyi: n must be positive");
  if (!(p_edge >= 0.0 && p_edge <= 1.0))
    throw DomainError("erdos_renyi: p_edge must be in [0,1]");
  law.validate();
  Rng rng = Rng::stream(seed, 0);
  WeightedDigraph g(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j && rng.bernoulli(p_edge)) g.add_edge(j, i, law.draw(rng));
  return g;
}

// S_i = V_i plus extra_per_node uniformly sampled non-parents.
inline SuperGraph embed_supergraph(const WeightedDigraph& g, int extra_per_node,
                                   uint64_t seed) {
  if (extra_per_node < 0) throw DomainError("embed_supergraph: negative extra");
  const int n = g.node_count();
  SuperGraph sg;
  sg.n = n;
  sg.candidates.resize(n);
  Rng rng = Rng::stream(seed, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> cand = g.parent_ids(i);
    std::vector<int> pool;
    pool.reserve(n);
    for (int j = 0; j < n; ++j)
      if (j != i && !g.has_edge(j, i)) pool.push_back(j);
    if (static_cast<int>(pool.size()) < extra_per_node)
      throw DomainError("embed_supergraph: node " + std::to_string(i) +
                        " has only " + std::to_string(pool.size()) +
                        " non-parents, need " + std::to_string(extra_per_node));
    for (int k = 0; k < extra_per_node; ++k) {
      const size_t pos = rng.uniform_below(pool.size());
      cand.push_back(pool[pos]);
      pool.erase(pool.begin() + pos);
    }
    std::sort(cand.begin(), cand.end());
    sg.candidates[i] = std::move(cand);
  }
  return sg;
}

}  // namespace cascnet
