#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "csf/compositions.hpp"

namespace csf {

using Edge = std::pair<int, int>;

/// A simple undirected graph on vertices 0..n-1. Edges are stored with
/// u < v in sorted order, so equality is label-sensitive edge-set equality.
class Graph {
 public:
  Graph() = default;
  /// Throws ContractError on loops, duplicate edges, or out-of-range ends.
  Graph(int n_vertices, std::vector<Edge> edges);

  int order() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct RootedGraph {
  Graph graph;
  int root = 0;
};

/// A graph with two distinct roots; used as a piece of a chain.
struct DoubleRootedGraph {
  DoubleRootedGraph(Graph g, int u, int v);
  Graph graph;
  int root_u;
  int root_v;
};

// Basic graphs.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty_graph(int n);
/// The path with its two endpoints as roots; n >= 2.
DoubleRootedGraph rooted_path(int n);
/// K_n with roots 0 and 1; n >= 2.
DoubleRootedGraph rooted_complete(int n);

/// Copies H next to G with H's vertices shifted by |G|.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Identifies vertex `at` of G with vertex `h_vertex` of H; G keeps its labels
/// and H's other vertices are appended in increasing order. Returns the new
/// labels of H's vertices.
std::pair<Graph, std::vector<int>> glue(const Graph& g, int at, const Graph& h, int h_vertex);

/// G_1 + ... + G_l: identifies root_v of each piece with root_u of the next.
Graph chain(const std::vector<DoubleRootedGraph>& pieces);
/// K_{i_1} + ... + K_{i_l}; every part >= 2.
Graph k_chain(const Composition& I);
/// P^l(G, H): a path of length l joins the roots (l = 0 identifies them).
/// Vertices: G, then the l new path vertices, then the rest of H.
Graph conjoin(const RootedGraph& g, const RootedGraph& h, int l);

// Families. Cliques are rooted at vertex 0 (the center) and cycles at 0.
Graph lollipop(int a, int l);
/// The lollipop with the center's edges to clique vertices 1..k removed.
Graph melting_lollipop(int a, int l, int k);
Graph kpk(int a, int b, int l);
/// P_{g+1} + K_a + P_{h+1}.
Graph pkp(int g, int a, int h);
/// K_a + K_b + P_{h+1}.
Graph kkp(int a, int b, int h);
/// P^g(K_a, K_b^h).
Graph kpkp(int a, int g, int b, int h);
/// P^l(K_a, C_c).
Graph kpc(int a, int l, int c);
/// C_c with a pendant path of length l at cycle vertex 0.
Graph tadpole(int c, int l);
/// P^l(C_a, C_b).
Graph kayak(int a, int b, int l);
Graph infinity_graph(int a, int b);

/// Adds a vertex adjacent to v and to every neighbor of v.
Graph twin(const Graph& g, int v);
/// The path v_1..v_n twinned at v_l.
Graph tw_path(int n, int l);
Graph tw_cycle(int n);
/// The lollipop K_a^l twinned at the path vertex at distance h from the leaf.
Graph tw_lollipop(int a, int l, int h);
/// The tadpole C_c^l twinned at the cycle vertex at distance i from the center.
Graph tw_tadpole(int c, int l, int i);

// Edge-list text format: first line n_vertices, then "u v" per line
// (0-indexed, whitespace separated). Blank lines and '#' comments are skipped.
/// Throws ContractError naming the offending line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace csf
