#include "csf/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "csf/errors.hpp"

namespace csf {

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  require(n_ >= 0, "Graph: negative order");
  for (auto& [u, v] : edges_) {
    require(0 <= u && u < n_ && 0 <= v && v < n_, "Graph: edge endpoint out of range");
    require(u != v, "Graph: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(), "Graph: duplicate edge");
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

DoubleRootedGraph::DoubleRootedGraph(Graph g, int u, int v) : graph(std::move(g)), root_u(u), root_v(v) {
  require(u != v, "DoubleRootedGraph: roots must be distinct");
  require(0 <= u && u < graph.order() && 0 <= v && v < graph.order(), "DoubleRootedGraph: root out of range");
}

Graph path(int n) {
  require(n >= 1, "path: need n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  require(n >= 3, "cycle: need n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  require(n >= 1, "complete: need n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, std::move(e));
}

Graph empty_graph(int n) { return Graph(n, {}); }

DoubleRootedGraph rooted_path(int n) {
  require(n >= 2, "rooted_path: need n >= 2");
  return DoubleRootedGraph(path(n), 0, n - 1);
}

DoubleRootedGraph rooted_complete(int n) {
  require(n >= 2, "rooted_complete: need n >= 2");
  return DoubleRootedGraph(complete(n), 0, 1);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), std::move(e));
}

std::pair<Graph, std::vector<int>> glue(const Graph& g, int at, const Graph& h, int h_vertex) {
  require(0 <= at && at < g.order(), "glue: vertex of G out of range");
  require(0 <= h_vertex && h_vertex < h.order(), "glue: vertex of H out of range");
  std::vector<int> label(h.order());
  int next = g.order();
  for (int x = 0; x < h.order(); ++x) label[x] = x == h_vertex ? at : next++;
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(label[u], label[v]);
  return {Graph(next, std::move(e)), std::move(label)};
}

namespace {

// Appends a path of `len` new vertices starting at `at`; returns the far end.
std::pair<Graph, int> attach_path(const Graph& g, int at, int len) {
  if (len == 0) return {g, at};
  auto [out, label] = glue(g, at, path(len + 1), 0);
  return {out, label[len]};
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& drop) {
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) keep.push_back(e);
  }
  return Graph(g.order(), std::move(keep));
}

}  // namespace

Graph chain(const std::vector<DoubleRootedGraph>& pieces) {
  require(!pieces.empty(), "chain: no pieces");
  Graph g = pieces.front().graph;
  int tail = pieces.front().root_v;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    auto [next, label] = glue(g, tail, pieces[i].graph, pieces[i].root_u);
    g = std::move(next);
    tail = label[pieces[i].root_v];
  }
  return g;
}

Graph k_chain(const Composition& I) {
  require(!I.empty(), "k_chain: empty composition");
  std::vector<DoubleRootedGraph> pieces;
  for (int p : I.parts()) {
    require(p >= 2, "k_chain: every part must be at least 2");
    pieces.push_back(rooted_complete(p));
  }
  return chain(pieces);
}

Graph conjoin(const RootedGraph& g, const RootedGraph& h, int l) {
  require(l >= 0, "conjoin: negative path length");
  auto [with_path, end] = attach_path(g.graph, g.root, l);
  return glue(with_path, end, h.graph, h.root).first;
}

Graph lollipop(int a, int l) {
  require(a >= 1 && l >= 0, "lollipop: need a >= 1, l >= 0");
  return conjoin({complete(a), 0}, {complete(1), 0}, l);
}

Graph melting_lollipop(int a, int l, int k) {
  require(a >= 2 && l >= 0 && 0 <= k && k <= a - 1, "melting_lollipop: need a >= 2, l >= 0, 0 <= k <= a-1");
  std::vector<Edge> drop;
  for (int j = 1; j <= k; ++j) drop.emplace_back(0, j);
  return remove_edges(lollipop(a, l), drop);
}

Graph kpk(int a, int b, int l) {
  require(a >= 1 && b >= 1 && l >= 0, "kpk: need a, b >= 1, l >= 0");
  return conjoin({complete(a), 0}, {complete(b), 0}, l);
}

Graph pkp(int g, int a, int h) {
  require(g >= 0 && h >= 0 && a >= 2, "pkp: need g, h >= 0, a >= 2");
  auto [left, end] = attach_path(complete(1), 0, g);
  auto [with_clique, label] = glue(left, end, complete(a), 0);
  return attach_path(with_clique, label[1], h).first;
}

Graph kkp(int a, int b, int h) {
  require(a >= 1 && b >= 2 && h >= 0, "kkp: need a >= 1, b >= 2, h >= 0");
  auto [two, label] = glue(complete(a), 0, complete(b), 0);
  return attach_path(two, label[1], h).first;
}

Graph kpkp(int a, int g, int b, int h) {
  require(a >= 1 && b >= 2 && g >= 0 && h >= 0, "kpkp: need a >= 1, b >= 2, g, h >= 0");
  return conjoin({complete(a), 0}, {lollipop(b, h), 1}, g);
}

Graph kpc(int a, int l, int c) {
  require(a >= 1 && l >= 0 && c >= 3, "kpc: need a >= 1, l >= 0, c >= 3");
  return conjoin({complete(a), 0}, {cycle(c), 0}, l);
}

Graph tadpole(int c, int l) {
  require(c >= 3 && l >= 0, "tadpole: need c >= 3, l >= 0");
  return conjoin({cycle(c), 0}, {complete(1), 0}, l);
}

Graph kayak(int a, int b, int l) {
  require(a >= 3 && b >= 3 && l >= 0, "kayak: need a, b >= 3, l >= 0");
  return conjoin({cycle(a), 0}, {cycle(b), 0}, l);
}

Graph infinity_graph(int a, int b) {
  require(a >= 3 && b >= 3, "infinity: need a, b >= 3");
  return kayak(a, b, 0);
}

Graph twin(const Graph& g, int v) {
  require(0 <= v && v < g.order(), "twin: vertex out of range");
  const int fresh = g.order();
  std::vector<Edge> e = g.edges();
  e.emplace_back(v, fresh);
  for (int u : g.neighbors(v)) e.emplace_back(u, fresh);
  return Graph(fresh + 1, std::move(e));
}

Graph tw_path(int n, int l) {
  require(2 <= l && l <= n - 1, "tw_path: need 2 <= l <= n-1");
  return twin(path(n), l - 1);
}

Graph tw_cycle(int n) {
  require(n >= 3, "tw_cycle: need n >= 3");
  return twin(cycle(n), 0);
}

Graph tw_lollipop(int a, int l, int h) {
  require(a >= 1 && l >= 2 && 1 <= h && h <= l - 1, "tw_lollipop: need a >= 1, l >= 2, 1 <= h <= l-1");
  // The leaf of lollipop(a, l) is vertex a + l - 1.
  return twin(lollipop(a, l), a + l - 1 - h);
}

Graph tw_tadpole(int c, int l, int i) {
  require(c >= 3 && l >= 0 && 0 <= i && 2 * i <= c, "tw_tadpole: need c >= 3, l >= 0, 0 <= i <= c/2");
  return twin(tadpole(c, l), i);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw ContractError("edge list line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        fail("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) fail("not an integer: '" + tok + "'");
      nums.push_back(v);
    }
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 1 || nums[0] < 0 || nums[0] > 1'000'000) fail("expected a single vertex count");
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) fail("expected two vertex indices");
    const long long u = nums[0], v = nums[1];
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex index out of range");
    if (u == v) fail("loop");
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) fail("duplicate edge");
    edges.push_back(e);
  }
  if (n < 0) throw ContractError("edge list: missing vertex count");
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open edge list file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace csf
