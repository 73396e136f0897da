#include "csf/oracle.hpp"

#include <unordered_map>
#include <vector>

#include "csf/errors.hpp"
#include "csf/formulas.hpp"

namespace csf {

namespace {

using Key = unsigned __int128;

// Partition of the vertex set encoded as sum over blocks of 32^(size-1).
// A size-s digit never exceeds 25/s < 32, so digits do not carry.
Key digit(int size) { return Key{1} << (5 * (size - 1)); }

Partition decode(Key key, int n) {
  std::vector<int> parts;
  for (int s = 1; s <= n; ++s) {
    const int count = static_cast<int>((key >> (5 * (s - 1))) & 31u);
    parts.insert(parts.end(), count, s);
  }
  return Partition(std::move(parts));
}

struct KeyHash {
  std::size_t operator()(Key k) const {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

// Union-find without path compression so that unions can be undone.
class Search {
 public:
  explicit Search(const Graph& g) : edges_(g.edges()), parent_(g.order()), size_(g.order(), 1) {
    for (int v = 0; v < g.order(); ++v) parent_[v] = v;
    key_ = static_cast<Key>(g.order());  // n singletons
  }

  std::unordered_map<Key, long long, KeyHash> run() {
    dfs(0, false);
    return std::move(counts_);
  }

 private:
  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  void dfs(std::size_t i, bool odd) {
    if (i == edges_.size()) {
      counts_[key_] += odd ? -1 : 1;
      return;
    }
    int ru = find(edges_[i].first);
    int rv = find(edges_[i].second);
    if (ru == rv) return;
    dfs(i + 1, odd);
    if (size_[ru] < size_[rv]) std::swap(ru, rv);
    const int su = size_[ru], sv = size_[rv];
    const Key before = key_;
    key_ = key_ - digit(su) - digit(sv) + digit(su + sv);
    parent_[rv] = ru;
    size_[ru] = su + sv;
    dfs(i + 1, !odd);
    size_[ru] = su;
    parent_[rv] = rv;
    key_ = before;
  }

  const std::vector<Edge>& edges_;
  std::vector<int> parent_;
  std::vector<int> size_;
  Key key_ = 0;
  std::unordered_map<Key, long long, KeyHash> counts_;
};

}  // namespace

ESymFunc csf_bruteforce(const Graph& g, int max_edges) {
  if (g.num_edges() > max_edges) {
    throw BudgetError("edge count " + std::to_string(g.num_edges()) + " exceeds budget " + std::to_string(max_edges),
                      max_edges);
  }
  if (g.order() > kMaxOracleVertices) {
    throw BudgetError("vertex count " + std::to_string(g.order()) + " exceeds limit " +
                          std::to_string(kMaxOracleVertices),
                      kMaxOracleVertices);
  }
  if (g.order() == 0) return ESymFunc::one();

  ESymFunc out;
  for (const auto& [key, count] : Search(g).run()) {
    if (count == 0) continue;
    const Partition lambda = decode(key, g.order());
    ESymFunc p = ESymFunc::one();
    for (int part : lambda.parts()) p = mul(p, p_to_e(part));
    out += scale(p, BigRational(count));
  }
  return out;
}

long long chromatic_polynomial_value(const Graph& g, int m) {
  require(m >= 0, "chromatic_polynomial_value: negative color count");
  const int n = g.order();
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<std::vector<int>> earlier(n);
  for (auto [u, v] : g.edges()) earlier[v].push_back(u);
  std::vector<int> color(n, -1);
  long long total = 0;
  int v = 0;
  while (v >= 0) {
    ++color[v];
    if (color[v] == m) {
      color[v] = -1;
      --v;
      continue;
    }
    bool ok = true;
    for (int u : earlier[v]) ok = ok && color[u] != color[v];
    if (!ok) continue;
    if (v == n - 1) {
      ++total;
    } else {
      ++v;
    }
  }
  return total;
}

std::pair<bool, bool> triple_deletion_check(const Graph& g, std::array<int, 3> t, int max_edges) {
  const auto [t0, t1, t2] = t;
  for (int x : t) require(0 <= x && x < g.order(), "triple_deletion_check: vertex out of range");
  require(t0 != t1 && t1 != t2 && t0 != t2, "triple_deletion_check: vertices must be distinct");
  require(!g.adjacent(t0, t1) && !g.adjacent(t1, t2) && !g.adjacent(t0, t2),
          "triple_deletion_check: T must be a stable set");

  const Edge e1{t0, t1}, e2{t1, t2}, e3{t0, t2};
  auto x_with = [&](std::initializer_list<Edge> extra) {
    std::vector<Edge> e = g.edges();
    e.insert(e.end(), extra);
    return csf_bruteforce(Graph(g.order(), std::move(e)), max_edges);
  };
  const ESymFunc x1 = x_with({e1}), x3 = x_with({e3});
  const ESymFunc x12 = x_with({e1, e2}), x13 = x_with({e1, e3}), x23 = x_with({e2, e3});
  const ESymFunc x123 = x_with({e1, e2, e3});
  return {x12 == x1 + x23 - x3, x123 == x13 + x23 - x3};
}

Graph pendant(const RootedGraph& h, int m) { return conjoin(h, {complete(1), 0}, m); }

ESymFunc x_via_kpg(int l, int a, const RootedGraph& h, int max_edges) {
  require(a >= 1 && l >= 0, "x_via_kpg: need a >= 1, l >= 0");
  // (a-1)! sum_{i=0}^{a-1} (1-i) e_i X_{H^{a+l-i-1}}
  ESymFunc sum;
  for (int i = 0; i <= a - 1; ++i) {
    if (i == 1) continue;
    const ESymFunc x = csf_bruteforce(pendant(h, a + l - i - 1), max_edges);
    const ESymFunc ei = i == 0 ? ESymFunc::one() : e_term(Partition{i});
    sum += scale(mul(ei, x), 1 - i);
  }
  return scale(sum, factorial(a - 1));
}

ESymFunc x_via_cpg(int l, int a, const RootedGraph& h, int max_edges) {
  require(a >= 2 && l >= 0, "x_via_cpg: need a >= 2, l >= 0");
  // (a-1) X_{H^{a+l-1}} - sum_{i=1}^{a-2} X_{C_{a-i}} X_{H^{i+l-1}}, with C_2 = K_2.
  ESymFunc out = scale(csf_bruteforce(pendant(h, a + l - 1), max_edges), a - 1);
  for (int i = 1; i <= a - 2; ++i) {
    const int m = a - i;
    const ESymFunc xc = csf_bruteforce(m == 2 ? complete(2) : cycle(m), max_edges);
    out -= mul(xc, csf_bruteforce(pendant(h, i + l - 1), max_edges));
  }
  return out;
}

ESymFunc x_tw_path_rec(int n, int l) {
  require(n >= 3 && 2 <= l && l <= n - 1, "x_tw_path_rec: need n >= 3, 2 <= l <= n-1");
  auto P = [](int m) { return m == 0 ? ESymFunc::one() : x_path(m); };
  const ESymFunc e1 = e_term(Partition{1}), e2 = e_term(Partition{2});
  ESymFunc x = scale(mul(P(l - 1), P(n - l + 2)), -2);
  x += scale(mul(e1, P(n)), 2);
  x += scale(P(n + 1), 4);
  x -= scale(mul(P(l), P(n - l + 1)), 2);
  x += scale(mul(e2, mul(P(l - 1), P(n - l))), 2);
  x -= scale(mul(P(l + 1), P(n - l)), 2);
  return x;
}

ESymFunc x_tw_cycle_rec(int n) {
  require(n >= 3, "x_tw_cycle_rec: need n >= 3");
  ESymFunc x = scale(x_cycle(n + 1), 4);
  x += scale(mul(e_term(Partition{1}), x_cycle(n)), 2);
  x -= scale(x_path(n + 1), 6);
  x += scale(mul(e_term(Partition{2}), x_path(n - 1)), 2);
  return x;
}

ESymFunc x_tw_lollipop_rec(int a, int l, int h) {
  require(a >= 1 && l >= 2 && 1 <= h && h <= l - 1, "x_tw_lollipop_rec: need a >= 1, l >= 2, 1 <= h <= l-1");
  // 2 X_{P^{g+1}(K_a, K_3^{h-1})} - X_{K_3^{h-1}} X_{K_a^g}, g = l - h - 1.
  const int g = l - h - 1;
  const ESymFunc k_a_g = a == 1 ? x_path(g + 1) : x_lollipop(a, g);
  return scale(x_kpkp_b3(a, g + 1, h - 1), 2) - mul(x_lollipop(3, h - 1), k_a_g);
}

}  // namespace csf
