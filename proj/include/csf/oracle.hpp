#pragma once

#include <array>
#include <utility>

#include "csf/graphs.hpp"
#include "csf/symfunc.hpp"

namespace csf {

inline constexpr int kDefaultEdgeBudget = 24;
/// Component-size bookkeeping packs a partition of |V| into 128 bits.
inline constexpr int kMaxOracleVertices = 25;

/// X_G by inclusion-exclusion over edge subsets:
///   X_G = sum_{S subset E} (-1)^{|S|} prod_{components c of (V,S)} p_{|c|},
/// converted to the e-basis with p_to_e. Subtrees where the next edge closes
/// a cycle are skipped, since including or excluding it gives the same
/// components with opposite signs.
///
/// Throws BudgetError if |E| > max_edges or |V| > kMaxOracleVertices.
ESymFunc csf_bruteforce(const Graph& g, int max_edges = kDefaultEdgeBudget);

/// Number of proper colorings of G with m colors, by direct enumeration.
long long chromatic_polynomial_value(const Graph& g, int m);

/// Checks both triple-deletion identities on the stable set T:
///   X_{G12} = X_{G1} + X_{G23} - X_{G3},  X_{G123} = X_{G13} + X_{G23} - X_{G3},
/// where e1 = t0t1, e2 = t1t2, e3 = t0t2. Throws ContractError if T is not a
/// stable set of three distinct vertices.
std::pair<bool, bool> triple_deletion_check(const Graph& g, std::array<int, 3> t,
                                            int max_edges = kDefaultEdgeBudget);

/// H^m = P^m(H, K_1): H with a pendant path of length m at its root.
Graph pendant(const RootedGraph& h, int m);

/// X_{P^l(K_a, H)} assembled from X_{H^m} values computed by brute force.
ESymFunc x_via_kpg(int l, int a, const RootedGraph& h, int max_edges = kDefaultEdgeBudget);
/// X_{P^l(C_a, H)} assembled from X_{H^m} and X_{C_m} values by brute force.
ESymFunc x_via_cpg(int l, int a, const RootedGraph& h, int max_edges = kDefaultEdgeBudget);

/// Right-hand sides of the known recurrences for twinned graphs, with each
/// constituent evaluated by the closed forms for paths, cycles, lollipops and
/// KPKP graphs with b = 3.
ESymFunc x_tw_path_rec(int n, int l);
ESymFunc x_tw_cycle_rec(int n);
ESymFunc x_tw_lollipop_rec(int a, int l, int h);

}  // namespace csf
