// Acceptance criteria: prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/formulas.hpp"
#include "csf/oracle.hpp"

using namespace csf;

namespace {

constexpr int kMaxOrder = 9;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::vector<std::string> kEvaluated = {
    "path",   "cycle", "k-chain", "lollipop", "melting-lollipop", "kpk",    "kpk-b3",      "pkp",   "kkp",
    "kpc",    "tadpole", "kpkp",  "kpkp-b3",  "tw-path",          "tw-cycle", "tw-lollipop", "kayak", "infinity"};

std::string where(const FamilyParams& p) { return p.family + " " + p.describe(); }

Outcome twin_cycle_constants() {
  Outcome out;
  const std::pair<int, const char*> cases[] = {
      {4, "50*e[5] + 6*e[4,1] + 4*e[3,2]"},
      {5, "84*e[6] + 16*e[5,1] + 20*e[4,2] + 12*e[3,3]"},
      {6, "126*e[7] + 30*e[6,1] + 44*e[5,2] + 66*e[4,3] + 6*e[4,2,1] + 4*e[3,2,2]"},
  };
  for (const auto& [n, text] : cases) {
    if (x_tw_cycle(n) != parse_text(text)) out.fail("tw(C_" + std::to_string(n) + ") = " + to_text(x_tw_cycle(n)));
  }
  if (out.ok) out.detail = "tw(C_4), tw(C_5), tw(C_6)";
  return out;
}

Outcome twin_tadpole_counterexample() {
  Outcome out;
  const ESymFunc c41 = csf_bruteforce(tw_tadpole(4, 1, 1));
  const ESymFunc c42 = csf_bruteforce(tw_tadpole(4, 1, 2));
  if (c41 != parse_text("60*e[6] + 50*e[5,1] - 4*e[4,2] + 6*e[4,1,1] + 6*e[3,3] + 2*e[3,2,1]")) {
    out.fail("C_{4,1}^1 = " + to_text(c41));
  }
  if (is_e_positive(c41)) out.fail("C_{4,1}^1 flagged e-positive");
  if (c42 != parse_text("60*e[6] + 40*e[5,1] + 12*e[4,2] + 6*e[3,3] + 2*e[3,2,1]")) {
    out.fail("C_{4,2}^1 = " + to_text(c42));
  }
  if (!is_e_positive(c42)) out.fail("C_{4,2}^1 flagged not e-positive");
  if (out.ok) out.detail = "C_{4,1}^1 not e-positive (-4 at e[4,2]), C_{4,2}^1 e-positive";
  return out;
}

Outcome complete_graphs() {
  Outcome out;
  for (int n = 1; n <= 7; ++n) {
    if (csf_bruteforce(complete(n)) != e_term(Partition{n}, factorial(n))) out.fail("K_" + std::to_string(n));
  }
  if (out.ok) out.detail = "K_1 .. K_7";
  return out;
}

// Visits every grid tuple of the evaluated families, catching evaluator errors.
int for_each_instance(Outcome& out, const std::function<void(const FamilyParams&)>& visit) {
  int count = 0;
  for (const auto& tag : kEvaluated) {
    const auto grid = family_grid(tag, kMaxOrder);
    if (grid.empty()) out.fail(tag + ": empty grid");
    for (const auto& p : grid) {
      try {
        visit(p);
        ++count;
      } catch (const std::exception& e) {
        out.fail(where(p) + ": " + e.what());
      }
    }
  }
  return count;
}

Outcome differential() {
  Outcome out;
  int compared = 0;
  for_each_instance(out, [&](const FamilyParams& p) {
    const Graph g = family_graph(p);
    if (g.num_edges() > kDefaultEdgeBudget) return;
    if (family_formula(p) != csf_bruteforce(g)) out.fail(where(p) + ": formula differs from brute force");
    ++compared;
  });
  if (out.ok) out.detail = std::to_string(compared) + " instances, " + std::to_string(kEvaluated.size()) + " families";
  return out;
}

Outcome positivity() {
  Outcome out;
  const int n = for_each_instance(out, [&](const FamilyParams& p) {
    const ESymFunc x = family_formula(p);
    if (!has_integer_coefficients(x)) out.fail(where(p) + ": non-integral coefficient");
    if (!is_e_positive(x)) out.fail(where(p) + ": negative coefficient");
  });
  if (out.ok) out.detail = std::to_string(n) + " instances";
  return out;
}

Outcome specializations() {
  Outcome out;
  int checks = 0;
  for (const auto& p : family_grid("kpkp", kMaxOrder)) {
    const int a = p.at("a"), g = p.at("g"), b = p.at("b"), h = p.at("h");
    const ESymFunc x = x_kpkp(a, g, b, h);
    auto expect = [&](const ESymFunc& y, const char* what) {
      ++checks;
      if (x != y) out.fail(where(p) + ": " + what);
    };
    if (b == 2) expect(a == 1 ? x_path(g + h + 2) : x_lollipop(a, g + h + 1), "b = 2 lollipop reduction");
    if (h == 0) expect(x_kpk(a, b, g), "h = 0 KPK reduction");
    if (g == 0) expect(x_kkp(a, b, h), "g = 0 KKP reduction");
    if (a == 1) expect(x_pkp(g, b, h), "a = 1 PKP reduction");
    if (a == 2) expect(x_pkp(g + 1, b, h), "a = 2 PKP reduction");
  }
  if (out.ok) out.detail = std::to_string(checks) + " equalities";
  return out;
}

Outcome recurrences() {
  Outcome out;
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) out.fail(what);
  };
  for (const auto& p : family_grid("tw-path", kMaxOrder)) {
    expect(x_tw_path(p.at("n"), p.at("l")) == x_tw_path_rec(p.at("n"), p.at("l")), where(p));
  }
  for (const auto& p : family_grid("tw-cycle", kMaxOrder)) {
    expect(x_tw_cycle(p.at("n")) == x_tw_cycle_rec(p.at("n")), where(p));
  }
  for (const auto& p : family_grid("tw-lollipop", kMaxOrder)) {
    expect(x_tw_lollipop(p.at("a"), p.at("l"), p.at("h")) == x_tw_lollipop_rec(p.at("a"), p.at("l"), p.at("h")),
           where(p));
  }

  const std::vector<std::pair<std::string, RootedGraph>> hs = {
      {"K_1", {complete(1), 0}},      {"K_2", {complete(2), 0}},     {"P_3 end", {path(3), 0}},
      {"P_3 middle", {path(3), 1}},   {"K_3", {complete(3), 0}},     {"C_4", {cycle(4), 0}},
      {"K_4", {complete(4), 0}},      {"K_3^1 leaf", {lollipop(3, 1), 3}},
  };
  for (const auto& [name, h] : hs) {
    for (int l = 0; l <= 2; ++l) {
      for (int a = 2; a <= 4; ++a) {
        expect(x_via_kpg(l, a, h) == csf_bruteforce(conjoin({complete(a), 0}, h, l)),
               "KPG a=" + std::to_string(a) + " l=" + std::to_string(l) + " H=" + name);
      }
      for (int a = 3; a <= 5; ++a) {
        expect(x_via_cpg(l, a, h) == csf_bruteforce(conjoin({cycle(a), 0}, h, l)),
               "CPG a=" + std::to_string(a) + " l=" + std::to_string(l) + " H=" + name);
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " equalities";
  return out;
}

Outcome identities() {
  Outcome out;
  int checks = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& I : compositions_of(n)) {
      for (int a = 0; a <= n; ++a) {
        ++checks;
        if (theta_minus(I, a) != theta(reverse(I), n - a)) out.fail("theta reversal at " + to_string(I));
      }
      if (I.length() >= 2) {
        const int k1 = I.first();
        const Composition rest = remove_part(I, 1);
        for (int a = 0; a <= n - k1; ++a) {
          ++checks;
          if (sigma_minus(I, k1 + a) != sigma_minus(rest, a) + k1) out.fail("sigma- shift at " + to_string(I));
        }
      }
      for (int a = 2; a <= n + 2; ++a) {
        ++checks;
        if (!f123_check(a, I)) out.fail("f123 at a=" + std::to_string(a) + " I=" + to_string(I));
      }
    }
  }

  std::mt19937 rng(20240601);
  int triples = 0;
  while (triples < 250) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    std::vector<int> vs(n);
    for (int v = 0; v < n; ++v) vs[v] = v;
    std::shuffle(vs.begin(), vs.end(), rng);
    const std::array<int, 3> t{vs[0], vs[1], vs[2]};
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const bool inside = std::count(t.begin(), t.end(), u) && std::count(t.begin(), t.end(), v);
        if (!inside && coin(rng)) e.emplace_back(u, v);
      }
    }
    const auto [first, second] = triple_deletion_check(Graph(n, std::move(e)), t);
    if (!first || !second) out.fail("triple deletion on a random graph of order " + std::to_string(n));
    ++triples;
    ++checks;
  }

  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), len(1, 5);
  for (int k = 1; k <= 9; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<BigRational> xs;
      const int m = len(rng);
      for (int i = 0; i < m; ++i) xs.emplace_back(num(rng), den(rng));
      BigRational pk = 0;
      for (const auto& x : xs) {
        BigRational t = 1;
        for (int j = 0; j < k; ++j) t *= x;
        pk += t;
      }
      ++checks;
      if (evaluate_at(p_to_e(k), xs) != pk) out.fail("p_to_e(" + std::to_string(k) + ") numeric check");
    }
  }
  if (out.ok) out.detail = std::to_string(checks) + " checks, " + std::to_string(triples) + " random triple deletions";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::optional<double> limit_s;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "twinned-cycle constants", 1.0, twin_cycle_constants},
      {2, "twinned-tadpole counterexample", 1.0, twin_tadpole_counterexample},
      {3, "complete-graph law", 30.0, complete_graphs},
      {4, "differential suite", 300.0, differential},
      {5, "positivity suite", std::nullopt, positivity},
      {6, "specialization suite", std::nullopt, specializations},
      {7, "recurrence suite", std::nullopt, recurrences},
      {8, "identity suite", 60.0, identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s && secs > *c.limit_s) {
      std::ostringstream os;
      os << "took longer than " << *c.limit_s << " s";
      out.fail(os.str());
    }
    std::printf("%s [%d] %s: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
    failures += out.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
