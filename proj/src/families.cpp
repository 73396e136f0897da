#include "csf/families.hpp"

#include <functional>
#include <sstream>

#include "csf/errors.hpp"
#include "csf/formulas.hpp"
#include "csf/rational.hpp"

namespace csf {

namespace {

struct Entry {
  FamilyInfo info;
  std::function<void(const FamilyParams&)> check;
  std::function<int(const FamilyParams&)> order;
  std::function<Graph(const FamilyParams&)> graph;
  std::function<ESymFunc(const FamilyParams&)> formula;
};

const std::vector<Entry>& table() {
  using P = const FamilyParams&;
  static const std::vector<Entry> entries = {
      {{"path", {"n"}, "path P_n", true},
       [](P p) { require(p.at("n") >= 1, "path: need n >= 1"); },
       [](P p) { return p.at("n"); },
       [](P p) { return path(p.at("n")); },
       [](P p) { return x_path(p.at("n")); }},
      {{"cycle", {"n"}, "cycle C_n", true},
       [](P p) { require(p.at("n") >= 3, "cycle: need n >= 3"); },
       [](P p) { return p.at("n"); },
       [](P p) { return cycle(p.at("n")); },
       [](P p) { return x_cycle(p.at("n")); }},
      {{"complete", {"n"}, "complete graph K_n", true},
       [](P p) { require(p.at("n") >= 1, "complete: need n >= 1"); },
       [](P p) { return p.at("n"); },
       [](P p) { return complete(p.at("n")); },
       [](P p) { return e_term(Partition{p.at("n")}, factorial(p.at("n"))); }},
      {{"k-chain", {}, "K-chain K_{i_1} + ... + K_{i_l} (--parts)", true},
       [](P p) {
         require(!p.parts.empty(), "k-chain: need --parts");
         for (int x : p.parts.parts()) require(x >= 2, "k-chain: every part must be at least 2");
       },
       [](P p) { return p.parts.size() - p.parts.length() + 1; },
       [](P p) { return k_chain(p.parts); },
       [](P p) { return x_kchain(p.parts); }},
      {{"lollipop", {"a", "l"}, "lollipop K_a^l", true},
       [](P p) { require(p.at("a") >= 2 && p.at("l") >= 0, "lollipop: need a >= 2, l >= 0"); },
       [](P p) { return p.at("a") + p.at("l"); },
       [](P p) { return lollipop(p.at("a"), p.at("l")); },
       [](P p) { return x_lollipop(p.at("a"), p.at("l")); }},
      {{"melting-lollipop", {"a", "l", "k"}, "melting lollipop K_a^l(k)", true},
       [](P p) {
         require(p.at("a") >= 2 && p.at("l") >= 0 && p.at("k") >= 0 && p.at("k") <= p.at("a") - 1,
                 "melting-lollipop: need a >= 2, l >= 0, 0 <= k <= a-1");
       },
       [](P p) { return p.at("a") + p.at("l"); },
       [](P p) { return melting_lollipop(p.at("a"), p.at("l"), p.at("k")); },
       [](P p) { return x_melting_lollipop(p.at("a"), p.at("l"), p.at("k")); }},
      {{"kpk", {"a", "b", "l"}, "P^l(K_a, K_b)", true},
       [](P p) { require(p.at("a") >= 1 && p.at("b") >= 1 && p.at("l") >= 0, "kpk: need a, b >= 1, l >= 0"); },
       [](P p) { return p.at("a") + p.at("b") + p.at("l") - 1; },
       [](P p) { return kpk(p.at("a"), p.at("b"), p.at("l")); },
       [](P p) { return x_kpk(p.at("a"), p.at("b"), p.at("l")); }},
      {{"kpk-b3", {"a", "l"}, "P^l(K_a, K_3), simplified form", true},
       [](P p) { require(p.at("a") >= 3 && p.at("l") >= 0, "kpk-b3: need a >= 3, l >= 0"); },
       [](P p) { return p.at("a") + p.at("l") + 2; },
       [](P p) { return kpk(p.at("a"), 3, p.at("l")); },
       [](P p) { return x_kpk_b3(p.at("a"), p.at("l")); }},
      {{"pkp", {"g", "a", "h"}, "P_{g+1} + K_a + P_{h+1}", true},
       [](P p) { require(p.at("g") >= 0 && p.at("a") >= 2 && p.at("h") >= 0, "pkp: need g, h >= 0, a >= 2"); },
       [](P p) { return p.at("g") + p.at("a") + p.at("h"); },
       [](P p) { return pkp(p.at("g"), p.at("a"), p.at("h")); },
       [](P p) { return x_pkp(p.at("g"), p.at("a"), p.at("h")); }},
      {{"kkp", {"a", "b", "h"}, "K_a + K_b + P_{h+1}", true},
       [](P p) { require(p.at("a") >= 1 && p.at("b") >= 2 && p.at("h") >= 0, "kkp: need a >= 1, b >= 2, h >= 0"); },
       [](P p) { return p.at("a") + p.at("b") + p.at("h") - 1; },
       [](P p) { return kkp(p.at("a"), p.at("b"), p.at("h")); },
       [](P p) { return x_kkp(p.at("a"), p.at("b"), p.at("h")); }},
      {{"kpc", {"a", "l", "c"}, "P^l(K_a, C_c)", true},
       [](P p) { require(p.at("a") >= 1 && p.at("l") >= 0 && p.at("c") >= 3, "kpc: need a >= 1, l >= 0, c >= 3"); },
       [](P p) { return p.at("a") + p.at("l") + p.at("c") - 1; },
       [](P p) { return kpc(p.at("a"), p.at("l"), p.at("c")); },
       [](P p) { return x_kpc(p.at("a"), p.at("l"), p.at("c")); }},
      {{"tadpole", {"c", "l"}, "tadpole C_c^l", true},
       [](P p) { require(p.at("c") >= 3 && p.at("l") >= 0, "tadpole: need c >= 3, l >= 0"); },
       [](P p) { return p.at("c") + p.at("l"); },
       [](P p) { return tadpole(p.at("c"), p.at("l")); },
       [](P p) { return x_tadpole(p.at("c"), p.at("l")); }},
      {{"kpkp", {"a", "g", "b", "h"}, "P^g(K_a, K_b^h)", true},
       [](P p) {
         require(p.at("a") >= 1 && p.at("g") >= 0 && p.at("b") >= 2 && p.at("h") >= 0,
                 "kpkp: need a >= 1, b >= 2, g, h >= 0");
       },
       [](P p) { return p.at("a") + p.at("g") + p.at("b") + p.at("h") - 1; },
       [](P p) { return kpkp(p.at("a"), p.at("g"), p.at("b"), p.at("h")); },
       [](P p) { return x_kpkp(p.at("a"), p.at("g"), p.at("b"), p.at("h")); }},
      {{"kpkp-b3", {"a", "g", "h"}, "P^g(K_a, K_3^h), simplified form", true},
       [](P p) { require(p.at("a") >= 1 && p.at("g") >= 0 && p.at("h") >= 0, "kpkp-b3: need a >= 1, g, h >= 0"); },
       [](P p) { return p.at("a") + p.at("g") + p.at("h") + 2; },
       [](P p) { return kpkp(p.at("a"), p.at("g"), 3, p.at("h")); },
       [](P p) { return x_kpkp_b3(p.at("a"), p.at("g"), p.at("h")); }},
      {{"tw-path", {"n", "l"}, "P_n twinned at v_l", true},
       [](P p) {
         require(p.at("n") >= 3 && p.at("l") >= 2 && p.at("l") <= p.at("n") - 1, "tw-path: need n >= 3, 2 <= l <= n-1");
       },
       [](P p) { return p.at("n") + 1; },
       [](P p) { return tw_path(p.at("n"), p.at("l")); },
       [](P p) { return x_tw_path(p.at("n"), p.at("l")); }},
      {{"tw-cycle", {"n"}, "C_n twinned at a vertex", true},
       [](P p) { require(p.at("n") >= 3, "tw-cycle: need n >= 3"); },
       [](P p) { return p.at("n") + 1; },
       [](P p) { return tw_cycle(p.at("n")); },
       [](P p) { return x_tw_cycle(p.at("n")); }},
      {{"tw-lollipop", {"a", "l", "h"}, "K_a^l twinned at distance h from the leaf", true},
       [](P p) {
         require(p.at("a") >= 1 && p.at("l") >= 2 && p.at("h") >= 1 && p.at("h") <= p.at("l") - 1,
                 "tw-lollipop: need a >= 1, l >= 2, 1 <= h <= l-1");
       },
       [](P p) { return p.at("a") + p.at("l") + 1; },
       [](P p) { return tw_lollipop(p.at("a"), p.at("l"), p.at("h")); },
       [](P p) { return x_tw_lollipop(p.at("a"), p.at("l"), p.at("h")); }},
      {{"kayak", {"a", "b", "l"}, "kayak paddle P^l(C_a, C_b)", true},
       [](P p) { require(p.at("a") >= 3 && p.at("b") >= 3 && p.at("l") >= 0, "kayak: need a, b >= 3, l >= 0"); },
       [](P p) { return p.at("a") + p.at("b") + p.at("l") - 1; },
       [](P p) { return kayak(p.at("a"), p.at("b"), p.at("l")); },
       [](P p) { return x_kayak(p.at("a"), p.at("b"), p.at("l")); }},
      {{"infinity", {"a", "b"}, "infinity graph (C_a and C_b sharing a vertex)", true},
       [](P p) { require(p.at("a") >= 3 && p.at("b") >= 3, "infinity: need a, b >= 3"); },
       [](P p) { return p.at("a") + p.at("b") - 1; },
       [](P p) { return infinity_graph(p.at("a"), p.at("b")); },
       [](P p) { return x_infinity(p.at("a"), p.at("b")); }},
      {{"tw-tadpole", {"c", "l", "i"}, "C_c^l twinned at cycle vertex i (no closed form)", false},
       [](P p) {
         require(p.at("c") >= 3 && p.at("l") >= 0 && p.at("i") >= 0 && 2 * p.at("i") <= p.at("c"),
                 "tw-tadpole: need c >= 3, l >= 0, 0 <= i <= c/2");
       },
       [](P p) { return p.at("c") + p.at("l") + 1; },
       [](P p) { return tw_tadpole(p.at("c"), p.at("l"), p.at("i")); },
       nullptr},
  };
  return entries;
}

const Entry& entry(const std::string& tag) {
  for (const Entry& e : table()) {
    if (e.info.tag == tag) return e;
  }
  throw ContractError("unknown family '" + tag + "'");
}

}  // namespace

int FamilyParams::at(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw ContractError(family + ": missing parameter '" + name + "'");
  return it->second;
}

std::string FamilyParams::describe() const {
  if (family == "k-chain") return "I=" + to_string(parts);
  std::ostringstream os;
  bool first = true;
  for (const auto& name : family_info(family).params) {
    if (!first) os << ' ';
    os << name << '=' << at(name);
    first = false;
  }
  return os.str();
}

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const Entry& e : table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const FamilyInfo& family_info(const std::string& tag) { return entry(tag).info; }

void validate(const FamilyParams& p) {
  const Entry& e = entry(p.family);
  for (const auto& [name, value] : p.values) {
    bool known = false;
    for (const auto& q : e.info.params) known = known || q == name;
    require(known, p.family + ": unexpected parameter '" + name + "'");
  }
  e.check(p);
}

int family_order(const FamilyParams& p) {
  validate(p);
  return entry(p.family).order(p);
}

Graph family_graph(const FamilyParams& p) {
  validate(p);
  return entry(p.family).graph(p);
}

ESymFunc family_formula(const FamilyParams& p) {
  validate(p);
  const Entry& e = entry(p.family);
  if (!e.formula) throw ContractError(p.family + ": no closed-form expansion");
  return e.formula(p);
}

std::vector<FamilyParams> family_grid(const std::string& tag, int max_n) {
  const Entry& e = entry(tag);
  std::vector<FamilyParams> out;
  auto keep = [&](const FamilyParams& p) {
    try {
      e.check(p);
    } catch (const ContractError&) {
      return false;
    }
    return e.order(p) <= max_n;
  };

  if (tag == "k-chain") {
    for (int m = 2; m <= 2 * max_n; ++m) {
      for (const auto& I : compositions_min2(m)) {
        FamilyParams p{tag, {}, I};
        if (keep(p)) out.push_back(std::move(p));
      }
    }
    return out;
  }

  const auto& names = e.info.params;
  const int hi = max_n + 1;
  std::vector<int> v(names.size(), 0);
  while (true) {
    FamilyParams p{tag, {}, {}};
    for (std::size_t i = 0; i < names.size(); ++i) p.values[names[i]] = v[i];
    if (keep(p)) out.push_back(std::move(p));
    // Odometer with the first parameter as the slowest digit.
    std::size_t i = names.size();
    while (i > 0 && v[i - 1] == hi) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

}  // namespace csf
