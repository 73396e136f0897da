// csf: chromatic symmetric functions of graph families.
//
//   csf expand --family tw-cycle --n 4
//   csf verify --family kpkp --max-n 9
//   csf oracle --graph tests/data/triangle.txt
//   csf positivity --family tw-tadpole --c 4 --l 1 --i 1
//   csf list-families
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 budget exceeded.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/oracle.hpp"
#include "csf/symfunc.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr const char* kParamNames[] = {"a", "b", "c", "g", "h", "i", "k", "l", "n"};

struct FamilyArgs {
  std::string family;
  std::map<std::string, std::optional<int>> values;
  std::string parts;

  void attach(CLI::App* cmd, bool required) {
    cmd->set_help_flag("--help", "print this help");  // -h would clash with --h
    auto* opt = cmd->add_option("--family", family, "family tag (see list-families)");
    if (required) opt->required();
    for (const char* name : kParamNames) cmd->add_option(std::string("--") + name, values[name]);
    cmd->add_option("--parts", parts, "k-chain composition, e.g. 3,2,4");
  }

  csf::FamilyParams params() const {
    csf::FamilyParams p{family, {}, {}};
    for (const auto& [name, v] : values) {
      if (v) p.values[name] = *v;
    }
    if (!parts.empty()) {
      std::vector<int> xs;
      std::stringstream ss(parts);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          xs.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw csf::ContractError("--parts: not an integer: '" + tok + "'");
        }
        csf::require(xs.back() >= 1, "--parts: parts must be positive");
      }
      p.parts = csf::Composition(std::move(xs));
    }
    csf::validate(p);
    return p;
  }
};

void print(const csf::ESymFunc& f, const std::string& format, nlohmann::json header = nlohmann::json::object()) {
  if (format == "json") {
    header["terms"] = csf::to_records(f);
    std::cout << header.dump(2) << '\n';
  } else {
    std::cout << csf::to_text(f) << '\n';
  }
}

std::string positivity_report(const csf::ESymFunc& f) {
  if (csf::is_e_positive(f)) return "e-positive";
  const auto [lambda, c] = *csf::min_term(f);
  return "NOT e-positive (min coeff " + c.to_string() + " at e" + csf::to_string(lambda) + ")";
}

int run_verify(const std::string& tag, int max_n, int budget) {
  int passed = 0, failed = 0, skipped = 0;
  if (!csf::family_info(tag).has_formula) throw csf::ContractError(tag + ": no closed-form expansion to verify");
  for (const auto& p : csf::family_grid(tag, max_n)) {
    const csf::Graph g = csf::family_graph(p);
    const std::string where = tag + " " + p.describe() + " (n=" + std::to_string(g.order()) +
                              ", |E|=" + std::to_string(g.num_edges()) + ")";
    try {
      const bool ok = csf::family_formula(p) == csf::csf_bruteforce(g, budget);
      std::cout << (ok ? "PASS " : "FAIL ") << where << '\n';
      ++(ok ? passed : failed);
    } catch (const csf::BudgetError& e) {
      std::cout << "SKIP " << where << ": " << e.what() << '\n';
      std::cerr << "warning: skipped " << where << '\n';
      ++skipped;
    }
  }
  std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return failed == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric functions of graph families"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string graph_file;
  int max_n = 0;
  int budget = csf::kDefaultEdgeBudget;

  auto* expand = app.add_subcommand("expand", "closed-form e-expansion of a family member");
  FamilyArgs expand_args;
  expand_args.attach(expand, true);
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "compare closed forms with brute force over a grid");
  std::string verify_family;
  verify->add_option("--family", verify_family)->required();
  verify->add_option("--max-n", max_n, "largest graph order")->required();
  verify->add_option("--edge-budget", budget);

  auto* oracle = app.add_subcommand("oracle", "brute-force X_G of an edge list or family member");
  FamilyArgs oracle_args;
  oracle_args.attach(oracle, false);
  oracle->add_option("--graph", graph_file, "edge-list file");
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  oracle->add_option("--edge-budget", budget);

  auto* positivity = app.add_subcommand("positivity", "report whether X_G is e-positive");
  FamilyArgs positivity_args;
  positivity_args.attach(positivity, false);
  positivity->add_option("--graph", graph_file, "edge-list file");
  positivity->add_option("--edge-budget", budget);

  auto* list = app.add_subcommand("list-families", "list family tags and parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  // X_G for oracle/positivity: a graph file, or a family member.
  auto input_graph = [&](const FamilyArgs& args) {
    if (graph_file.empty() == args.family.empty()) {
      throw csf::ContractError("give exactly one of --graph and --family");
    }
    return graph_file.empty() ? csf::family_graph(args.params()) : csf::read_edge_list_file(graph_file);
  };

  try {
    if (*expand) {
      const auto p = expand_args.params();
      print(csf::family_formula(p), format,
            {{"family", p.family}, {"params", p.describe()}, {"order", csf::family_order(p)}});
    } else if (*verify) {
      return run_verify(verify_family, max_n, budget);
    } else if (*oracle) {
      const csf::Graph g = input_graph(oracle_args);
      print(csf::csf_bruteforce(g, budget), format, {{"order", g.order()}, {"edges", g.num_edges()}});
    } else if (*positivity) {
      csf::ESymFunc x;
      if (graph_file.empty() && !positivity_args.family.empty() &&
          csf::family_info(positivity_args.family).has_formula) {
        x = csf::family_formula(positivity_args.params());
      } else {
        x = csf::csf_bruteforce(input_graph(positivity_args), budget);
      }
      std::cout << positivity_report(x) << '\n';
    } else if (*list) {
      for (const auto& f : csf::families()) {
        std::string params;
        for (const auto& q : f.params) params += " --" + q;
        if (f.tag == "k-chain") params = " --parts";
        std::cout << f.tag << params << "  # " << f.summary << '\n';
      }
    }
  } catch (const csf::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const csf::ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
