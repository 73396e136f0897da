#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csf/compositions.hpp"
#include "csf/graphs.hpp"
#include "csf/symfunc.hpp"

namespace csf {

/// A family tag plus its integer parameters by name. The k-chain family
/// takes its composition in `parts` instead.
struct FamilyParams {
  std::string family;
  std::map<std::string, int> values;
  Composition parts;

  int at(const std::string& name) const;
  /// "a=3 l=2", or "I=[3,3]" for k-chains.
  std::string describe() const;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilyInfo {
  std::string tag;
  std::vector<std::string> params;
  std::string summary;
  bool has_formula;
};

const std::vector<FamilyInfo>& families();
/// Throws ContractError for an unknown tag.
const FamilyInfo& family_info(const std::string& tag);

/// Throws ContractError naming the violated hypothesis or missing parameter.
void validate(const FamilyParams& p);
int family_order(const FamilyParams& p);
Graph family_graph(const FamilyParams& p);
/// Closed-form X_G; throws ContractError for families without a formula.
ESymFunc family_formula(const FamilyParams& p);

/// Every valid parameter tuple of the family with graph order <= max_n,
/// sorted by parameter values.
std::vector<FamilyParams> family_grid(const std::string& tag, int max_n);

}  // namespace csf
