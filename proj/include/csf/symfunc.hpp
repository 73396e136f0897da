#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "csf/compositions.hpp"
#include "csf/rational.hpp"
#include "json.hpp"

namespace csf {

/// A homogeneous symmetric function written in the elementary basis,
///   f = sum_lambda c_lambda e_lambda,
/// with exact rational coefficients. Zero coefficients are never stored and
/// every stored partition has size degree(). The zero function has degree 0.
///
/// Terms iterate in descending lexicographic order of partitions, which is
/// also the order of the text form: e[5] before e[4,1] before e[3,2].
class ESymFunc {
 public:
  using Terms = std::map<Partition, BigRational, std::greater<>>;

  ESymFunc() = default;
  /// The constant 1 (empty partition, degree 0).
  static ESymFunc one();

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  BigRational coefficient(const Partition& lambda) const;

  /// Accumulates c * e_lambda in place. Throws ContractError on a degree
  /// mismatch with a nonzero function.
  void add_term(const Partition& lambda, const BigRational& c);

  ESymFunc& operator+=(const ESymFunc& rhs);
  ESymFunc& operator-=(const ESymFunc& rhs);

  friend bool operator==(const ESymFunc& a, const ESymFunc& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  int degree_ = 0;
};

/// c * e_{rho(I)}; the zero function if c == 0.
ESymFunc e_term(const Composition& I, const BigRational& c = 1);
ESymFunc e_term(const Partition& lambda, const BigRational& c = 1);

ESymFunc add(const ESymFunc& f, const ESymFunc& g);
ESymFunc scale(const ESymFunc& f, const BigRational& c);
ESymFunc mul(const ESymFunc& f, const ESymFunc& g);

ESymFunc operator+(ESymFunc f, const ESymFunc& g);
ESymFunc operator-(ESymFunc f, const ESymFunc& g);
ESymFunc operator*(const ESymFunc& f, const ESymFunc& g);
ESymFunc operator*(const BigRational& c, const ESymFunc& f);

bool is_e_positive(const ESymFunc& f);
bool has_integer_coefficients(const ESymFunc& f);
/// The term with the smallest coefficient (first in text order on ties).
std::optional<std::pair<Partition, BigRational>> min_term(const ESymFunc& f);

/// Power sum p_k in the elementary basis (Newton's identities, memoized).
ESymFunc p_to_e(int k);

/// Substitutes x_1..x_m = xs (all later variables 0).
BigRational evaluate_at(const ESymFunc& f, std::span<const BigRational> xs);

// Serialization.
/// "50*e[5] + 6*e[4,1] - 4*e[4,2]"; the zero function prints as "0".
std::string to_text(const ESymFunc& f);
/// Inverse of to_text. Throws ContractError on malformed input.
ESymFunc parse_text(std::string_view text);

/// [{"partition":[5],"num":"50","den":"1"}, ...] in text order. Numerators
/// and denominators are decimal strings so values of any size survive.
nlohmann::json to_records(const ESymFunc& f);
ESymFunc from_records(const nlohmann::json& records);

}  // namespace csf
