#pragma once

#include <string>

#include "csf/compositions.hpp"
#include "csf/errors.hpp"
#include "csf/rational.hpp"
#include "csf/symfunc.hpp"

namespace csf::detail {

/// Last and second-to-last parts; has_second is false for one-part compositions.
struct Tail {
  explicit Tail(const Composition& K)
      : last(K.last()), has_second(K.length() >= 2), second(has_second ? K.part(-2) : 0) {}
  int last;
  bool has_second;
  int second;
};

inline BigRational frac(long num, long den) { return BigRational(num, den); }

/// Integrality is a theorem for every family; a fractional coefficient means
/// an evaluator bug.
inline ESymFunc finish(ESymFunc f, const std::string& who, bool expect_positive = false) {
  if (!has_integer_coefficients(f)) throw InternalError(who + ": non-integral coefficient");
  if (expect_positive && !is_e_positive(f)) throw InternalError(who + ": negative coefficient");
  return f;
}

}  // namespace csf::detail
