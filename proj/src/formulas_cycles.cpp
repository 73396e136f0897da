#include "csf/formulas.hpp"
#include "formulas_internal.hpp"

namespace csf {

using detail::finish;
using detail::frac;

ESymFunc x_kayak(int a, int b, int l) {
  require(a >= 3 && b >= 3 && l >= 0, "x_kayak: need a, b >= 3, l >= 0");
  const int n = a + b + l - 1;
  ESymFunc x;
  // g(K) = Theta_K(a+l) w_K e_K
  auto g = [&](const Composition& K, const BigRational& c) {
    x += e_term(K, c * BigRational(static_cast<long long>(theta(K, a + l)) * w(K)));
  };

  for (const auto& K : compositions_of(n)) {
    if (theta(K, a + l) == 0 || w(K) == 0) continue;
    const int k1 = K.first();
    const bool gated = theta(K, a) <= l;
    if (k1 == 1) g(K, theta_minus(K, a));
    if (gated && 2 <= k1 && k1 <= l + 1) g(K, theta_minus(K, k1 + a - 1));
    if (gated && l + 2 <= k1 && k1 <= l + a - 1) g(K, theta_minus(K, a + l) + k1 - l - 1);
    if (k1 >= a + l) g(K, a - 1);
  }

  // Pairs (I, J) with IJ in W_n, enumerated by split point.
  for (const auto& K : compositions_min2(n)) {
    if (theta(K, a + l) == 0) continue;
    int size_i = 0;
    for (int s = 1; s < K.length(); ++s) {
      size_i += K.part(s);
      const int i1 = K.first(), j1 = K.part(s + 1);
      if (size_i < a + l - j1 + 1 || size_i > a - 1) continue;
      if (i1 < l + 2 || i1 == j1 || size_i >= a + i1 - j1) {
        g(K, BigRational(a - 1 - size_i) + frac(j1 - i1, j1 - 1));
      }
      if (i1 > j1) {
        const BigRational ratio = frac(j1, i1) * frac(i1 - 1, j1 - 1);
        g(K, BigRational(i1 - j1) + BigRational(a - 1 - size_i) * (BigRational(1) + ratio));
      }
    }
  }
  return finish(std::move(x), "x_kayak");
}

ESymFunc x_infinity(int a, int b) {
  require(a >= 3 && b >= 3, "x_infinity: need a, b >= 3");
  const int n = a + b - 1;
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    const int th = theta(I, a);
    const long long wi = w(I);
    // g(I) vanishes here, and I(a) may be 0, which the denominators cannot take.
    if (th == 0 || wi == 0) continue;
    const int thm = theta_minus(I, a);
    const int ia = th + thm;
    const int i1 = I.first();
    const BigRational gi(static_cast<long long>(th) * wi);

    BigRational c = 0;
    if (i1 == 1) c += thm;
    if (2 <= i1 && i1 <= a - 1 && (i1 <= th || i1 == ia)) {
      c += BigRational(thm - 1) + frac(ia - i1, ia - 1);
    }
    if (3 <= ia + 1 && ia + 1 <= i1 && i1 <= a - 1) {
      const BigRational ratio = frac(ia, i1) * frac(i1 - 1, ia - 1);
      c += BigRational(i1 - ia) + BigRational(thm - 1) * (BigRational(1) + ratio);
    }
    if (i1 >= a) c += a - 1;
    x += e_term(I, c * gi);
  }
  return finish(std::move(x), "x_infinity");
}

}  // namespace csf
