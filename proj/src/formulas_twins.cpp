#include "csf/formulas.hpp"
#include "formulas_internal.hpp"

namespace csf {

using detail::finish;
using detail::frac;
using detail::Tail;

ESymFunc x_tw_path(int n, int l) {
  require(n >= 3 && 2 <= l && l <= n - 1, "x_tw_path: need n >= 3, 2 <= l <= n-1");
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    if (theta(I, l - 1) >= 3) x += e_term(append(I, 1), w(I));
  }
  for (const auto& I : compositions_min2(n)) {
    BigRational c = BigRational(1) - frac(2, I.first());
    if (theta(I, n - l) >= 3) c += 1;
    x += e_term(append(I, 1), c * BigRational(w(I)));
  }
  for (const auto& K : compositions_min2(n + 1)) {
    const int t = theta(K, l - 1);
    if (t >= 3) {
      x += e_term(K, 2 * w(K));
    } else {
      const int d = theta(K, l + t);
      if (d == 0) throw InternalError("x_tw_path: zero denominator");
      x += e_term(K, (BigRational(1) - frac(1, d)) * BigRational(w(K)));
    }
  }
  return finish(scale(x, 2), "x_tw_path", true);
}

ESymFunc x_tw_cycle(int n) {
  require(n >= 3, "x_tw_cycle: need n >= 3");
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    if (I.first() < 4) continue;
    const Composition J = prepend(1, I);
    x += e_term(J, 2 * (I.first() - 3) * w(J));
  }
  for (const auto& I : compositions_min2(n + 1)) {
    if (I.first() >= 3 && I.last() >= 3) x += e_term(I, 2 * (2 * I.first() - 5) * w(I));
  }
  for (const auto& I : compositions_min2(n - 1)) {
    if (I.first() < 3) continue;
    const BigRational c = BigRational(4) * (BigRational(I.first() - 3) + frac(1, I.first()));
    x += e_term(append(I, 2), c * BigRational(w(I)));
  }
  return finish(std::move(x), "x_tw_cycle", true);
}

ESymFunc x_tw_lollipop(int a, int l, int h) {
  require(a >= 1 && l >= 2 && 1 <= h && h <= l - 1, "x_tw_lollipop: need a >= 1, l >= 2, 1 <= h <= l-1");
  const int n = a + l + 1;
  ESymFunc x;
  for (const auto& K : compositions_of(n)) {
    const Tail t(K);
    const int th = theta(K, h);
    if (t.last >= a && th >= 3) x += e_term(K, 2 * w(K));
    if (th <= 1 && t.last >= 3 && t.has_second && (t.last + t.second >= n - h + 1 || t.second >= a)) {
      x += e_term(K, (t.last - 2) * w_without_last(K));
    }
    if (t.last >= a && th == 2) {
      const int d = theta(K, h + 3);
      if (d >= 2) x += e_term(K, frac(d - 1, d) * BigRational(w(K)));
    }
  }
  for (const auto& I : compositions_of(n - 1)) {
    if (I.last() >= a && theta(I, h) >= 3) x += e_term(prepend(1, I), w(I));
  }
  return finish(scale(x, 2 * factorial(a - 1)), "x_tw_lollipop", true);
}

}  // namespace csf
