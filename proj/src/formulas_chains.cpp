#include <algorithm>
#include <cstdlib>

#include "csf/formulas.hpp"
#include "formulas_internal.hpp"

namespace csf {

using detail::finish;
using detail::frac;
using detail::Tail;

ESymFunc x_path(int n) {
  require(n >= 1, "x_path: need n >= 1");
  ESymFunc x;
  for (const auto& I : compositions_of(n)) x.add_term(rho(I), w(I));
  return finish(std::move(x), "x_path");
}

ESymFunc x_cycle(int n) {
  require(n >= 2, "x_cycle: need n >= 2");
  ESymFunc x;
  for (const auto& I : compositions_min2(n)) x.add_term(rho(I), (I.first() - 1) * w(I));
  return finish(std::move(x), "x_cycle");
}

ESymFunc x_kchain(const Composition& I) {
  require(!I.empty(), "x_kchain: empty composition");
  for (int p : I.parts()) require(p >= 2, "x_kchain: every part must be at least 2");
  const int l = I.length();
  const int n = I.size();
  const auto& i = I.vec();

  BigRational pre = factorial(i[l - 1] - 1);
  for (int j = 0; j + 1 < l; ++j) pre *= factorial(i[j] - 2);

  ESymFunc x;
  for (const auto& K : weak_compositions(n - l + 1, l)) {
    bool ok = true;
    long long coeff = K[0];
    int suffix_k = 0, suffix_i = 0;
    for (int j = l; j >= 2 && ok; --j) {
      suffix_k += K[j - 1];
      suffix_i += i[j - 1];
      const int bound = suffix_i - (l - j);
      const int prev = i[j - 2];
      const int kj = K[j - 1];
      ok = (kj < prev && suffix_k < bound) || (kj >= prev && suffix_k >= bound);
      coeff *= std::abs(kj - prev + 1);
    }
    if (!ok || coeff == 0) continue;
    x.add_term(rho(K.drop_zeros()), coeff);
  }
  return finish(scale(x, pre), "x_kchain");
}

ESymFunc x_melting_lollipop(int a, int l, int k) {
  require(a >= 2 && l >= 0 && 0 <= k && k <= a - 1, "x_melting_lollipop: need a >= 2, l >= 0, 0 <= k <= a-1");
  const int n = a + l;
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    if (I.last() == a - 1) {
      x.add_term(rho(I), static_cast<long long>(k) * w_without_last(I));
    } else if (I.last() >= a) {
      x.add_term(rho(I), (a - k - 1) * w(I));
    }
  }
  return finish(scale(x, factorial(a - 2)), "x_melting_lollipop");
}

ESymFunc x_lollipop(int a, int l) { return x_melting_lollipop(a, l, 0); }

ESymFunc x_kpk(int a, int b, int l) {
  require(a >= 1 && b >= 1 && l >= 0, "x_kpk: need a, b >= 1, l >= 0");
  const int n = a + b + l - 1;
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    if (I.last() < a) continue;
    if (I.first() >= b) x.add_term(rho(I), w(I));
    if (I.length() >= 2 && I.first() <= b - 1 && b - 1 < I.part(2)) {
      long long c = I.part(2) - I.first();
      for (int j = 3; j <= I.length(); ++j) c *= I.part(j) - 1;
      x.add_term(rho(I), c);
    }
  }
  return finish(scale(x, factorial(a - 1) * factorial(b - 1)), "x_kpk");
}

ESymFunc x_kpk_b3(int a, int l) {
  require(a >= 3 && l >= 0, "x_kpk_b3: need a >= 3, l >= 0");
  const int n = a + l + 2;
  ESymFunc x;
  x.add_term(Partition{n - 2, 2}, n - 4);
  for (const auto& I : compositions_of(n)) {
    if (I.last() < a || I.last() == n - 2) continue;
    if (I.length() >= 2 && I.part(2) < 3) continue;
    x.add_term(rho(I), w(I));
  }
  return finish(scale(x, 2 * factorial(a - 1)), "x_kpk_b3");
}

ESymFunc f1_term(const Composition& I, int b) { return e_term(I, BigRational(b - 1) * BigRational(w(I))); }

ESymFunc f2_term(const Composition& I, int b) {
  return e_term(I, BigRational(b - 2) * BigRational(I.last()) * BigRational(w_without_last(I)));
}

ESymFunc f3_term(const Composition& I, int b) {
  return e_term(I, BigRational(I.last() - b + 1) * BigRational(w_without_last(I)));
}

bool f123_check(int a, const Composition& I) {
  require(!I.empty(), "f123_check: empty composition");
  const ESymFunc lhs = f1_term(I, a) - f2_term(I, a) - f3_term(I, a);
  const ESymFunc rhs = I.length() == 1 ? e_term(I, a - 1) : ESymFunc{};
  return lhs == rhs;
}

ESymFunc x_pkp(int g, int a, int h) {
  require(g >= 0 && h >= 0 && a >= 2, "x_pkp: need g, h >= 0, a >= 2");
  const int n = g + a + h;
  ESymFunc x = e_term(Partition{n}, a - 1);
  for (const auto& I : compositions_of(n)) {
    if (theta(I, h + 1) >= a - 1) x += f2_term(I, a);
    if (I.last() >= a - 1) x += f3_term(I, a);
  }
  return finish(scale(x, factorial(a - 2)), "x_pkp");
}

ESymFunc x_kkp(int a, int b, int h) {
  require(a >= 1 && b >= 2 && h >= 0, "x_kkp: need a >= 1, b >= 2, h >= 0");
  const int n = a + b + h - 1;
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    const Tail t(I);
    if (t.last >= n - h) x += f1_term(I, b);
    if (!t.has_second || t.last + t.second < n - h) continue;
    if (t.last <= std::min(a - 1, b - 2)) x -= f3_term(I, b);
    if (std::max(a, b) <= t.last && t.last <= n - h - 1) x += f3_term(I, b);
  }
  return finish(scale(x, factorial(a - 1) * factorial(b - 2)), "x_kkp", true);
}

ESymFunc x_kpc(int a, int l, int c) {
  require(a >= 1 && l >= 0 && c >= 2, "x_kpc: need a >= 1, l >= 0, c >= 2");
  const int n = a + l + c - 1;
  ESymFunc x;
  for (const auto& I : compositions_of(n)) {
    BigRational coeff;
    if (I.length() >= 2 && I.part(2) < a) {
      continue;
    } else if (I.length() >= 2 && I.first() <= a - 1 && I.part(2) >= a + l) {
      const int i1 = I.first(), i2 = I.part(2);
      coeff = BigRational(i2 - a - l) + frac(i2 - i1, i2 - 1);
    } else {
      coeff = theta(I, a + l);
    }
    x.add_term(rho(I), coeff * BigRational(w(I)));
  }
  return finish(scale(x, factorial(a - 1)), "x_kpc");
}

ESymFunc x_tadpole(int c, int l) { return x_kpc(1, l, c); }

ESymFunc x_kpkp(int a, int g, int b, int h) {
  require(a >= 1 && b >= 2 && g >= 0 && h >= 0, "x_kpkp: need a >= 1, b >= 2, g, h >= 0");
  const int n = a + g + b + h - 1;
  ESymFunc x = e_term(Partition{n}, static_cast<long>(b - 1) * n);
  for (const auto& K : compositions_of(n)) {
    const Tail t(K);
    if (!t.has_second) continue;
    const int th = theta(K, h + 1);
    const int k1 = t.last, k2 = t.second;
    if (th >= b - 1) {
      if (k1 + k2 <= n - h - 1 && k1 >= b - 1 && k2 >= a) x += f1_term(K, b);
      if (k1 + k2 >= n - h && k1 >= std::max(a, b - 1)) x += f1_term(K, b);
      if (k1 <= b - 2 && k2 >= a && (k1 >= a || k1 + k2 <= n - h - 1)) x += f2_term(K, b);
      if (k1 + k2 >= n - h && k1 <= std::min(a - 1, b - 2)) x -= f3_term(K, b);
    } else if (k1 >= b - 1 && (k1 + k2 >= n - h || k2 >= a)) {
      x += f3_term(K, b);
    }
  }
  return finish(scale(x, factorial(a - 1) * factorial(b - 2)), "x_kpkp", true);
}

ESymFunc x_kpkp_b3(int a, int g, int h) {
  require(a >= 1 && g >= 0 && h >= 0, "x_kpkp_b3: need a >= 1, g, h >= 0");
  const int n = a + g + h + 2;
  ESymFunc x;
  for (const auto& K : compositions_of(n)) {
    const Tail t(K);
    const int th = theta(K, h + 1);
    if (th >= 2) {
      if (t.last >= a) x.add_term(rho(K), 2 * w(K));
      if (t.has_second && t.last == 1 && t.second >= a) x.add_term(rho(K), w_without_last(K));
    } else if (t.last >= 2 && t.has_second && (t.last + t.second >= n - h || t.second >= a)) {
      x.add_term(rho(K), (t.last - 2) * w_without_last(K));
    }
  }
  return finish(scale(x, factorial(a - 1)), "x_kpkp_b3", true);
}

}  // namespace csf
