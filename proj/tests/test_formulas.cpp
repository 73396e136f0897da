#include <gtest/gtest.h>

#include "csf/errors.hpp"
#include "csf/formulas.hpp"
#include "csf/oracle.hpp"

using namespace csf;

namespace {

ESymFunc brute(const Graph& g) { return csf_bruteforce(g); }
ESymFunc en_times_factorial(int n) { return e_term(Partition{n}, factorial(n)); }

}  // namespace

TEST(Formulas, PathAndCycle) {
  EXPECT_EQ(x_path(1), e_term(Partition{1}));
  EXPECT_EQ(x_path(3), parse_text("3*e[3] + 1*e[2,1]"));
  EXPECT_EQ(x_path(6), brute(path(6)));
  EXPECT_EQ(x_cycle(3), e_term(Partition{3}, 6));
  EXPECT_EQ(x_cycle(2), e_term(Partition{2}, 2));
  EXPECT_EQ(x_cycle(7), brute(cycle(7)));
  EXPECT_THROW(x_path(0), ContractError);
  EXPECT_THROW(x_cycle(1), ContractError);
}

TEST(Formulas, KChain) {
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(x_kchain({n}), en_times_factorial(n));
  EXPECT_EQ(x_kchain({2, 2, 2}), x_path(4));
  EXPECT_EQ(x_kchain({3, 3}), brute(k_chain({3, 3})));
  EXPECT_EQ(x_kchain({2, 4, 3}), brute(k_chain({2, 4, 3})));
  EXPECT_THROW(x_kchain({3, 1}), ContractError);
}

TEST(Formulas, Lollipops) {
  for (int a = 2; a <= 6; ++a) EXPECT_EQ(x_lollipop(a, 0), en_times_factorial(a));
  EXPECT_EQ(x_melting_lollipop(3, 1, 2), brute(melting_lollipop(3, 1, 2)));
  EXPECT_EQ(x_lollipop(3, 2), brute(lollipop(3, 2)));
  EXPECT_THROW(x_melting_lollipop(3, 1, 3), ContractError);
  EXPECT_THROW(x_lollipop(1, 2), ContractError);
}

TEST(Formulas, Kpk) {
  EXPECT_EQ(x_kpk(2, 2, 1), parse_text("4*e[4] + 2*e[3,1] + 2*e[2,2]"));
  for (int l = 0; l <= 5; ++l) EXPECT_EQ(x_kpk(1, 1, l), x_path(l + 1));
  EXPECT_EQ(x_kpk(3, 3, 2), brute(kpk(3, 3, 2)));
  EXPECT_EQ(x_kpk_b3(3, 0), x_kpk(3, 3, 0));
  EXPECT_EQ(x_kpk_b3(3, 1), x_kpc(3, 1, 3));
  EXPECT_EQ(x_kpk_b3(4, 0), brute(kpk(4, 3, 0)));
  EXPECT_THROW(x_kpk_b3(2, 1), ContractError);
}

TEST(Formulas, PkpKkp) {
  for (int a = 2; a <= 6; ++a) EXPECT_EQ(x_pkp(0, a, 0), en_times_factorial(a));
  EXPECT_EQ(x_pkp(1, 3, 1), brute(pkp(1, 3, 1)));
  EXPECT_EQ(x_kkp(2, 3, 1), brute(kkp(2, 3, 1)));
  EXPECT_THROW(x_pkp(0, 1, 0), ContractError);
  EXPECT_THROW(x_kkp(1, 1, 0), ContractError);
}

TEST(Formulas, Kpc) {
  for (int c = 3; c <= 7; ++c) EXPECT_EQ(x_tadpole(c, 0), x_cycle(c));
  EXPECT_EQ(x_kpc(2, 1, 4), brute(kpc(2, 1, 4)));
  EXPECT_EQ(x_tadpole(4, 2), x_kpc(1, 2, 4));
  // C_2 is the doubled edge, so P^l(K_a, C_2) has the same X as P^l(K_a, K_2).
  EXPECT_EQ(x_kpc(3, 1, 2), x_kpk(3, 2, 1));
}

TEST(Formulas, Kpkp) {
  EXPECT_EQ(x_kpkp(2, 0, 2, 0), x_path(3));
  EXPECT_EQ(x_kpkp(3, 1, 2, 1), x_lollipop(3, 3));
  EXPECT_EQ(x_kpkp(3, 1, 3, 1), brute(kpkp(3, 1, 3, 1)));
  EXPECT_EQ(x_kpkp_b3(2, 1, 1), x_kpkp(2, 1, 3, 1));
  // K_1 + P_{g+1} + K_3 + P_{h+1} is P_{g+1} + K_3 + P_{h+1}.
  EXPECT_EQ(x_kpkp_b3(1, 1, 1), x_pkp(1, 3, 1));
  EXPECT_EQ(x_kpkp_b3(3, 0, 1), brute(kpkp(3, 0, 3, 1)));
  EXPECT_THROW(x_kpkp(1, 0, 1, 0), ContractError);
}

TEST(Formulas, TwinnedPath) {
  EXPECT_EQ(x_tw_path(3, 2), brute(tw_path(3, 2)));
  EXPECT_EQ(x_tw_path(5, 3), x_tw_path_rec(5, 3));
  for (int n = 3; n <= 8; ++n) {
    for (int l = 2; l <= n - 1; ++l) {
      const ESymFunc x = x_tw_path(n, l);
      EXPECT_EQ(x.degree(), n + 1);
      EXPECT_TRUE(is_e_positive(x) && has_integer_coefficients(x));
    }
  }
  EXPECT_THROW(x_tw_path(3, 3), ContractError);
}

TEST(Formulas, TwinnedCycle) {
  EXPECT_EQ(x_tw_cycle(4), parse_text("50*e[5] + 6*e[4,1] + 4*e[3,2]"));
  EXPECT_EQ(x_tw_cycle(5), parse_text("84*e[6] + 16*e[5,1] + 20*e[4,2] + 12*e[3,3]"));
  EXPECT_EQ(x_tw_cycle(6),
            parse_text("126*e[7] + 30*e[6,1] + 44*e[5,2] + 66*e[4,3] + 6*e[4,2,1] + 4*e[3,2,2]"));
  EXPECT_EQ(x_tw_cycle(3), e_term(Partition{4}, 24));
  EXPECT_THROW(x_tw_cycle(2), ContractError);
}

TEST(Formulas, TwinnedLollipop) {
  EXPECT_EQ(x_tw_lollipop(1, 3, 1), brute(tw_lollipop(1, 3, 1)));
  EXPECT_EQ(x_tw_lollipop(3, 2, 1), x_tw_lollipop_rec(3, 2, 1));
  EXPECT_EQ(x_tw_lollipop(2, 3, 2), brute(tw_lollipop(2, 3, 2)));
  EXPECT_THROW(x_tw_lollipop(3, 3, 0), ContractError);
  EXPECT_THROW(x_tw_lollipop(3, 1, 1), ContractError);
}

TEST(Formulas, KayakAndInfinity) {
  EXPECT_EQ(x_kayak(3, 3, 0), x_infinity(3, 3));
  EXPECT_EQ(x_kayak(3, 3, 1), brute(kayak(3, 3, 1)));
  const ESymFunc k431 = x_kayak(4, 3, 1);
  EXPECT_TRUE(is_e_positive(k431) && has_integer_coefficients(k431));
  EXPECT_EQ(x_infinity(3, 3), brute(infinity_graph(3, 3)));
  EXPECT_EQ(x_infinity(4, 3), x_kayak(4, 3, 0));
  EXPECT_EQ(x_infinity(3, 4), x_infinity(4, 3));
  EXPECT_EQ(x_infinity(5, 4), x_infinity(4, 5));
  EXPECT_THROW(x_kayak(2, 3, 0), ContractError);
  EXPECT_THROW(x_infinity(3, 2), ContractError);
}

TEST(Formulas, F123) {
  EXPECT_EQ(f1_term({5}, 3) - f2_term({5}, 3) - f3_term({5}, 3), e_term(Partition{5}, 2));
  EXPECT_TRUE((f1_term({2, 3}, 3) - f2_term({2, 3}, 3) - f3_term({2, 3}, 3)).is_zero());
  for (int n = 1; n <= 8; ++n) {
    for (const auto& I : compositions_of(n)) {
      for (int a = 2; a <= 9; ++a) EXPECT_TRUE(f123_check(a, I));
    }
  }
}
