#pragma once

#include "csf/compositions.hpp"
#include "csf/symfunc.hpp"

// Closed-form e_I-expansions of chromatic symmetric functions.
//
// Every evaluator returns the full X_G with exact coefficients; factorial
// prefactors are multiplied back in. Fractional summands are combined exactly
// and the total is checked to be integral before it is returned (an
// InternalError otherwise). Parameters outside a family's hypotheses raise
// ContractError.
//
// Conventions used throughout:
//   - e_I means e_{rho(I)}; e_0 = 1.
//   - Conditions that mention the second-to-last part k_{-2} only hold for
//     compositions with at least two parts.
//   - w(K \ k_{-1}) is 1 when K has a single part.
namespace csf {

/// sum_{I |= n} w_I e_I; n >= 1.
ESymFunc x_path(int n);
/// sum_{I |= n} (i_1 - 1) w_I e_I; n >= 2 (n = 2 is the doubled edge, = X_{K_2}).
ESymFunc x_cycle(int n);
/// K-chain K_I for I with every part >= 2.
ESymFunc x_kchain(const Composition& I);

/// Melting lollipop K_a^l(k); a >= 2, l >= 0, 0 <= k <= a-1.
ESymFunc x_melting_lollipop(int a, int l, int k);
ESymFunc x_lollipop(int a, int l);

/// P^l(K_a, K_b); a, b >= 1, l >= 0.
ESymFunc x_kpk(int a, int b, int l);
/// P^l(K_a, K_3) in its simplified form; a >= 3, l >= 0.
ESymFunc x_kpk_b3(int a, int l);

/// P_{g+1} + K_a + P_{h+1}; g, h >= 0, a >= 2.
ESymFunc x_pkp(int g, int a, int h);
/// K_a + K_b + P_{h+1}; a >= 1, b >= 2, h >= 0.
ESymFunc x_kkp(int a, int b, int h);

/// P^l(K_a, C_c); a >= 1, l >= 0, c >= 2.
ESymFunc x_kpc(int a, int l, int c);
/// Tadpole C_c^l = P^l(K_1, C_c).
ESymFunc x_tadpole(int c, int l);

/// P^g(K_a, K_b^h); g, h >= 0, a >= 1, b >= 2.
ESymFunc x_kpkp(int a, int g, int b, int h);
/// P^g(K_a, K_3^h) in its simplified form; a >= 1, g, h >= 0.
ESymFunc x_kpkp_b3(int a, int g, int h);

/// Path P_n twinned at v_l; n >= 3, 2 <= l <= n-1.
ESymFunc x_tw_path(int n, int l);
/// Cycle C_n twinned at a vertex; n >= 3.
ESymFunc x_tw_cycle(int n);
/// Lollipop K_a^l twinned at the path vertex at distance h from the leaf;
/// a >= 1, l >= 2, 1 <= h <= l-1.
ESymFunc x_tw_lollipop(int a, int l, int h);

/// Kayak paddle P^l(C_a, C_b); a, b >= 3, l >= 0.
ESymFunc x_kayak(int a, int b, int l);
/// Infinity graph (two cycles sharing a vertex); a, b >= 3.
ESymFunc x_infinity(int a, int b);

// The three summand shapes shared by the PKP, KKP and KPKP expansions.
ESymFunc f1_term(const Composition& I, int b);
ESymFunc f2_term(const Composition& I, int b);
ESymFunc f3_term(const Composition& I, int b);

/// f1(I,a) - f2(I,a) - f3(I,a) == ((a-1) e_n if I = (n), else 0).
bool f123_check(int a, const Composition& I);

}  // namespace csf
