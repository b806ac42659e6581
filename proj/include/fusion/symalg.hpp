#pragma once

#include <vector>

#include "fusion/group_algebra.hpp"
#include "fusion/shapes.hpp"

namespace fusion {

enum class Mode { Row, Column };

GroupElementQ young_p(const StandardTableau& T);
GroupElementQ young_q(const StandardTableau& T);
// p q p / prod(lambda_i!) for the row tableau.
GroupElementQ e_row(const StandardTableau& T);
// q p q / prod(lambda'_i!) for the column tableau.
GroupElementQ e_col(const StandardTableau& T);

enum class ChainRule { Smallest, Largest };
// k_1..k_b with T = s_{k_b} ... s_{k_1} T^r and every intermediate standard.
std::vector<int> chain_from_row_tableau(const StandardTableau& T, ChainRule rule = ChainRule::Smallest);
// e_T via the seminormal recursion started at e_row.
GroupElementQ e_tableau(const StandardTableau& T, ChainRule rule = ChainRule::Smallest);

// f_ij(x, y) = 1 - (i j)/(x - y) in the group algebra of S_n.
template <class C>
GroupAlgebraElement<C> f_ij(int n, int i, int j, const C& x, const C& y) {
    auto out = GroupAlgebraElement<C>::one(n);
    out.add(Permutation::transposition(n, i, j), -(C(1) / (x - y)));
    return out;
}

// Ordered product over pairs k<l of f_kl(c_k + t_k, c_l + t_l) with the
// constrained variables on the line a_r = r*eps (one a_r per row or column
// of T). Works for skew tableaux; the value at eps = 0 is e_T.
GroupElementRF fusion_product(const StandardTableau& T, Mode mode);
GroupElementQ eval_at_zero(const GroupElementRF& a);

// Straight shapes only.
GroupElementQ fusion_e(const StandardTableau& T, Mode mode);
// Any shape, skew included.
GroupElementQ fusion_e_skew(const StandardTableau& T, Mode mode);

GroupElementQ theta(const GroupElementQ& a, int m);
// e_Omega in S_{l-m} recovered from theta_m(e_L), Omega = entries m+1..l of L.
GroupElementQ e_skew_extract(const StandardTableau& L, int m);

// f_12(x,c_1)...f_{1,l+1}(x,c_l) iota_1(e_L) == (1 - sum_k (1 k+1)/x) iota_1(e_L)
// at every sample. Throws SampleAtPole.
bool check_content_product(const StandardTableau& L, const std::vector<Rational>& x_samples);

// x in CS_n * d and x in d * CS_n respectively, decided by elimination on
// coordinates in the permutation basis.
bool in_left_ideal(const GroupElementQ& x, const GroupElementQ& d);
bool in_right_ideal(const GroupElementQ& x, const GroupElementQ& d);

}  // namespace fusion
