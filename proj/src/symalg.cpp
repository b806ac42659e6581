#include "fusion/symalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fusion/linalg.hpp"

namespace fusion {

namespace {

void require_straight(const StandardTableau& T) {
    if (!T.shape().is_straight())
        throw SkewShapeError("needs a tableau of straight shape, got " + T.shape().str());
}

// Sum of sign^k(s) s over permutations preserving every block.
GroupElementQ stabilizer_sum(int n, const std::vector<std::vector<int>>& blocks, bool signed_sum) {
    std::vector<int> block_of(n + 1, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) block_of[e] = static_cast<int>(b);
    GroupElementQ out(n);
    for (const auto& s : all_permutations(n)) {
        bool keeps = true;
        for (int k = 1; k <= n && keeps; ++k) keeps = block_of[s(k)] == block_of[k];
        if (keeps) out.add(s, Rational(signed_sum ? s.sign() : 1));
    }
    return out;
}

std::vector<std::vector<int>> column_sets(const StandardTableau& T) {
    std::vector<std::vector<int>> cols(T.shape().lambda()[1]);
    for (int k = 1; k <= T.n(); ++k) cols[T.cell_of(k).col - 1].push_back(k);
    return cols;
}

Rational product_of_factorials(const Partition& p) {
    Rational f(1);
    for (int part : p.parts()) f *= factorial(part);
    return f;
}

bool in_ideal(const GroupElementQ& x, const GroupElementQ& d, bool left) {
    const int n = d.degree();
    if (x.degree() != n) throw DegreeMismatch("ideal membership across different degrees");
    std::map<Permutation, long> index;
    const auto perms = all_permutations(n);
    for (const auto& s : perms) index.emplace(s, static_cast<long>(index.size()));
    auto coords = [&](const GroupElementQ& a) {
        SparseVector v;
        for (const auto& [s, c] : a.terms()) v.emplace_back(index.at(s), c);
        std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        return v;
    };
    Echelon e(static_cast<long>(perms.size()));
    for (const auto& s : perms) e.insert(coords(left ? d.times_left(s) : d.times(s)));
    return e.contains(coords(x));
}

}  // namespace

GroupElementQ young_p(const StandardTableau& T) {
    require_straight(T);
    return stabilizer_sum(T.n(), T.rows(), false);
}

GroupElementQ young_q(const StandardTableau& T) {
    require_straight(T);
    return stabilizer_sum(T.n(), column_sets(T), true);
}

GroupElementQ e_row(const StandardTableau& T) {
    require_straight(T);
    if (!(T == row_tableau(T.shape()))) throw WrongTableau("e_row needs the row tableau");
    GroupElementQ p = young_p(T);
    GroupElementQ e = p * young_q(T) * p;
    return e * inverse(product_of_factorials(T.shape().lambda()));
}

GroupElementQ e_col(const StandardTableau& T) {
    require_straight(T);
    if (!(T == column_tableau(T.shape()))) throw WrongTableau("e_col needs the column tableau");
    GroupElementQ q = young_q(T);
    GroupElementQ e = q * young_p(T) * q;
    return e * inverse(product_of_factorials(conjugate(T.shape().lambda())));
}

std::vector<int> chain_from_row_tableau(const StandardTableau& T, ChainRule rule) {
    // Walk from T down to T^r: swapping k, k+1 when k+1 sits in a higher row
    // keeps the tableau standard and removes one row inversion.
    std::vector<int> down;
    StandardTableau cur = T;
    for (;;) {
        std::vector<int> cand;
        for (int k = 1; k < cur.n(); ++k)
            if (cur.cell_of(k + 1).row < cur.cell_of(k).row) cand.push_back(k);
        if (cand.empty()) break;
        int k = rule == ChainRule::Smallest ? cand.front() : cand.back();
        cur = *cur.swap_adjacent(k);
        down.push_back(k);
    }
    std::reverse(down.begin(), down.end());
    return down;
}

GroupElementQ e_tableau(const StandardTableau& T, ChainRule rule) {
    require_straight(T);
    StandardTableau cur = row_tableau(T.shape());
    GroupElementQ e = e_row(cur);
    const int n = T.n();
    for (int k : chain_from_row_tableau(T, rule)) {
        Rational h = inverse(Rational(cur.content_of(k + 1) - cur.content_of(k)));
        GroupElementQ sk(Permutation::transposition(n, k, k + 1));
        sk.add(Permutation::identity(n), -h);
        e = sk * e * sk * inverse(Rational(1) - h * h);
        cur = *cur.swap_adjacent(k);
    }
    if (!e.coeff(Permutation::identity(n)).is_one())
        throw Error("identity coefficient of e_T is not 1 for " + T.str());
    return e;
}

GroupElementRF fusion_product(const StandardTableau& T, Mode mode) {
    const int n = T.n();
    std::vector<int> line(n);
    for (int k = 1; k <= n; ++k) line[k - 1] = mode == Mode::Row ? T.cell_of(k).row : T.cell_of(k).col;
    auto acc = GroupElementRF::one(n);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Polynomial diff = Polynomial::linear(Rational(T.content_of(k) - T.content_of(l)),
                                                 Rational(line[k - 1] - line[l - 1]));
            RationalFunction coef = -RationalFunction(Polynomial(1), diff);
            GroupElementRF moved = acc.times(Permutation::transposition(n, k, l));
            acc += moved * coef;
        }
    return acc;
}

GroupElementQ eval_at_zero(const GroupElementRF& a) {
    return a.map<Rational>([](const RationalFunction& f) { return f.eval_at_zero(); });
}

GroupElementQ fusion_e(const StandardTableau& T, Mode mode) {
    require_straight(T);
    return eval_at_zero(fusion_product(T, mode));
}

GroupElementQ fusion_e_skew(const StandardTableau& T, Mode mode) {
    return eval_at_zero(fusion_product(T, mode));
}

GroupElementQ theta(const GroupElementQ& a, int m) {
    return a.filter([m](const Permutation& s) { return s.preserves_prefix(m); });
}

GroupElementQ e_skew_extract(const StandardTableau& L, int m) {
    require_straight(L);
    const int l = L.n();
    if (m < 0 || m >= l) throw IndexError("m out of range in e_skew_extract");
    GroupElementQ e = e_tableau(L);
    if (m == 0) return e;
    GroupElementQ out(l - m);
    const GroupElementQ kept = theta(e, m);
    for (const auto& [s, c] : kept.terms()) {
        bool head_identity = true;
        for (int k = 1; k <= m; ++k) head_identity = head_identity && s(k) == k;
        if (!head_identity) continue;
        std::vector<int> tail(l - m);
        for (int k = m + 1; k <= l; ++k) tail[k - m - 1] = s(k) - m;
        out.add(Permutation(tail), c);
    }
    return out;
}

bool check_content_product(const StandardTableau& L, const std::vector<Rational>& x_samples) {
    require_straight(L);
    const int l = L.n();
    GroupElementQ lifted = e_tableau(L).shifted(1);
    for (const Rational& x : x_samples) {
        if (x.is_zero()) throw SampleAtPole("x = 0 is a pole");
        for (int k = 1; k <= l; ++k)
            if (x == Rational(L.content_of(k))) throw SampleAtPole("x equals a content");
        auto lhs = GroupElementQ::one(l + 1);
        for (int k = 1; k <= l; ++k) lhs = lhs * f_ij<Rational>(l + 1, 1, k + 1, x, Rational(L.content_of(k)));
        lhs = lhs * lifted;
        auto jm = GroupElementQ::one(l + 1);
        for (int k = 1; k <= l; ++k) jm.add(Permutation::transposition(l + 1, 1, k + 1), -inverse(x));
        if (!(lhs == jm * lifted)) return false;
    }
    return true;
}

bool in_left_ideal(const GroupElementQ& x, const GroupElementQ& d) { return in_ideal(x, d, true); }

bool in_right_ideal(const GroupElementQ& x, const GroupElementQ& d) { return in_ideal(x, d, false); }

}  // namespace fusion
