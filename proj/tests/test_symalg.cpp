#include "doctest.h"

#include <random>

#include "fusion/symalg.hpp"

using namespace fusion;

namespace {

Permutation cyc(int n, const char* s) { return Permutation::parse_cycles(n, s); }

GroupElementQ elem(int n, std::initializer_list<std::pair<const char*, Rational>> terms) {
    GroupElementQ out(n);
    for (const auto& [c, v] : terms) out.add(cyc(n, c), v);
    return out;
}

// The (2,1) row-tableau element, expanded by hand.
GroupElementQ e21_row() {
    Rational h(-1, 2);
    return elem(3, {{"", 1}, {"(1 2)", 1}, {"(1 3)", h}, {"(2 3)", h}, {"(1 2 3)", h}, {"(1 3 2)", h}});
}

}  // namespace

TEST_CASE("composition convention") {
    Permutation p = compose(cyc(3, "(1 3)"), cyc(3, "(1 2)"));
    CHECK(p(1) == 2);
    CHECK(p(2) == 3);
    CHECK(p(3) == 1);
    CHECK(compose(cyc(3, "(1 2)"), cyc(3, "(1 2)")).is_identity());
    CHECK(cyc(4, "(1 2 3)").cycles() == "(1 2 3)");
    CHECK_THROWS_AS(compose(cyc(3, ""), cyc(4, "")), DegreeMismatch);
}

TEST_CASE("young p and q") {
    auto t2 = row_tableau(skew(Partition({2})));
    CHECK(young_p(t2) == elem(2, {{"", 1}, {"(1 2)", 1}}));
    CHECK(young_q(t2) == GroupElementQ::one(2));
    auto t11 = row_tableau(skew(Partition({1, 1})));
    CHECK(young_p(t11) == GroupElementQ::one(2));
    CHECK(young_q(t11) == elem(2, {{"", 1}, {"(1 2)", -1}}));
    auto t21 = row_tableau(skew(Partition({2, 1})));
    CHECK(young_q(t21) == elem(3, {{"", 1}, {"(1 3)", -1}}));
    CHECK_THROWS_AS(young_p(row_tableau(skew(Partition({2, 1}), Partition({1})))), SkewShapeError);
}

TEST_CASE("explicit symmetrizers") {
    CHECK(e_row(row_tableau(skew(Partition({2})))) == elem(2, {{"", 1}, {"(1 2)", 1}}));
    CHECK(e_col(column_tableau(skew(Partition({1, 1})))) == elem(2, {{"", 1}, {"(1 2)", -1}}));
    CHECK(e_row(row_tableau(skew(Partition({2, 1})))) == e21_row());
    CHECK_THROWS_AS(e_row(column_tableau(skew(Partition({2, 1})))), WrongTableau);
}

TEST_CASE("seminormal recursion reaches the column tableau") {
    auto shape = skew(Partition({2, 1}));
    auto col = column_tableau(shape);
    CHECK(chain_from_row_tableau(col) == std::vector<int>{2});
    CHECK(e_tableau(col) == e_col(col));
    CHECK(e_tableau(row_tableau(shape)) == e21_row());
    for (int l = 1; l <= 5; ++l)
        for (const auto& lam : partitions_of(l)) {
            auto s = skew(lam);
            auto c = column_tableau(s);
            CHECK(e_tableau(c) == e_col(c));
            for (const auto& T : standard_tableaux(s))
                CHECK(e_tableau(T, ChainRule::Smallest) == e_tableau(T, ChainRule::Largest));
        }
}

TEST_CASE("fusion of the (2,1) row tableau") {
    auto T = row_tableau(skew(Partition({2, 1})));
    CHECK(fusion_e(T, Mode::Row) == e21_row());
    CHECK(fusion_e(T, Mode::Column) == e21_row());
    CHECK(fusion_e(row_tableau(skew(Partition({2}))), Mode::Row) == elem(2, {{"", 1}, {"(1 2)", 1}}));
    CHECK(fusion_e(row_tableau(skew(Partition({1, 1}))), Mode::Row) == elem(2, {{"", 1}, {"(1 2)", -1}}));
}

TEST_CASE("scaled idempotency and route independence up to five boxes") {
    for (int l = 1; l <= 5; ++l)
        for (const auto& lam : partitions_of(l)) {
            Rational scalar = factorial(l) / Rational(hook_length_dim(lam));
            for (const auto& T : standard_tableaux(skew(lam))) {
                GroupElementQ e = e_tableau(T);
                CHECK(e.coeff(Permutation::identity(l)) == Rational(1));
                CHECK(e * e == e * scalar);
                CHECK(fusion_e(T, Mode::Row) == e);
                CHECK(fusion_e(T, Mode::Column) == e);
            }
        }
}

TEST_CASE("theta and skew extraction") {
    GroupElementQ a = elem(3, {{"", 1}, {"(1 2)", 1}, {"(1 3)", 1}});
    CHECK(theta(a, 1) == GroupElementQ::one(3));
    CHECK(theta(a, 0) == a);
    CHECK(theta(e21_row(), 1) == elem(3, {{"", 1}, {"(2 3)", Rational(-1, 2)}}));
    auto T = row_tableau(skew(Partition({2, 1})));
    CHECK(e_skew_extract(T, 1) == elem(2, {{"", 1}, {"(1 2)", Rational(-1, 2)}}));
    CHECK(e_skew_extract(T, 0) == e21_row());
    CHECK(e_skew_extract(row_tableau(skew(Partition({2}))), 1) == GroupElementQ::one(1));
}

TEST_CASE("skew fusion matches extraction") {
    auto om = row_tableau(skew(Partition({2, 1}), Partition({1})));
    CHECK(om.contents() == std::vector<int>{1, -1});
    CHECK(fusion_e_skew(om, Mode::Row) == elem(2, {{"", 1}, {"(1 2)", Rational(-1, 2)}}));
    CHECK(fusion_e_skew(row_tableau(skew(Partition({1}))), Mode::Row) == GroupElementQ::one(1));
    for (int l = 2; l <= 5; ++l)
        for (const auto& lam : partitions_of(l))
            for (const auto& L : standard_tableaux(skew(lam)))
                for (int m = 1; m < l; ++m) {
                    auto [ups, omega] = L.split(m);
                    GroupElementQ ex = e_skew_extract(L, m);
                    CHECK(fusion_e_skew(omega, Mode::Row) == ex);
                    CHECK(fusion_e_skew(omega, Mode::Column) == ex);
                    GroupElementQ e = e_tableau(L);
                    CHECK(in_left_ideal(e, ex.shifted(m)));
                    CHECK(in_right_ideal(e, ex.shifted(m)));
                }
}

TEST_CASE("f_ij relations at sample points") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int trial = 0; trial < 3; ++trial) {
        Rational x(d(rng), 3), y(d(rng) + 100, 7), z(d(rng) - 100, 5), w(d(rng), 11);
        auto f = [](int n, int i, int j, Rational a, Rational b) { return f_ij<Rational>(n, i, j, a, b); };
        CHECK(f(3, 1, 2, x, y) * f(3, 1, 3, x, z) * f(3, 2, 3, y, z) ==
              f(3, 2, 3, y, z) * f(3, 1, 3, x, z) * f(3, 1, 2, x, y));
        CHECK(f(4, 1, 2, x, y) * f(4, 3, 4, z, w) == f(4, 3, 4, z, w) * f(4, 1, 2, x, y));
    }
}

TEST_CASE("jucys-murphy identity in the group algebra") {
    CHECK(check_content_product(row_tableau(skew(Partition({1}))), {Rational(3)}));
    CHECK(check_content_product(row_tableau(skew(Partition({2}))), {Rational(5)}));
    CHECK(check_content_product(row_tableau(skew(Partition({2, 1}))), {Rational(7)}));
    for (int l = 1; l <= 4; ++l)
        for (const auto& lam : partitions_of(l))
            for (const auto& L : standard_tableaux(skew(lam))) {
                std::vector<Rational> xs;
                for (int k = 0; k < l + 2; ++k) xs.emplace_back(11 + 3 * k, 2);
                CHECK(check_content_product(L, xs));
            }
    CHECK_THROWS_AS(check_content_product(row_tableau(skew(Partition({2}))), {Rational(1)}), SampleAtPole);
}
