#include "doctest.h"

#include "fusion/fusion.hpp"

using namespace fusion;

namespace {

StandardTableau row_t(std::vector<int> lambda, std::vector<int> mu = {}) {
    return row_tableau(skew(Partition(lambda), Partition(mu)));
}

SparseOperator id_op(int N, int n) { return identity_op<Rational>(tensor_dim(N, n)); }

SparseOperator lin(std::initializer_list<std::pair<Rational, SparseOperator>> terms) {
    SparseOperator out(terms.begin()->second.rows(), terms.begin()->second.cols());
    for (const auto& [c, a] : terms) out = SparseOperator(out + scaled(a, c));
    return pruned(out);
}

const auto Sym = FormKind::Symmetric;
const auto Alt = FormKind::Alternating;

}  // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(FusionConfig(row_t({2}), 3, 0, Sym));
    CHECK_THROWS_AS(FusionConfig(row_t({2}), 3, 0, Alt), ParityError);
    CHECK_THROWS_AS(FusionConfig(row_t({2}), 2, 1, Alt), ParityError);
    CHECK_THROWS_AS(FusionConfig(row_t({1, 1, 1}), 2, 0, Sym), InvalidLabel);
    CHECK_THROWS_AS(FusionConfig(row_t({1, 1}), 2, 0, Alt), InvalidLabel);
    CHECK_THROWS_AS(FusionConfig(row_t({2, 1}, {1}), 3, 0, Sym), InvalidLabel);
    FusionConfig c(row_t({2}), 3, 0, Sym);
    CHECK(c.constraint_mode() == Mode::Column);
    CHECK(c.base_point() == Rational(-1, 2));
    FusionConfig d(row_t({2}), 2, 0, Alt);
    CHECK(d.constraint_mode() == Mode::Row);
    CHECK(d.base_point() == Rational(1, 2));
}

TEST_CASE("E operators") {
    auto p = p_op(1, 2, 2, 2);
    auto e = e_operator(row_t({2}), 2);
    CHECK(equal_op(e, lin({{1, id_op(2, 2)}, {1, p}})));
    CHECK(rank(e) == 3);
    e = e_operator(row_t({1, 1}), 2);
    CHECK(equal_op(e, lin({{1, id_op(2, 2)}, {-1, p}})));
    CHECK(rank(e) == 1);
    auto sk = row_t({2, 1}, {1});
    CHECK(sk.contents() == std::vector<int>{1, -1});
    e = e_operator(sk, 2);
    CHECK(equal_op(e, lin({{1, id_op(2, 2)}, {Rational(-1, 2), p}})));
    CHECK(rank(e) == 4);
    CHECK(count_semistandard(sk.shape(), 2) == 4);
}

TEST_CASE("F by the general route") {
    SUBCASE("O_3, lambda (2)") {
        FusionConfig c(row_t({2}), 3, 0, Sym);
        auto f = f_operator_general(c);
        auto q = q_op(1, 2, c.form(), 2);
        CHECK(equal_op(f, lin({{1, id_op(3, 2)}, {1, p_op(1, 2, 3, 2)}, {Rational(-2, 3), q}})));
        CHECK(is_zero_op(product(q, f)));
        CHECK(rank(f) == 5);
    }
    SUBCASE("Sp_2, lambda (2)") {
        FusionConfig c(row_t({2}), 2, 0, Alt);
        auto f = f_operator_general(c);
        CHECK(equal_op(f, lin({{1, id_op(2, 2)}, {1, p_op(1, 2, 2, 2)}})));
        CHECK(rank(f) == 3);
    }
    SUBCASE("O_2, lambda (1,1)") {
        FusionConfig c(row_t({1, 1}), 2, 0, Sym);
        auto f = f_operator_general(c);
        CHECK(equal_op(f, lin({{1, id_op(2, 2)}, {-1, p_op(1, 2, 2, 2)}})));
        CHECK(rank(f) == 1);
        CHECK(is_zero_op(product(q_op(1, 2, c.form(), 2), f)));
    }
}

TEST_CASE("power series route matches rational function route") {
    std::vector<FusionConfig> cfgs;
    for (const auto& lam : partitions_of(3))
        for (const auto& T : standard_tableaux(skew(lam))) {
            for (int N : {2, 3})
                if (validate_label(lam, Group::O, N)) cfgs.emplace_back(T, N, 0, Sym);
            if (validate_label(lam, Group::Sp, 2)) cfgs.emplace_back(T, 2, 0, Alt);
        }
    cfgs.emplace_back(row_t({2, 1}, {1}), 2, 1, Sym);
    cfgs.push_back(FusionConfig::unchecked(row_t({2, 2}), 2, 0, Sym));
    cfgs.push_back(FusionConfig::unchecked(standard_tableaux(skew(Partition({2, 2})))[1], 2, 0, Sym));
    CHECK(cfgs.size() >= 8);
    for (const auto& c : cfgs) {
        INFO(c.str());
        CHECK(equal_op(f_operator_general(c), f_operator_general_rf(c)));
    }
}

TEST_CASE("closed formulas") {
    FusionConfig o3(row_t({2}), 3, 0, Sym);
    auto expect = f_operator_general(o3);
    CHECK(equal_op(f_operator_closed(o3, ClosedFormula::ColO), expect));
    CHECK(equal_op(f_operator_closed(o3, ClosedFormula::Regular), expect));
    CHECK(equal_op(f_operator_closed(o3, ClosedFormula::AnySO), expect));
    CHECK_THROWS_AS(f_operator_closed(o3, ClosedFormula::RowSp), NotApplicable);

    FusionConfig sp2(row_t({2}), 2, 0, Alt);
    CHECK(equal_op(f_operator_closed(sp2, ClosedFormula::RowSp), lin({{1, id_op(2, 2)}, {1, p_op(1, 2, 2, 2)}})));

    FusionConfig o2(row_t({1, 1}), 2, 0, Sym);
    CHECK(equal_op(f_operator_closed(o2, ClosedFormula::ColO), e_operator(o2.tableau, 2)));
    CHECK_FALSE(applicable(o2, ClosedFormula::Regular));
    CHECK_THROWS_AS(f_operator_closed(o2, ClosedFormula::Regular), NotApplicable);

    FusionConfig not_col(row_t({2, 1}), 3, 0, Sym);
    CHECK_THROWS_AS(f_operator_closed(not_col, ClosedFormula::ColO), NotApplicable);
    CHECK(parse_formula("row_Sp") == ClosedFormula::RowSp);
    CHECK_THROWS_AS(parse_formula("nope"), ParseError);
}

TEST_CASE("scaled idempotency and divisibility") {
    CHECK(idempotency_scalar(Partition({2})) == Rational(2));
    CHECK(idempotency_scalar(Partition({2, 1})) == Rational(3));
    auto e2 = e_operator(row_t({2}), 2);
    CHECK(verify_scaled_idempotent(e2, 2));
    CHECK_FALSE(verify_scaled_idempotent(e2, 3));
    CHECK(verify_scaled_idempotent(e_operator(row_t({2, 1}), 2), 3));
    FusionConfig o3(row_t({2}), 3, 0, Sym);
    auto f = f_operator_general(o3);
    CHECK(verify_scaled_idempotent(f, 2));
    CHECK(verify_divisibility(f, e_operator(o3.tableau, 3), 2));
    CHECK(verify_divisibility_spaces(f, e_operator(o3.tableau, 3)));
    CHECK(measure_scalar(f) == Rational(2));
    // 1 - P/2 squares to 5/4 - P: no scalar exists
    CHECK_FALSE(measure_scalar(e_operator(row_t({2, 1}, {1}), 2)).has_value());
}

TEST_CASE("traceless image") {
    CHECK(verify_traceless_image(FusionConfig(row_t({2}), 3, 0, Sym)));
    CHECK(verify_traceless_image(FusionConfig(row_t({1, 1}), 2, 0, Sym)));
    CHECK(verify_traceless_image(FusionConfig(row_t({1}), 2, 0, Alt)));
    FusionConfig o3(row_t({2}), 3, 0, Sym);
    CHECK(intersect(image_basis(e_operator(o3.tableau, 3)), traceless_basis(3, 2, o3.form())).dim() == 5);
    CHECK_THROWS_AS(verify_traceless_image(FusionConfig(row_t({2, 1}, {1}), 2, 1, Sym)), NotApplicable);
}

TEST_CASE("exchange relation") {
    CHECK(verify_exchange(FusionConfig(row_t({2, 1}), 3, 0, Sym), 2));
    // outside the label range F is still regular; for Sp_2 it vanishes
    auto sp = FusionConfig::unchecked(row_t({2, 1}), 2, 0, Alt);
    CHECK(is_zero_op(f_operator_general(sp)));
    CHECK(verify_exchange(sp, 2));
    auto o2 = FusionConfig::unchecked(row_t({2, 2}), 2, 0, Sym);
    CHECK(rank(f_operator_general(o2)) == 1);
    CHECK(verify_exchange(o2, 2));
    CHECK_THROWS_AS(verify_exchange(FusionConfig(row_t({2, 1}), 3, 0, Sym), 1), NonStandardNeighbor);
}

TEST_CASE("theta factorization") {
    auto L = row_t({2});
    CHECK(verify_theta_factorization(L, 0, 3, 0, Sym));
    CHECK(verify_theta_factorization(L, 1, 2, 1, Sym));
    for (const auto& T : standard_tableaux(skew(Partition({2, 1})))) CHECK(verify_theta_factorization(T, 1, 2, 2, Sym));
    CHECK_THROWS_AS(verify_theta_factorization(row_t({1, 1}), 1, 3, 1, Alt), NotApplicable);
    CHECK_THROWS_AS(verify_theta_factorization(row_t({3, 1}), 1, 3, 3, Sym), SizeLimitExceeded);
}

TEST_CASE("rank bound") {
    CHECK(verify_rank_bound(FusionConfig(row_t({2}), 3, 0, Sym)));
    CHECK(verify_rank_bound(FusionConfig(row_t({2, 1}, {1}), 2, 1, Sym)));
}
