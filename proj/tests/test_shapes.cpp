#include "doctest.h"

#include <set>

#include "fusion/errors.hpp"
#include "fusion/shapes.hpp"

using namespace fusion;

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({5, 3, 3, 3, 3})) == Partition({5, 5, 5, 1, 1}));
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("5,3,3,3,3").parts() == std::vector<int>{5, 3, 3, 3, 3});
    CHECK(Partition::parse("2,1,0").parts() == std::vector<int>{2, 1});
    CHECK(Partition::parse("0").empty());
    CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
    CHECK(parse_skew("2,2/1").n() == 3);
}

TEST_CASE("skew shapes") {
    SkewShape s = skew(Partition({2}), Partition());
    CHECK(s.cells() == std::vector<Cell>{{1, 1}, {1, 2}});
    CHECK(skew(Partition({5, 3, 3, 3, 3}), Partition({3, 3, 2})).n() == 9);
    CHECK_THROWS_AS(skew(Partition({1}), Partition({2})), ContainmentError);
}

TEST_CASE("content sequences of the nine-box example") {
    SkewShape s = skew(Partition({5, 3, 3, 3, 3}), Partition({3, 3, 2}));
    CHECK(row_tableau(s).contents() == std::vector<int>{3, 4, 0, -3, -2, -1, -4, -3, -2});
    CHECK(column_tableau(s).contents() == std::vector<int>{-3, -4, -2, -3, 0, -1, -2, 3, 4});
}

TEST_CASE("row tableau filling") {
    StandardTableau t = row_tableau(skew(Partition({2, 1})));
    CHECK(t.entry_at({1, 1}) == 1);
    CHECK(t.entry_at({1, 2}) == 2);
    CHECK(t.entry_at({2, 1}) == 3);
    CHECK(column_tableau(skew(Partition({2, 1}))).rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("standard tableaux enumeration") {
    CHECK(standard_tableaux(skew(Partition({1}))).size() == 1);
    CHECK(standard_tableaux(skew(Partition({2, 1}))).size() == 2);
    CHECK(standard_tableaux(skew(Partition({2, 1}), Partition({1}))).size() == 2);
    for (int n = 0; n <= 6; ++n)
        for (const auto& p : partitions_of(n)) {
            auto tabs = standard_tableaux(skew(p));
            CHECK(static_cast<long>(tabs.size()) == dim_sym_irrep(p));
            CHECK(hook_length_dim(p) == dim_sym_irrep(p));
            for (size_t i = 0; i + 1 < tabs.size(); ++i) CHECK(tabs[i].entries() < tabs[i + 1].entries());
        }
    for (const auto& s : skew_shapes_up_to(5, 5))
        for (const auto& t : standard_tableaux(s)) CHECK(is_standard_filling(s, t.entries()));
    CHECK(dim_sym_irrep(Partition({4})) == 1);
    CHECK(dim_sym_irrep(Partition({2, 2})) == 2);
}

TEST_CASE("adjacent swaps and splitting") {
    StandardTableau r = StandardTableau::from_rows({{1, 2}, {3}});
    CHECK(r.swap_adjacent(2)->rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK_FALSE(r.swap_adjacent(1).has_value());
    StandardTableau big = StandardTableau::from_rows({{1, 2, 4}, {3, 5}});
    auto [ups, om] = big.split(3);
    CHECK(ups.rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(om.shape() == skew(Partition({3, 2}), Partition({2, 1})));
    CHECK(om.contents() == std::vector<int>{2, 0});
}

TEST_CASE("validity labels") {
    CHECK(validate_label(Partition({1, 1}), Group::O, 2));
    CHECK_FALSE(validate_label(Partition({1, 1}), Group::Sp, 2));
    CHECK(validate_label(Partition({2}), Group::GL, 1));
    CHECK_FALSE(validate_label(Partition({2, 1}), Group::O, 2));
    CHECK_THROWS_AS(validate_label(Partition({1}), Group::Sp, 3), ParityError);
}

TEST_CASE("semistandard counts") {
    CHECK(count_semistandard(skew(Partition({2})), 2) == 3);
    CHECK(count_semistandard(skew(Partition({1, 1})), 2) == 1);
    CHECK(count_semistandard(skew(Partition({1, 1})), 1) == 0);
    CHECK(count_semistandard(skew(Partition({2, 1}), Partition({1})), 2) == 4);
    // hook-content formula for a straight shape: s_{(2,1)}(1,1,1) = 8
    CHECK(count_semistandard(skew(Partition({2, 1})), 3) == 8);
}
