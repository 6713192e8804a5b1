#include <doctest.h>

#include <set>

#include "staircase/error.hpp"
#include "staircase/partition.hpp"

using namespace staircase;

namespace {

Partition P(std::vector<int> v)
{
    return Partition(std::move(v));
}

}  // namespace

TEST_CASE("partition validation and parsing")
{
    CHECK_THROWS_AS(P({1, 2}), Error);
    CHECK_THROWS_AS(P({2, 0}), Error);
    CHECK(Partition::parse("6,4,2,1") == P({6, 4, 2, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(P({6, 4, 2, 1}).to_string() == "6,4,2,1");
    CHECK(Partition().to_string().empty());
    CHECK(P({6, 4, 2, 1}).size() == 13);
    CHECK(Partition::staircase(5) == P({4, 3, 2, 1}));
    CHECK_THROWS_AS(StrictPartition(std::vector<int>{2, 2}), Error);
    try {
        Partition::parse("3,x");
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(P({6, 4, 2, 1})) == P({4, 3, 2, 2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(P({1})) == P({1}));
    for (int k = 0; k <= 20; ++k)
        for (const auto& p : partitions_of(k)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("cells")
{
    auto ord = cells(P({2, 1}), DiagramKind::Ordinary);
    CHECK(ord == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});
    auto sh = cells(P({2, 1}), DiagramKind::Shifted);
    CHECK(sh == std::vector<Cell>{{1, 1}, {1, 2}, {2, 2}});
    auto fig = cells(P({6, 4, 2, 1}), DiagramKind::Shifted);
    CHECK(fig.size() == 13);
    CHECK(fig.back() == Cell{4, 4});
    CHECK(contains(P({6, 4, 2, 1}), {3, 4}, DiagramKind::Shifted));
    CHECK_FALSE(contains(P({6, 4, 2, 1}), {3, 2}, DiagramKind::Shifted));
    try {
        cells(P({2, 2}), DiagramKind::Shifted);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ShiftedOfNonStrict);
    }
}

TEST_CASE("hook lengths")
{
    auto p = P({6, 4, 2, 1});
    CHECK(hook_length(p, {1, 1}, DiagramKind::Ordinary) == 9);
    CHECK(hook_length(p, {1, 1}, DiagramKind::Shifted) == 10);
    CHECK(hook_length(P({1}), {1, 1}, DiagramKind::Ordinary) == 1);
    CHECK(hook_length(P({1}), {1, 1}, DiagramKind::Shifted) == 1);
    // Full rows of both hook fillings of the running example.
    auto ord = hook_lengths(p, DiagramKind::Ordinary);
    CHECK(ord[0] == std::vector<int>{9, 7, 5, 4, 2, 1});
    CHECK(ord[1] == std::vector<int>{6, 4, 2, 1});
    CHECK(ord[2] == std::vector<int>{3, 1});
    CHECK(ord[3] == std::vector<int>{1});
    auto sh = hook_lengths(p, DiagramKind::Shifted);
    CHECK(sh[0] == std::vector<int>{10, 8, 7, 6, 3, 1});
    CHECK(sh[1] == std::vector<int>{6, 5, 4, 1});
    CHECK(sh[2] == std::vector<int>{3, 2});
    CHECK(sh[3] == std::vector<int>{1});
    CHECK_THROWS_AS(hook_length(p, {2, 1}, DiagramKind::Shifted), Error);
}

TEST_CASE("shift-symmetric partition")
{
    CHECK(shift_symmetric(StrictPartition(std::vector<int>{6, 4, 2, 1})) == P({7, 6, 5, 5, 2, 1}));
    CHECK(shift_symmetric(StrictPartition(std::vector<int>{1})) == P({2}));
    CHECK(shift_symmetric(StrictPartition()) == Partition());
    for (int n = 2; n <= 8; ++n)
        CHECK(shift_symmetric(StrictPartition::staircase(n)) == Partition::rectangle(n - 1, n));
    for (int k = 0; k <= 20; ++k) {
        for (const auto& p : strict_partitions_of(k)) {
            StrictPartition sp(p);
            auto big = shift_symmetric(sp);
            REQUIRE(big.size() == 2 * p.size());
            std::set<Cell> expected;
            for (auto c : cells(p, DiagramKind::Shifted)) {
                expected.insert({c.row, c.col + 1});
                expected.insert({c.col, c.row});
            }
            auto got = cells(big, DiagramKind::Ordinary);
            REQUIRE(std::set<Cell>(got.begin(), got.end()) == expected);
        }
    }
}

TEST_CASE("complements")
{
    CHECK(complement_in_staircase(7, StrictPartition(std::vector<int>{6, 4, 2, 1})).partition() == P({5, 3}));
    CHECK(complement_in_box(6, 7, P({7, 6, 5, 5, 2, 1})) == P({6, 5, 2, 2, 1}));
    CHECK(complement_in_staircase(5, StrictPartition::staircase(5)).empty());
    CHECK(complement_in_box(2, 3, Partition()) == P({3, 3}));
    try {
        complement_in_staircase(4, StrictPartition(std::vector<int>{4}));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotContained);
    }
    CHECK_THROWS_AS(complement_in_box(2, 2, P({3})), Error);

    for (int n = 1; n <= 8; ++n) {
        for (const auto& lam : strict_partitions_in_staircase(n)) {
            auto comp = complement_in_staircase(n, lam);
            REQUIRE(comp.size() + lam.size() == n * (n - 1) / 2);
            REQUIRE(complement_in_staircase(n, comp) == lam);
            REQUIRE(shift_symmetric(comp) == complement_in_box(n - 1, n, shift_symmetric(lam)));
        }
    }
    for (int rows = 1; rows <= 5; ++rows)
        for (int cols = 1; cols <= 6; ++cols)
            for (const auto& p : partitions_in_box(rows, cols))
                REQUIRE(complement_in_box(rows, cols, complement_in_box(rows, cols, p)) == p);
}

TEST_CASE("corners and addable cells")
{
    auto p = P({6, 4, 2, 1});
    CHECK(removable_corners(p, DiagramKind::Ordinary) == std::vector<Cell>{{1, 6}, {2, 4}, {3, 2}, {4, 1}});
    CHECK(removable_corners(p, DiagramKind::Shifted) == std::vector<Cell>{{1, 6}, {2, 5}, {4, 4}});
    CHECK(addable_cells(P({2, 1}), DiagramKind::Shifted) == std::vector<Cell>{{1, 3}});
    CHECK(addable_cells(P({2, 1}), DiagramKind::Ordinary) == std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(addable_cells(Partition(), DiagramKind::Shifted) == std::vector<Cell>{{1, 1}});
    for (int k = 0; k <= 10; ++k) {
        for (const auto& q : strict_partitions_of(k)) {
            for (auto c : removable_corners(q, DiagramKind::Shifted)) {
                auto smaller = remove_from_row(q, c.row);
                REQUIRE(smaller.is_strict());
                auto add = addable_cells(smaller, DiagramKind::Shifted);
                REQUIRE(std::find(add.begin(), add.end(), c) != add.end());
            }
        }
    }
}

TEST_CASE("generators")
{
    CHECK(partitions_of(5).size() == 7);
    CHECK(strict_partitions_of(10).size() == 10);
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(strict_partitions_in_staircase(5).size() == 16);
}
