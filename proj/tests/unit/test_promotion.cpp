#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "staircase/enumeration.hpp"
#include "staircase/error.hpp"
#include "staircase/promotion.hpp"
#include "staircase/sampler.hpp"

using namespace staircase;

namespace {

Tableau shifted(std::vector<int> shape, std::vector<std::vector<int>> rows)
{
    return Tableau(Partition(std::move(shape)), DiagramKind::Shifted, std::move(rows));
}

const Tableau& small_example()
{
    static const Tableau t = shifted({3, 2, 1}, {{1, 2, 3}, {4, 5}, {6}});
    return t;
}

const Tableau& order_five_example()
{
    static const Tableau t = shifted({4, 3, 2, 1}, {{1, 2, 4, 5}, {3, 6, 7}, {8, 9}, {10}});
    return t;
}

std::map<std::pair<int, int>, int> as_map(const Tableau& t)
{
    std::map<std::pair<int, int>, int> out;
    for (int k = 1; k <= t.size(); ++k) {
        Cell u = t.cell_of(k);
        out[{u.row, u.col}] = k;
    }
    return out;
}

// Every tableau of every shape of the given kind with size in [1, max_size].
std::vector<Tableau> every_tableau(DiagramKind kind, int max_size)
{
    std::vector<Tableau> out;
    for (int s = 1; s <= max_size; ++s) {
        auto shapes = kind == DiagramKind::Shifted ? strict_partitions_of(s) : partitions_of(s);
        for (const auto& p : shapes)
            for (auto& t : all_tableaux(p, kind)) out.push_back(std::move(t));
    }
    return out;
}

int max_column(const Tableau& t)
{
    int c = 0;
    for (int k = 1; k <= t.size(); ++k) c = std::max(c, t.cell_of(k).col);
    return c;
}

}  // namespace

TEST_CASE("tau fixes adjacent pairs and swaps the rest")
{
    CHECK(tau(small_example(), 4) == small_example());
    CHECK(tau(small_example(), 3).rows() == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}, {6}});
    CHECK_THROWS_AS(tau(small_example(), 6), Error);
    CHECK_THROWS_AS(tau(small_example(), 0), Error);
    for (auto kind : {DiagramKind::Ordinary, DiagramKind::Shifted})
        for (const auto& t : every_tableau(kind, 8))
            for (int k = 1; k < t.size(); ++k) CHECK(tau(tau(t, k), k) == t);
}

TEST_CASE("partial promotion of the order five example")
{
    auto promoted = partial_promotion(order_five_example(), 2);
    CHECK(promoted.rows() == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5, 6, 8}, {7, 9}, {10}});
    CHECK(partial_promotion_by_tau(order_five_example(), 2) == promoted);
    CHECK(inverse_partial_promotion(promoted, 2) == order_five_example());
    CHECK(partial_promotion(order_five_example(), 10) == order_five_example());
    CHECK(inverse_partial_promotion(order_five_example(), 10) == order_five_example());
    CHECK_THROWS_AS(partial_promotion(order_five_example(), 11), Error);
    CHECK_THROWS_AS(inverse_partial_promotion(order_five_example(), 0), Error);
}

TEST_CASE("slides, tau products and inverses agree up to size 10")
{
    for (auto kind : {DiagramKind::Ordinary, DiagramKind::Shifted})
        for (const auto& t : every_tableau(kind, 10))
            for (int k = 1; k <= t.size(); ++k) {
                auto p = partial_promotion(t, k);
                REQUIRE(p == partial_promotion_by_tau(t, k));
                REQUIRE(inverse_partial_promotion(p, k) == t);
                REQUIRE(partial_promotion(inverse_partial_promotion(t, k), k) == t);
            }
}

TEST_CASE("k = 1 is promotion")
{
    for (auto kind : {DiagramKind::Ordinary, DiagramKind::Shifted})
        for (const auto& t : every_tableau(kind, 9)) CHECK(as_map(partial_promotion(t, 1)) == oracle::promote(as_map(t)));

    // Orbit lengths under repeated promotion, library against oracle.
    for (int n = 3; n <= 5; ++n) {
        std::multiset<int> ours, theirs;
        std::set<Tableau> seen;
        for (const auto& t : all_tableaux(Partition::staircase(n), DiagramKind::Shifted)) {
            if (seen.count(t)) continue;
            int len = 0;
            Tableau cur = t;
            do {
                seen.insert(cur);
                cur = partial_promotion(cur, 1);
                ++len;
            } while (!(cur == t));
            ours.insert(len);
            int olen = 0;
            auto m = as_map(t), cur_map = m;
            do {
                cur_map = oracle::promote(cur_map);
                ++olen;
            } while (cur_map != m);
            theirs.insert(olen);
        }
        CHECK(ours == theirs);
    }
}

TEST_CASE("adjacency scans")
{
    auto found = adjacencies(small_example());
    std::vector<Adjacency> expected{{{1, 1}, Orientation::Horizontal, 1},
                                    {{1, 2}, Orientation::Horizontal, 2},
                                    {{2, 2}, Orientation::Horizontal, 4},
                                    {{2, 3}, Orientation::Vertical, 5}};
    CHECK(found == expected);

    int horizontal = 0, vertical = 0;
    std::set<std::pair<int, int>> h_labels, v_labels;
    for (const auto& a : adjacencies(order_five_example())) {
        if (a.orientation == Orientation::Horizontal) {
            ++horizontal;
            h_labels.insert({a.label, a.label + 1});
        } else {
            ++vertical;
            v_labels.insert({a.label, a.label + 1});
        }
    }
    CHECK(horizontal == 4);
    CHECK(vertical == 2);
    CHECK(h_labels == std::set<std::pair<int, int>>{{1, 2}, {4, 5}, {6, 7}, {8, 9}});
    CHECK(v_labels == std::set<std::pair<int, int>>{{2, 3}, {9, 10}});
    CHECK(adjacencies(Tableau(Partition({1}), DiagramKind::Shifted, {{1}})).empty());
}

TEST_CASE("word adjacencies")
{
    auto w = ReducedWord(5, {1, 2, 1, 3, 4, 2, 3, 1, 2, 1});
    std::vector<int> idx;
    for (auto a : word_adjacencies(w)) idx.push_back(a.index);
    CHECK(idx == std::vector<int>{1, 2, 4, 6, 8, 9});
    CHECK(word_adjacencies(ReducedWord::parse("12")).size() == 1);
    CHECK(word_adjacencies(ReducedWord::parse("12"))[0].rising);

    auto check = [](const Tableau& t) {
        auto net = eg_inverse(t);
        std::set<std::pair<int, bool>> from_word, from_tableau;
        for (auto a : word_adjacencies(net)) from_word.insert({a.index, a.rising});
        for (auto a : adjacencies(t)) from_tableau.insert({a.label, a.orientation == Orientation::Horizontal});
        CHECK(from_word == from_tableau);
    };
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : all_tableaux(Partition::staircase(n), DiagramKind::Shifted)) check(t);
    for (int n : {10, 25, 50}) {
        for (int s = 0; s < 20; ++s) {
            RngState rng(derive_seed(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)));
            check(sample_tableau(Partition::staircase(n), DiagramKind::Shifted, rng));
        }
    }
}

TEST_CASE("phi and psi are inverse bijections up to size 10")
{
    for (auto kind : {DiagramKind::Ordinary, DiagramKind::Shifted}) {
        for (int s = 1; s <= 10; ++s) {
            auto shapes = kind == DiagramKind::Shifted ? strict_partitions_of(s) : partitions_of(s);
            for (const auto& p : shapes) {
                auto tabs = all_tableaux(p, kind);
                int width = 0;
                for (const auto& t : tabs) width = std::max(width, max_column(t));
                for (int c = 1; c < width; ++c) {
                    std::set<std::pair<Tableau, std::pair<int, int>>> images, adjacent;
                    for (const auto& t : tabs) {
                        for (const auto& a : adjacencies(t))
                            if (a.orientation == Orientation::Horizontal && a.column() == c)
                                adjacent.insert({t, {a.cell.row, a.cell.col}});
                        if (t.cell_of(t.size()).col < c + 1) {
                            CHECK_THROWS_AS(adjacency_bijection_phi(t, c), Error);
                            continue;
                        }
                        auto [s_tab, u] = adjacency_bijection_phi(t, c);
                        REQUIRE(u.col == c);
                        REQUIRE(s_tab.get(u.east(), 0) == s_tab.at(u) + 1);
                        REQUIRE(adjacency_bijection_psi(s_tab, u) == t);
                        images.insert({s_tab, {u.row, u.col}});
                    }
                    // phi is injective (psi o phi = id) and onto the adjacencies.
                    REQUIRE(images == adjacent);
                    for (const auto& [s_tab, cell] : adjacent) {
                        Cell u{cell.first, cell.second};
                        auto back = adjacency_bijection_phi(adjacency_bijection_psi(s_tab, u), c);
                        REQUIRE(back.first == s_tab);
                        REQUIRE(back.second == u);
                    }
                }
            }
        }
    }
}

TEST_CASE("adjacency census by brute force")
{
    // Oracle fillings: horizontal adjacencies in column c against fillings
    // with the largest label right of column c.
    for (bool shifted_kind : {false, true}) {
        for (int s = 1; s <= 9; ++s) {
            auto shapes = shifted_kind ? strict_partitions_of(s) : partitions_of(s);
            for (const auto& p : shapes) {
                auto cells = oracle::diagram(p.vec(), shifted_kind);
                std::map<std::pair<int, int>, int> cur;
                std::vector<std::map<std::pair<int, int>, int>> fills;
                oracle::all_fillings(cells, cur, 1, fills);
                int width = 0;
                for (auto c : cells) width = std::max(width, c.second);
                for (int c = 1; c < width; ++c) {
                    long adj = 0, right = 0;
                    for (auto& f : fills) {
                        for (auto& [cell, label] : f) {
                            auto e = f.find({cell.first, cell.second + 1});
                            if (cell.second == c && e != f.end() && e->second == label + 1) ++adj;
                            if (label == s && cell.second >= c + 1) ++right;
                        }
                    }
                    CHECK(adj == right);
                }
            }
        }
    }
}

TEST_CASE("shifted rectangles have one adjacency per tableau in each column")
{
    for (auto parts : {std::vector<int>{3, 2, 1}, std::vector<int>{4, 3, 2, 1}, std::vector<int>{5, 4, 3},
                       std::vector<int>{4, 3}}) {
        Partition p(parts);
        auto tabs = all_tableaux(p, DiagramKind::Shifted);
        for (int c = 1; c <= p.part(1) - 1; ++c) {
            long count = 0;
            for (const auto& t : tabs)
                for (const auto& a : adjacencies(t))
                    if (a.orientation == Orientation::Horizontal && a.column() == c) ++count;
            CHECK(count == static_cast<long>(tabs.size()));
        }
    }
    Partition box = Partition::rectangle(3, 4);
    auto tabs = all_tableaux(box, DiagramKind::Ordinary);
    for (int c = 1; c <= 3; ++c) {
        long count = 0;
        for (const auto& t : tabs)
            for (const auto& a : adjacencies(t))
                if (a.orientation == Orientation::Horizontal && a.column() == c) ++count;
        CHECK(count == static_cast<long>(tabs.size()));
    }
}

TEST_CASE("strict shapes average one adjacency in each column left of their length")
{
    for (int s = 1; s <= 12; ++s)
        for (const auto& p : strict_partitions_of(s)) {
            auto tabs = all_tableaux(p, DiagramKind::Shifted);
            for (int c = 1; c < p.length(); ++c) {
                long count = 0;
                for (const auto& t : tabs)
                    for (const auto& a : adjacencies(t))
                        if (a.orientation == Orientation::Horizontal && a.column() == c) ++count;
                CHECK(count == static_cast<long>(tabs.size()));
            }
        }
}

TEST_CASE("staircase census")
{
    auto four = expected_adjacency_census(4);
    CHECK(four.tableaux == 2);
    CHECK(four.horizontal_by_column[0] == 2);
    CHECK(four.horizontal_by_column[1] == 2);
    CHECK(four.word_total == 8);
    CHECK(four.word_mean() == 4);
    CHECK(four.to_tsv().rfind("kind\tindex\ttotal\tcount\tmean\n", 0) == 0);
    CHECK(four.to_tsv().find("w\t0\t8\t2\t4/1\n") != std::string::npos);

    for (int n = 3; n <= 7; ++n) {
        auto census = expected_adjacency_census(n);
        CHECK(census.tableaux == count_tableaux(Partition::staircase(n), DiagramKind::Shifted));
        for (int c = 1; c < n - 1; ++c) CHECK(census.column_mean(c) == 1);
        for (int r = 1; r < n - 1; ++r) CHECK(census.row_mean(r) == 1);
        CHECK(census.word_mean() == 2 * (n - 2));
        for (const auto& report : verify_adjacency_census(census)) CHECK(report.holds);
    }
    CHECK_THROWS_AS(expected_adjacency_census(8), Error);
}
