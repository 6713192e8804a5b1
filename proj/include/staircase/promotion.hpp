#ifndef STAIRCASE_PROMOTION_HPP
#define STAIRCASE_PROMOTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "staircase/enumeration.hpp"
#include "staircase/sorting_network.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

enum class Orientation { Horizontal, Vertical };

/// Label k at `cell` and k+1 directly east (horizontal) or south (vertical).
/// Columns of shifted tableaux are true diagram columns.
struct Adjacency {
    Cell cell;
    Orientation orientation;
    int label;

    int column() const { return cell.col; }
    int row() const { return cell.row; }
    bool operator==(const Adjacency&) const = default;
};

/// Index k with |w_{k+1} - w_k| = 1; rising means w_{k+1} = w_k + 1.
struct WordAdjacency {
    int index;
    bool rising;
    bool operator==(const WordAdjacency&) const = default;
};

/// Swaps labels k and k+1 unless they are adjacent. 1 <= k < size.
Tableau tau(const Tableau& t, int k);

/// tau_{size-1} o ... o tau_k, by sliding along the promotion path.
/// k = size is the identity, k = 1 is ordinary promotion.
Tableau partial_promotion(const Tableau& t, int k);
/// The same map computed as the composition of the tau_i.
Tableau partial_promotion_by_tau(const Tableau& t, int k);

Tableau inverse_partial_promotion(const Tableau& t, int k);

/// Where inverse_partial_promotion(t, k) puts label k.
Cell inverse_promotion_end(const Tableau& t, int k);

/// Row-major order of the cell holding the smaller label.
std::vector<Adjacency> adjacencies(const Tableau& t);

/// For t with its largest label in column c+1 or further right: the first
/// k, scanning down from size-1, whose inverse path ends in column c, and the
/// horizontal adjacency (inverse_partial_promotion(t, k), cell of k).
/// Throws MaxEntryTooFarLeft.
std::pair<Tableau, Cell> adjacency_bijection_phi(const Tableau& t, int c);
/// partial_promotion(s, s(u)). Throws OutOfRange unless (s, u) is a
/// horizontal adjacency.
Tableau adjacency_bijection_psi(const Tableau& s, Cell u);

std::vector<WordAdjacency> word_adjacencies(const ReducedWord& w);

/// Adjacency totals over every shifted staircase tableau of order n (n <= 7).
struct AdjacencyCensus {
    int n = 0;
    BigCount tableaux;
    std::vector<BigCount> horizontal_by_column;  // index c-1
    std::vector<BigCount> vertical_by_row;       // index r-1
    BigCount word_total;                         // adjacencies of the matching networks

    BigRatio column_mean(int c) const;
    BigRatio row_mean(int r) const;
    BigRatio word_mean() const;

    /// Lines "kind\tindex\ttotal\tcount\tmean" with kind h, v or w and the mean
    /// written num/den.
    std::string to_tsv() const;
};

AdjacencyCensus expected_adjacency_census(int n);

/// Column and row means equal 1 for c, r < n-1; word mean equals 2(n-2).
std::vector<IdentityReport> verify_adjacency_census(const AdjacencyCensus& census);

}  // namespace staircase

#endif  // STAIRCASE_PROMOTION_HPP
