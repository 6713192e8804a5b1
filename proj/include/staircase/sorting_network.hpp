#ifndef STAIRCASE_SORTING_NETWORK_HPP
#define STAIRCASE_SORTING_NETWORK_HPP

#include <string>
#include <string_view>
#include <vector>

#include "staircase/partition.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

/// Letters in 1..n-1; letter i is the adjacent transposition of positions i
/// and i+1.
class ReducedWord {
public:
    ReducedWord() = default;
    ReducedWord(int n, std::vector<int> letters);

    /// "1,2,1,3,2,1", or "121321" when there is no separator. Without n, n is
    /// one more than the largest letter.
    static ReducedWord parse(std::string_view text, int n = 0);

    int n() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    /// 1-based.
    int letter(int k) const { return letters_[static_cast<std::size_t>(k - 1)]; }

    std::string to_string() const;

    auto operator<=>(const ReducedWord&) const = default;

private:
    int n_ = 2;
    std::vector<int> letters_;
};

/// One-line notation, values 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(v_.size()); }
    /// sigma(i), 1-based.
    int operator()(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return v_; }
    Permutation inverse() const;
    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> v_;
};

/// sigma_k: the identity with positions w_m, w_m + 1 swapped for m = 1..k.
Permutation apply_prefix(const ReducedWord& w, int k);

/// Stack scans, linear time.
bool contains_132(const Permutation& p);
bool contains_312(const Permutation& p);

/// Each letter adds an inversion and the word ends at the reverse permutation.
bool is_sorting_network(const ReducedWord& w);
bool is_132_network(const ReducedWord& w);
/// Same with 312 in place of 132.
bool is_312_network(const ReducedWord& w);

struct RecordingPair {
    Tableau unshifted;  // label m in the lowest free cell of column w_m
    Tableau shifted;    // row i moved right by i-1
};

/// Works on prefixes too. Throws NotA132Network at the first placement that
/// breaks standardness of either tableau or leaves the staircase.
RecordingPair eg_forward(const ReducedWord& w);

/// w_m is the unshifted column of the cell holding m. Throws WrongShape
/// unless t is a shifted tableau of staircase shape.
ReducedWord eg_inverse(const Tableau& t);

/// Reversed word; throws NotA132Network if w is not one.
ReducedWord reverse_network(const ReducedWord& w);

/// Shifted staircase tableau reflected in the anti-diagonal, (i,j) -> (n-j, n-i),
/// with labels k -> N+1-k.
Tableau flip_antidiagonal(const Tableau& t);

/// Cells (row i, column j) of the permutation matrix with ones at
/// (sigma(c), c) that are not weakly south-east of any one.
struct RotheDiagram {
    std::vector<Cell> cells;
    Partition shape() const;
};

RotheDiagram rothe_diagram(const Permutation& p);

/// Position of value i after each prefix, k = 0..N.
std::vector<int> trajectory(const ReducedWord& w, int i);

/// The same trajectory read off the shifted recording tableau: the position
/// of m stays m until the first of its events, where the unshifted cell
/// (i, m-i) moves it to m-i and the cell (m, j) moves it to j+1.
std::vector<int> trajectory_from_tableau(const Tableau& t, int m);

/// Letter of the step at which values i < j are exchanged.
int swap_letter(const ReducedWord& w, int i, int j);

/// Every reduced word of the reverse permutation; n <= 6.
std::vector<ReducedWord> all_sorting_networks(int n);

}  // namespace staircase

#endif  // STAIRCASE_SORTING_NETWORK_HPP
