#ifndef STAIRCASE_ENUMERATION_HPP
#define STAIRCASE_ENUMERATION_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "staircase/partition.hpp"
#include "staircase/tableau.hpp"

namespace staircase {

using BigCount = mpz_class;
using BigRatio = mpq_class;

BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned k);

/// Number of standard fillings by the hook-length formula. Throws
/// InternalMismatch if the hook product does not divide |p|!.
BigCount count_tableaux(const Partition& p, DiagramKind kind);

/// count_tableaux with a per-thread memo keyed by shape. Intended for the
/// many small shapes touched by the sum identities and the sampler.
const BigCount& count_tableaux_cached(const Partition& p, DiagramKind kind);

/// Every standard filling, generated by placing the largest label in each
/// removable corner in turn. Deterministic order.
void for_each_tableau(const Partition& p, DiagramKind kind, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> all_tableaux(const Partition& p, DiagramKind kind);

enum class Identity {
    ShiftSymmetricCount,
    HookProduct,
    PrefixProbability,
    PrefixLevelSum,
    AddCellRatio,
    FirstRowInequality,
    TrivialCellSum,
    DominoSum,
    TrominoSum,
    ColumnAdjacencyMean,
    RowAdjacencyMean,
    WordAdjacencyMean,
};

std::string_view to_string(Identity id);

/// One checked identity. For FirstRowInequality `holds` means lhs < rhs;
/// for every other identity it means lhs == rhs.
struct IdentityReport {
    Identity identity;
    std::string params;
    BigRatio lhs;
    BigRatio rhs;
    bool holds = false;
};

IdentityReport make_equality(Identity id, std::string params, BigRatio lhs, BigRatio rhs);

/// f_L == (g^p)^2 * C(2|p|, |p|) / 2^len(p), L the shift-symmetric partition.
IdentityReport verify_fL(const StrictPartition& p);

/// Hook product of L == 2^len(p) * (shifted hook product of p)^2.
IdentityReport verify_hook_product(const StrictPartition& p);

/// Probability that a uniform shifted staircase tableau of order n has
/// labels 1..|p| exactly on the shifted diagram of p. Computed from the
/// shifted counts and, independently, from ordinary counts of the
/// shift-symmetric shapes; the squares of the two are compared exactly and
/// InternalMismatch is thrown on disagreement.
BigRatio prefix_probability(int n, const StrictPartition& p);
IdentityReport verify_prefix_probability(int n, const StrictPartition& p);

/// Sum of prefix_probability over strict p of size k inside the staircase == 1.
IdentityReport verify_prefix_level_sum(int n, int k);

/// Ratio identity for adding a cell to the first row of p inside (cols^rows).
IdentityReport verify_amusing(int rows, int cols, const Partition& p);

/// E[I_k]^2 < E[(2N - J^2) / (k (N - k + 1))] over all shifted staircase
/// tableaux of order n, where I_k says whether k is in the first row and J
/// counts first-row labels <= k - 1 (the first k - 1 labels form the shape
/// the bound is averaged over). n <= 7.
IdentityReport verify_expected_inequality(int n, int k);
/// All k in 1..N-1 with a single enumeration.
std::vector<IdentityReport> verify_expected_inequalities(int n);
/// Same comparison with J counting labels <= k. This version is false at
/// k = 2 for every n >= 3 (there I_2 = 1 and J = 2); kept so the
/// counterexamples stay reproducible.
std::vector<IdentityReport> first_row_inequality_literal(int n);

enum class SumPattern { TrivialCell, Domino, Tromino };

std::string_view to_string(SumPattern pattern);

/// Sum over strict mu inside the staircase and nu = mu plus the pattern
/// anchored at some cell u outside mu, of g^mu * g^(staircase minus nu).
/// Compared against C(n,2), n-2 and 1 times g^staircase respectively.
/// 3 <= n <= 9.
IdentityReport verify_sum_identity(int n, SumPattern pattern);

/// The pattern cells anchored at u, for callers that want the raw sum.
std::vector<Cell> pattern_cells(SumPattern pattern, Cell u);
BigCount pattern_sum(int n, SumPattern pattern);

std::string format_ratio(const BigRatio& r);

}  // namespace staircase

#endif  // STAIRCASE_ENUMERATION_HPP
