#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "staudt/multipoly.hpp"
#include "staudt/wdn.hpp"

namespace staudt {

/// The two simplices: T1 = {1..d+1}, T2 = {d+2..2d+2}.
enum class Side { T1, T2 };

Side side_of(int d, int index);
std::vector<int> side_indices(int d, Side side);

/// A sorted (d+1)-subset K of [2d+2] split along the two sides.
struct SubsetSplit
{
    int d = 0;
    std::vector<int> K;
    std::vector<int> K1;
    std::vector<int> K2;

    /// Sorts K and validates |K| = d+1 within [2d+2].
    static SubsetSplit make(int d, std::vector<int> K);
};

/// |Q_i Q_j| = a_i b_j - a_j b_i in the ring with n index pairs.
MultiPoly two_bracket(int num_indices, int i, int j);

/// Symbolic coordinates (r_0..r_d) of R_omit: the intersection of the
/// osculating hyperplanes of `side` other than the one at `omit`.
std::vector<MultiPoly> sym_vertex(int d, int omit, Side side);

/// Determinant of a square matrix of polynomials given by columns.
MultiPoly sym_determinant(const std::vector<std::vector<MultiPoly>>& columns);

/// |R_{k_1} ... R_{k_{d+1}}| with the columns in the given order.
MultiPoly sym_bracket_columns(int d, std::span<const int> order);
/// The same with the sorted columns of K.
MultiPoly sym_bracket_R(int d, const SubsetSplit& split);

/// (-1)^(C(|K1|,2) + C(|K2|,2))
int bracket_sign(const SubsetSplit& split);

/// Sign and 2x2 bracket factors (pairs e < f) of the predicted factorization.
struct Factorization
{
    int sign = 1;
    std::vector<std::pair<int, int>> factors;
};
Factorization factorization(const SubsetSplit& split);

/// sign * prod_{K1 pairs} * prod_{K2 pairs} * prod_{(T1\K1) x (T2\K2)}, expanded.
MultiPoly factorization_rhs(int d, const SubsetSplit& split);

/// The bracket of simplex vertices equals its predicted factorization.
bool verify_factorization(int d, const SubsetSplit& split);

/// Memo of verified factorizations for one d, keyed by subset mask.  Build
/// it up front when many equations share brackets.
class FactorizationTable
{
public:
    /// Verifies every (d+1)-subset of [2d+2].
    static FactorizationTable all(int d, const ParallelFor& parallel = serial_for);
    /// Verifies only the given subsets.
    static FactorizationTable for_subsets(int d, std::span<const std::vector<int>> subsets,
                                          const ParallelFor& parallel = serial_for);

    int d() const { return d_; }
    /// nullopt when the subset has not been checked.
    std::optional<bool> verified(std::span<const int> sorted_subset) const;
    std::size_t size() const { return verified_.size(); }

private:
    int d_ = 0;
    std::map<std::uint64_t, bool> verified_;
};

/// Parity (0 or 1) of the adjacent transpositions sorting
/// (i_a, i_b, i_c, j_1, ..., j_{d-2}).  Throws on repeated indices.
int transposition_parity(const std::array<int, 3>& triple, std::span<const int> rest);

/// The two parity sums q(..)+q(..)+q(..)+q(..) mod 2, one per monomial.
std::pair<int, int> step2_parity_sums(const PsiIndex& idx);

/// Multiset of 2x2 factors (with multiplicity) of each monomial.
using FactorCounts = std::map<std::pair<int, int>, int>;
std::pair<FactorCounts, FactorCounts> step1_factor_counts(const PsiIndex& idx);

/// Checks the sign rule that applies to |I n T1|: all eight signs equal for
/// 0 or 6; four pairwise equalities for 1, 2, 4, 5; the closed forms and
/// A = B (mod 2) for 3.
struct SignCaseCheck
{
    int t1_count = 0;
    bool holds = false;
};
SignCaseCheck sign_case_check(const PsiIndex& idx);

/// The two sides of the |I n T1| = 3 sign comparison.
long parity_sum_A(int d, int p);
long parity_sum_B(int d, int p);

struct PsiIdentityResult
{
    bool ok = false;
    bool factorizations_ok = false;
    bool multiset_ok = false;
    bool sign_ok = false;
    /// Set when the full expansion ran.
    std::optional<bool> expansion_ok;
};

/// Whether the equation vanishes identically on the symbolic simplex
/// vertices (n = 2d+2).  Compares factor multisets and signs of the two
/// monomials; for d = 2, or when `full_expansion` is set, also expands both
/// monomials and checks the difference is zero.
PsiIdentityResult verify_psi_identity(int d, const PsiIndex& idx, bool full_expansion = false);
PsiIdentityResult verify_psi_identity(const FactorizationTable& table, const PsiIndex& idx,
                                      bool full_expansion = false);

} // namespace staudt
