#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staudt/projective.hpp"

namespace staudt {

/// Index (I, J) of one bracket equation: J is a (d+4)-subset of [n], I a
/// 6-subset of J, and the complement J \ I has d-2 elements.  All 1-based
/// and sorted.
struct PsiIndex
{
    int d = 0;
    int n = 0;
    std::vector<int> J;
    std::vector<int> I;
    std::vector<int> complement;

    /// Validates the sizes, ordering and containment; throws Error otherwise.
    static PsiIndex make(int d, int n, std::vector<int> J, std::vector<int> I);

    /// Column orders of the four brackets of the first and second monomial,
    /// e.g. (i4 i5 i6 j1 ... j_{d-2}) first.
    std::array<std::vector<int>, 4> first_monomial() const;
    std::array<std::vector<int>, 4> second_monomial() const;

    friend auto operator<=>(const PsiIndex& lhs, const PsiIndex& rhs)
    {
        if (auto c = lhs.J <=> rhs.J; c != 0)
            return c;
        return lhs.I <=> rhs.I;
    }
    friend bool operator==(const PsiIndex&, const PsiIndex&) = default;
};

/// Positions (1-based, into I) of the triples in each monomial.
inline constexpr std::array<std::array<int, 3>, 4> kFirstMonomialTriples{{{4, 5, 6}, {2, 3, 6}, {1, 3, 5}, {1, 2, 4}}};
inline constexpr std::array<std::array<int, 3>, 4> kSecondMonomialTriples{{{3, 5, 6}, {2, 4, 6}, {1, 4, 5}, {1, 2, 3}}};

/// C(n, d+4) * C(d+4, 6).  Throws unless n >= d+4 and d >= 2.
std::uint64_t psi_index_count(int d, int n);

/// All indices, lexicographic in J then I.
std::vector<PsiIndex> enumerate_psi_indices(int d, int n);

/// The index at position `rank` of the enumeration order.
PsiIndex psi_index_at(int d, int n, std::uint64_t rank);

/// `count` distinct indices drawn uniformly with the given seed, returned in
/// enumeration order.  Returns all indices when count exceeds the total.
std::vector<PsiIndex> sample_psi_indices(int d, int n, std::uint64_t count, std::uint64_t seed);

/// "|4567||2367||1357||1247| - |3567||2467||1457||1237|".  Indices are
/// separated by commas when n > 9.
std::string psi_display(const PsiIndex& idx);

struct PsiReport
{
    PsiIndex index;
    Scalar m1;
    Scalar m2;
    Scalar value;
};

PsiReport psi_eval(const Configuration& config, const PsiIndex& idx);
PsiReport psi_eval(const BracketTable& brackets, const PsiIndex& idx);

/// Sorted masks of every bracket the given equations touch.
std::vector<std::uint64_t> bracket_masks(std::span<const PsiIndex> indices);

struct WdnOptions
{
    /// Evaluate only this many seeded, uniformly sampled equations.
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    ParallelFor parallel = serial_for;
};

struct Membership
{
    bool member = true;
    std::vector<PsiReport> reports;
};

/// Evaluates the equations (all, or a sample) and reports each one.
Membership wdn_membership(const Configuration& config, const WdnOptions& options = {});

/// Same, reusing a bracket table that covers every needed subset.
Membership wdn_membership(const BracketTable& brackets, std::span<const PsiIndex> indices,
                          const ParallelFor& parallel = serial_for);

/// General linear position plus membership: for n >= d+4 this decides
/// whether the points lie on a rational normal curve.
bool lies_on_rnc(const Configuration& config, const WdnOptions& options = {});

} // namespace staudt
