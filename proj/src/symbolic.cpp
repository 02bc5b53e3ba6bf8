#include "staudt/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "staudt/combinatorics.hpp"

namespace staudt {

namespace {

long choose2(long l)
{
    return l * (l - 1) / 2;
}

int sign_of_exponent(long e)
{
    return (e % 2 == 0) ? 1 : -1;
}

void check_d(int d)
{
    if (d < 1 || 2 * d + 2 > static_cast<int>(kMaxVariables / 2))
        throw Error("symbolic computations support 1 <= d <= " + std::to_string(kMaxVariables / 4 - 1));
}

std::vector<int> sorted_copy(std::span<const int> v)
{
    std::vector<int> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Side side_of(int d, int index)
{
    if (index < 1 || index > 2 * d + 2)
        throw Error("index " + std::to_string(index) + " outside [2d+2]");
    return index <= d + 1 ? Side::T1 : Side::T2;
}

std::vector<int> side_indices(int d, Side side)
{
    return side == Side::T1 ? index_range(1, d + 1) : index_range(d + 2, 2 * d + 2);
}

SubsetSplit SubsetSplit::make(int d, std::vector<int> K)
{
    check_d(d);
    std::sort(K.begin(), K.end());
    if (K.size() != static_cast<std::size_t>(d + 1) || std::adjacent_find(K.begin(), K.end()) != K.end() ||
        K.front() < 1 || K.back() > 2 * d + 2)
        throw Error("K must be a (d+1)-subset of [2d+2]");
    SubsetSplit split;
    split.d = d;
    for (int k : K)
        (k <= d + 1 ? split.K1 : split.K2).push_back(k);
    split.K = std::move(K);
    return split;
}

MultiPoly two_bracket(int num_indices, int i, int j)
{
    return MultiPoly::a(num_indices, i) * MultiPoly::b(num_indices, j) -
           MultiPoly::a(num_indices, j) * MultiPoly::b(num_indices, i);
}

std::vector<MultiPoly> sym_vertex(int d, int omit, Side side)
{
    check_d(d);
    if (side_of(d, omit) != side)
        throw Error("omitted index " + std::to_string(omit) + " is not on the chosen side");
    const int n = 2 * d + 2;
    std::vector<int> S;
    for (int i : side_indices(d, side))
        if (i != omit)
            S.push_back(i);
    std::vector<MultiPoly> r;
    for (int k = 0; k <= d; ++k) {
        MultiPoly sum(n);
        for (const auto& I : subsets_of(S, static_cast<std::size_t>(d - k))) {
            MultiPoly term = MultiPoly::constant(n, 1);
            for (int s : S)
                term *= std::binary_search(I.begin(), I.end(), s) ? MultiPoly::a(n, s) : MultiPoly::b(n, s);
            sum += term;
        }
        r.push_back(std::move(sum));
    }
    return r;
}

MultiPoly sym_determinant(const std::vector<std::vector<MultiPoly>>& columns)
{
    const std::size_t size = columns.size();
    if (size == 0)
        throw DimensionMismatch("determinant of an empty matrix");
    for (const auto& c : columns)
        if (c.size() != size)
            throw DimensionMismatch("symbolic determinant needs a square matrix");
    const int n = columns.front().front().num_indices();
    // Laplace expansion along rows, memoized on the set of unused columns.
    std::unordered_map<std::uint32_t, MultiPoly> memo;
    std::function<MultiPoly(std::size_t, std::uint32_t)> minor = [&](std::size_t row, std::uint32_t cols) {
        if (row == size)
            return MultiPoly::constant(n, 1);
        if (auto it = memo.find(cols); it != memo.end())
            return it->second;
        MultiPoly sum(n);
        int position = 0;
        for (std::size_t c = 0; c < size; ++c) {
            if (!((cols >> c) & 1U))
                continue;
            const MultiPoly& entry = columns[c][row];
            if (!entry.is_zero()) {
                MultiPoly term = entry * minor(row + 1, cols & ~(1U << c));
                if (position % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            ++position;
        }
        memo.emplace(cols, sum);
        return sum;
    };
    return minor(0, (1U << size) - 1U);
}

MultiPoly sym_bracket_columns(int d, std::span<const int> order)
{
    check_d(d);
    if (order.size() != static_cast<std::size_t>(d + 1))
        throw DimensionMismatch("bracket needs d+1 columns");
    std::vector<std::vector<MultiPoly>> cols;
    for (int k : order)
        cols.push_back(sym_vertex(d, k, side_of(d, k)));
    return sym_determinant(cols);
}

MultiPoly sym_bracket_R(int d, const SubsetSplit& split)
{
    return sym_bracket_columns(d, split.K);
}

int bracket_sign(const SubsetSplit& split)
{
    return sign_of_exponent(choose2(static_cast<long>(split.K1.size())) +
                            choose2(static_cast<long>(split.K2.size())));
}

Factorization factorization(const SubsetSplit& split)
{
    const int d = split.d;
    Factorization out;
    out.sign = bracket_sign(split);
    for (const auto* part : {&split.K1, &split.K2})
        for (std::size_t i = 0; i < part->size(); ++i)
            for (std::size_t j = i + 1; j < part->size(); ++j)
                out.factors.emplace_back((*part)[i], (*part)[j]);
    for (int i : side_indices(d, Side::T1)) {
        if (std::binary_search(split.K1.begin(), split.K1.end(), i))
            continue;
        for (int j : side_indices(d, Side::T2))
            if (!std::binary_search(split.K2.begin(), split.K2.end(), j))
                out.factors.emplace_back(i, j);
    }
    return out;
}

MultiPoly factorization_rhs(int d, const SubsetSplit& split)
{
    const int n = 2 * d + 2;
    const Factorization f = factorization(split);
    MultiPoly out = MultiPoly::constant(n, f.sign);
    for (const auto& [i, j] : f.factors)
        out *= two_bracket(n, i, j);
    return out;
}

bool verify_factorization(int d, const SubsetSplit& split)
{
    return (sym_bracket_R(d, split) - factorization_rhs(d, split)).is_zero();
}

FactorizationTable FactorizationTable::all(int d, const ParallelFor& parallel)
{
    check_d(d);
    const auto subsets = subsets_of(index_range(1, 2 * d + 2), static_cast<std::size_t>(d + 1));
    return for_subsets(d, subsets, parallel);
}

FactorizationTable FactorizationTable::for_subsets(int d, std::span<const std::vector<int>> subsets,
                                                   const ParallelFor& parallel)
{
    std::vector<SubsetSplit> splits;
    std::set<std::uint64_t> seen;
    for (const auto& K : subsets) {
        auto split = SubsetSplit::make(d, K);
        if (seen.insert(subset_mask(split.K)).second)
            splits.push_back(std::move(split));
    }
    std::vector<char> ok(splits.size(), 0);
    parallel(splits.size(), [&](std::size_t i) { ok[i] = verify_factorization(d, splits[i]) ? 1 : 0; });

    FactorizationTable table;
    table.d_ = d;
    for (std::size_t i = 0; i < splits.size(); ++i)
        table.verified_.emplace(subset_mask(splits[i].K), ok[i] != 0);
    return table;
}

std::optional<bool> FactorizationTable::verified(std::span<const int> sorted_subset) const
{
    auto it = verified_.find(subset_mask(sorted_subset));
    if (it == verified_.end())
        return std::nullopt;
    return it->second;
}

int transposition_parity(const std::array<int, 3>& triple, std::span<const int> rest)
{
    std::vector<int> seq(triple.begin(), triple.end());
    seq.insert(seq.end(), rest.begin(), rest.end());
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("transposition parity needs distinct indices");
    return inversion_parity(seq);
}

namespace {

std::array<int, 3> triple_of(const PsiIndex& idx, const std::array<int, 3>& positions)
{
    return {idx.I[static_cast<std::size_t>(positions[0] - 1)], idx.I[static_cast<std::size_t>(positions[1] - 1)],
            idx.I[static_cast<std::size_t>(positions[2] - 1)]};
}

void require_full_configuration(int d, const PsiIndex& idx)
{
    if (idx.d != d || idx.n != 2 * d + 2)
        throw Error("symbolic equation checks need an index with n = 2d+2");
}

int parity_sum(const PsiIndex& idx, const std::array<std::array<int, 3>, 4>& triples)
{
    int sum = 0;
    for (const auto& t : triples)
        sum += transposition_parity(triple_of(idx, t), idx.complement);
    return sum % 2;
}

SubsetSplit split_of(int d, std::span<const int> columns)
{
    return SubsetSplit::make(d, sorted_copy(columns));
}

} // namespace

std::pair<int, int> step2_parity_sums(const PsiIndex& idx)
{
    return {parity_sum(idx, kFirstMonomialTriples), parity_sum(idx, kSecondMonomialTriples)};
}

std::pair<FactorCounts, FactorCounts> step1_factor_counts(const PsiIndex& idx)
{
    require_full_configuration(idx.d, idx);
    auto count = [&](const std::array<std::vector<int>, 4>& brackets) {
        FactorCounts counts;
        for (const auto& cols : brackets)
            for (const auto& pair : factorization(split_of(idx.d, cols)).factors)
                ++counts[pair];
        return counts;
    };
    return {count(idx.first_monomial()), count(idx.second_monomial())};
}

long parity_sum_A(int d, int p)
{
    return choose2(p) + choose2(d + 1 - p) + 3 * (choose2(p + 2) + choose2(d - 1 - p));
}

long parity_sum_B(int d, int p)
{
    return 3 * (choose2(p + 1) + choose2(d - p)) + choose2(p + 3) + choose2(d - 2 - p);
}

SignCaseCheck sign_case_check(const PsiIndex& idx)
{
    const int d = idx.d;
    require_full_configuration(d, idx);
    auto s = [&](const std::array<int, 3>& positions) {
        std::vector<int> cols;
        cols.reserve(3 + idx.complement.size());
        for (int pos : positions)
            cols.push_back(idx.I[static_cast<std::size_t>(pos - 1)]);
        for (int j : idx.complement)
            cols.push_back(j);
        return bracket_sign(split_of(d, cols));
    };
    const int s456 = s({4, 5, 6}), s236 = s({2, 3, 6}), s135 = s({1, 3, 5}), s124 = s({1, 2, 4});
    const int s356 = s({3, 5, 6}), s246 = s({2, 4, 6}), s145 = s({1, 4, 5}), s123 = s({1, 2, 3});

    SignCaseCheck out;
    out.t1_count = static_cast<int>(std::count_if(idx.I.begin(), idx.I.end(), [d](int i) { return i <= d + 1; }));
    switch (out.t1_count) {
    case 0:
    case 6: {
        const std::array<int, 8> all{s456, s236, s135, s124, s356, s246, s145, s123};
        out.holds = std::all_of(all.begin(), all.end(), [&](int v) { return v == s456; });
        break;
    }
    case 1:
    case 2:
    case 4:
    case 5:
        out.holds = s456 == s356 && s236 == s246 && s135 == s145 && s124 == s123;
        break;
    case 3: {
        const int p = static_cast<int>(
            std::count_if(idx.complement.begin(), idx.complement.end(), [d](int j) { return j <= d + 1; }));
        const int first = sign_of_exponent(choose2(p) + choose2(d + 1 - p));
        const int middle1 = sign_of_exponent(choose2(p + 2) + choose2(d - 1 - p));
        const int middle2 = sign_of_exponent(choose2(p + 1) + choose2(d - p));
        const int last = sign_of_exponent(choose2(p + 3) + choose2(d - 2 - p));
        out.holds = s456 == first && s236 == middle1 && s135 == middle1 && s124 == middle1 && s356 == middle2 &&
                    s246 == middle2 && s145 == middle2 && s123 == last &&
                    (parity_sum_A(d, p) - parity_sum_B(d, p)) % 2 == 0;
        break;
    }
    default:
        break;
    }
    return out;
}

PsiIdentityResult verify_psi_identity(const FactorizationTable& table, const PsiIndex& idx, bool full_expansion)
{
    const int d = table.d();
    require_full_configuration(d, idx);
    PsiIdentityResult result;

    const auto m1 = idx.first_monomial();
    const auto m2 = idx.second_monomial();

    result.factorizations_ok = true;
    std::vector<std::pair<int, int>> factors1, factors2;
    int sign1 = 1, sign2 = 1;
    auto absorb = [&](const std::array<std::vector<int>, 4>& monomial, std::vector<std::pair<int, int>>& factors,
                      int& sign) {
        for (const auto& cols : monomial) {
            const auto split = split_of(d, cols);
            const auto verified = table.verified(split.K);
            if (!(verified ? *verified : verify_factorization(d, split)))
                result.factorizations_ok = false;
            const auto f = factorization(split);
            factors.insert(factors.end(), f.factors.begin(), f.factors.end());
            // Columns in equation order differ from sorted order by the
            // permutation parity.
            const int parity = inversion_parity(cols);
            sign *= f.sign * (parity == 0 ? 1 : -1);
        }
    };
    absorb(m1, factors1, sign1);
    absorb(m2, factors2, sign2);
    std::sort(factors1.begin(), factors1.end());
    std::sort(factors2.begin(), factors2.end());
    result.multiset_ok = factors1 == factors2;
    result.sign_ok = sign1 == sign2;
    result.ok = result.factorizations_ok && result.multiset_ok && result.sign_ok;

    if (full_expansion || d == 2) {
        auto expand = [&](const std::array<std::vector<int>, 4>& monomial) {
            MultiPoly product = MultiPoly::constant(2 * d + 2, 1);
            for (const auto& cols : monomial)
                product *= sym_bracket_columns(d, cols);
            return product;
        };
        result.expansion_ok = (expand(m1) - expand(m2)).is_zero();
        result.ok = result.ok && *result.expansion_ok;
    }
    return result;
}

PsiIdentityResult verify_psi_identity(int d, const PsiIndex& idx, bool full_expansion)
{
    require_full_configuration(d, idx);
    std::vector<std::vector<int>> subsets;
    for (const auto& cols : idx.first_monomial())
        subsets.push_back(sorted_copy(cols));
    for (const auto& cols : idx.second_monomial())
        subsets.push_back(sorted_copy(cols));
    return verify_psi_identity(FactorizationTable::for_subsets(d, subsets), idx, full_expansion);
}

} // namespace staudt
