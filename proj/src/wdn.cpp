#include "staudt/wdn.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "staudt/combinatorics.hpp"

namespace staudt {

namespace {

void check_shape(int d, int n)
{
    if (d < 2)
        throw Error("bracket equations need d >= 2");
    if (n < d + 4)
        throw Error("bracket equations need n >= d+4 (got d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
    if (n > 64)
        throw Error("at most 64 points are supported");
}

std::array<std::vector<int>, 4> monomial(const PsiIndex& idx, const std::array<std::array<int, 3>, 4>& triples)
{
    std::array<std::vector<int>, 4> out;
    for (std::size_t b = 0; b < 4; ++b) {
        for (int pos : triples[b])
            out[b].push_back(idx.I[static_cast<std::size_t>(pos - 1)]);
        out[b].insert(out[b].end(), idx.complement.begin(), idx.complement.end());
    }
    return out;
}

PsiIndex from_positions(int d, int n, std::vector<int> J, const std::vector<int>& positions)
{
    PsiIndex idx;
    idx.d = d;
    idx.n = n;
    std::vector<bool> in_I(J.size(), false);
    for (int p : positions) {
        idx.I.push_back(J[static_cast<std::size_t>(p - 1)]);
        in_I[static_cast<std::size_t>(p - 1)] = true;
    }
    for (std::size_t k = 0; k < J.size(); ++k)
        if (!in_I[k])
            idx.complement.push_back(J[k]);
    idx.J = std::move(J);
    return idx;
}

Scalar monomial_value(const BracketTable& brackets, const std::array<std::vector<int>, 4>& columns,
                      const FieldSpec& field)
{
    Scalar product = Scalar::one(field);
    for (const auto& cols : columns) {
        Scalar b = brackets.ordered(cols);
        if (b.is_zero())
            return b;
        product *= b;
    }
    return product;
}

} // namespace

PsiIndex PsiIndex::make(int d, int n, std::vector<int> J, std::vector<int> I)
{
    check_shape(d, n);
    if (J.size() != static_cast<std::size_t>(d + 4) || I.size() != 6)
        throw Error("index needs |J| = d+4 and |I| = 6");
    if (!std::is_sorted(J.begin(), J.end()) || std::adjacent_find(J.begin(), J.end()) != J.end() ||
        J.front() < 1 || J.back() > n)
        throw Error("J must be a sorted subset of [n]");
    if (!std::is_sorted(I.begin(), I.end()) || std::adjacent_find(I.begin(), I.end()) != I.end() ||
        !std::includes(J.begin(), J.end(), I.begin(), I.end()))
        throw Error("I must be a sorted subset of J");
    PsiIndex idx;
    idx.d = d;
    idx.n = n;
    std::set_difference(J.begin(), J.end(), I.begin(), I.end(), std::back_inserter(idx.complement));
    idx.J = std::move(J);
    idx.I = std::move(I);
    return idx;
}

std::array<std::vector<int>, 4> PsiIndex::first_monomial() const
{
    return monomial(*this, kFirstMonomialTriples);
}

std::array<std::vector<int>, 4> PsiIndex::second_monomial() const
{
    return monomial(*this, kSecondMonomialTriples);
}

std::uint64_t psi_index_count(int d, int n)
{
    check_shape(d, n);
    return binomial(n, d + 4) * binomial(d + 4, 6);
}

std::vector<PsiIndex> enumerate_psi_indices(int d, int n)
{
    check_shape(d, n);
    std::vector<PsiIndex> out;
    out.reserve(psi_index_count(d, n));
    const auto positions = subsets_of(index_range(1, d + 4), 6);
    for (auto& J : subsets_of(index_range(1, n), static_cast<std::size_t>(d + 4)))
        for (const auto& pos : positions)
            out.push_back(from_positions(d, n, J, pos));
    return out;
}

PsiIndex psi_index_at(int d, int n, std::uint64_t rank)
{
    if (rank >= psi_index_count(d, n))
        throw std::out_of_range("equation rank out of range");
    const std::uint64_t per_J = binomial(d + 4, 6);
    auto J = subset_unrank(rank / per_J, n, d + 4);
    return from_positions(d, n, std::move(J), subset_unrank(rank % per_J, d + 4, 6));
}

std::vector<PsiIndex> sample_psi_indices(int d, int n, std::uint64_t count, std::uint64_t seed)
{
    const std::uint64_t total = psi_index_count(d, n);
    if (count >= total)
        return enumerate_psi_indices(d, n);
    // Floyd's algorithm: `count` distinct ranks without materializing all.
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = total - count; j < total; ++j) {
        std::uniform_int_distribution<std::uint64_t> draw(0, j);
        const std::uint64_t t = draw(rng);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    std::vector<std::uint64_t> ranks(chosen.begin(), chosen.end());
    std::sort(ranks.begin(), ranks.end());
    std::vector<PsiIndex> out;
    out.reserve(ranks.size());
    for (auto r : ranks)
        out.push_back(psi_index_at(d, n, r));
    return out;
}

std::string psi_display(const PsiIndex& idx)
{
    const bool wide = idx.n > 9;
    auto render = [&](const std::array<std::vector<int>, 4>& brackets) {
        std::string out;
        for (const auto& cols : brackets) {
            out += "|";
            for (std::size_t k = 0; k < cols.size(); ++k) {
                if (wide && k > 0)
                    out += ",";
                out += std::to_string(cols[k]);
            }
            out += "|";
        }
        return out;
    };
    return render(idx.first_monomial()) + " - " + render(idx.second_monomial());
}

PsiReport psi_eval(const BracketTable& brackets, const PsiIndex& idx)
{
    Scalar m1 = monomial_value(brackets, idx.first_monomial(), brackets.field());
    Scalar m2 = monomial_value(brackets, idx.second_monomial(), brackets.field());
    Scalar value = m1 - m2;
    return PsiReport{idx, std::move(m1), std::move(m2), std::move(value)};
}

PsiReport psi_eval(const Configuration& config, const PsiIndex& idx)
{
    if (static_cast<std::size_t>(idx.n) != config.size() || idx.d != config.dim())
        throw DimensionMismatch("equation index (d=" + std::to_string(idx.d) + ", n=" + std::to_string(idx.n) +
                                ") does not match the configuration (d=" + std::to_string(config.dim()) +
                                ", n=" + std::to_string(config.size()) + ")");
    const std::vector<PsiIndex> one{idx};
    return psi_eval(BracketTable::for_masks(config, bracket_masks(one)), idx);
}

std::vector<std::uint64_t> bracket_masks(std::span<const PsiIndex> indices)
{
    std::vector<std::uint64_t> masks;
    masks.reserve(indices.size() * 8);
    for (const auto& idx : indices) {
        for (const auto& cols : idx.first_monomial())
            masks.push_back(subset_mask(cols));
        for (const auto& cols : idx.second_monomial())
            masks.push_back(subset_mask(cols));
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

Membership wdn_membership(const BracketTable& brackets, std::span<const PsiIndex> indices,
                          const ParallelFor& parallel)
{
    std::vector<std::optional<PsiReport>> slots(indices.size());
    parallel(indices.size(), [&](std::size_t k) { slots[k] = psi_eval(brackets, indices[k]); });
    Membership out;
    out.reports.reserve(indices.size());
    for (auto& slot : slots) {
        if (!slot->value.is_zero())
            out.member = false;
        out.reports.push_back(std::move(*slot));
    }
    return out;
}

namespace {

std::vector<PsiIndex> chosen_indices(const Configuration& config, const WdnOptions& options)
{
    const int d = config.dim();
    const int n = static_cast<int>(config.size());
    return options.sample ? sample_psi_indices(d, n, *options.sample, options.seed) : enumerate_psi_indices(d, n);
}

} // namespace

Membership wdn_membership(const Configuration& config, const WdnOptions& options)
{
    const auto indices = chosen_indices(config, options);
    const auto table = BracketTable::for_masks(config, bracket_masks(indices), options.parallel);
    return wdn_membership(table, indices, options.parallel);
}

bool lies_on_rnc(const Configuration& config, const WdnOptions& options)
{
    const auto indices = chosen_indices(config, options);
    // n >= d+4 > d+1, so general position is exactly "no maximal bracket vanishes".
    const auto table = BracketTable::all(config, options.parallel);
    if (!table.all_nonzero())
        return false;
    return wdn_membership(table, indices, options.parallel).member;
}

} // namespace staudt
