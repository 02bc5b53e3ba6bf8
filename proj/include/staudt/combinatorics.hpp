#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace staudt {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
inline std::uint64_t binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t out = 1;
    for (long i = 1; i <= k; ++i)
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return out;
}

/// All k-subsets of `pool` (which must be sorted), in lexicographic order.
inline std::vector<std::vector<int>> subsets_of(std::span<const int> pool, std::size_t k)
{
    std::vector<std::vector<int>> out;
    if (k > pool.size())
        return out;
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i)
        pos[i] = i;
    for (;;) {
        std::vector<int> subset(k);
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = pool[pos[i]];
        out.push_back(std::move(subset));
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == pool.size() - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pos[j] = pos[j - 1] + 1;
    }
    return out;
}

/// {first, first+1, ..., last}.
inline std::vector<int> index_range(int first, int last)
{
    std::vector<int> out;
    for (int i = first; i <= last; ++i)
        out.push_back(i);
    return out;
}

/// Lexicographic rank of a sorted k-subset of {1..n}.
inline std::uint64_t subset_rank(std::span<const int> subset, int n)
{
    const long k = static_cast<long>(subset.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (long i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            rank += binomial(n - v, k - i - 1);
        prev = subset[i];
    }
    return rank;
}

/// Inverse of subset_rank.
inline std::vector<int> subset_unrank(std::uint64_t rank, int n, int k)
{
    if (rank >= binomial(n, k))
        throw std::out_of_range("subset rank out of range");
    std::vector<int> out;
    int v = 1;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            const std::uint64_t block = binomial(n - v, k - i - 1);
            if (rank < block)
                break;
            rank -= block;
        }
        out.push_back(v++);
    }
    return out;
}

/// Parity of the inversion count of `seq` (0 or 1).  Equal to the parity of
/// the number of adjacent transpositions that sort it.
inline int inversion_parity(std::span<const int> seq)
{
    int parity = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j])
                parity ^= 1;
    return parity;
}

/// Bit i-1 set for every index i in the (1-based) subset.
inline std::uint64_t subset_mask(std::span<const int> subset)
{
    std::uint64_t mask = 0;
    for (int i : subset)
        mask |= 1ULL << static_cast<unsigned>(i - 1);
    return mask;
}

} // namespace staudt
