#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace staudt {

/// Variables a_1..a_n, b_1..b_n are laid out as a_1..a_n first, then b_1..b_n.
inline constexpr std::size_t kMaxVariables = 32;

struct Monomial
{
    /// Total degree, compared first so the map order is graded.
    std::uint16_t degree = 0;
    std::array<std::uint8_t, kMaxVariables> exps{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial over the rationals in the variables a_i, b_i
/// (i = 1..n).  No zero coefficients are stored; terms are kept in
/// descending graded-lexicographic order with a_1 > ... > a_n > b_1 > ... > b_n.
class MultiPoly
{
public:
    using Terms = std::map<Monomial, mpq_class, std::greater<>>;

    /// The zero polynomial in 2n variables.  n is at most kMaxVariables / 2.
    explicit MultiPoly(int num_indices);

    static MultiPoly constant(int num_indices, const mpq_class& value);
    static MultiPoly a(int num_indices, int index);
    static MultiPoly b(int num_indices, int index);

    int num_indices() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Maximum total degree; -1 for the zero polynomial.
    int degree() const;
    /// Every term has the same total degree (true for zero).
    bool is_homogeneous() const;
    /// Joint degree in (a_i, b_i) for each index i when every term agrees on
    /// it; -1 where terms disagree.  Entry 0 is index 1.
    std::vector<int> index_degrees() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const mpq_class& rhs);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(MultiPoly lhs, const mpq_class& rhs) { return lhs *= rhs; }

    MultiPoly pow(unsigned exponent) const;

    /// Value at a_i = a_values[i-1], b_i = b_values[i-1].
    mpq_class evaluate(std::span<const mpq_class> a_values, std::span<const mpq_class> b_values) const;

    /// Replaces a_i (or b_i) by a polynomial.
    MultiPoly substitute_a(int index, const MultiPoly& replacement) const;
    MultiPoly substitute_b(int index, const MultiPoly& replacement) const;

    /// Canonical text "c*a1^e*b2^f + ...", descending graded-lex; "0" for zero.
    std::string to_string() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    MultiPoly substitute(std::size_t var, const MultiPoly& replacement) const;
    void check_ring(const MultiPoly& other) const;
    void add_term(const Monomial& m, const mpq_class& c);

    int n_;
    Terms terms_;
};

} // namespace staudt
