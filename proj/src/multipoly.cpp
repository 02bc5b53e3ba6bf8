#include "staudt/multipoly.hpp"

#include "staudt/errors.hpp"

namespace staudt {

MultiPoly::MultiPoly(int num_indices) : n_(num_indices)
{
    if (num_indices < 1 || static_cast<std::size_t>(2 * num_indices) > kMaxVariables)
        throw Error("polynomial ring supports 1.." + std::to_string(kMaxVariables / 2) + " index pairs");
}

MultiPoly MultiPoly::constant(int num_indices, const mpq_class& value)
{
    MultiPoly p(num_indices);
    p.add_term(Monomial{}, value);
    return p;
}

MultiPoly MultiPoly::a(int num_indices, int index)
{
    MultiPoly p(num_indices);
    if (index < 1 || index > num_indices)
        throw Error("variable index out of range");
    Monomial m;
    m.degree = 1;
    m.exps[static_cast<std::size_t>(index - 1)] = 1;
    p.add_term(m, 1);
    return p;
}

MultiPoly MultiPoly::b(int num_indices, int index)
{
    MultiPoly p(num_indices);
    if (index < 1 || index > num_indices)
        throw Error("variable index out of range");
    Monomial m;
    m.degree = 1;
    m.exps[static_cast<std::size_t>(num_indices + index - 1)] = 1;
    p.add_term(m, 1);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MultiPoly::check_ring(const MultiPoly& other) const
{
    if (n_ != other.n_)
        throw DimensionMismatch("polynomials from different rings");
}

int MultiPoly::degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.degree;
}

bool MultiPoly::is_homogeneous() const
{
    return terms_.empty() || terms_.begin()->first.degree == terms_.rbegin()->first.degree;
}

std::vector<int> MultiPoly::index_degrees() const
{
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < n_; ++i) {
            const int deg = m.exps[static_cast<std::size_t>(i)] + m.exps[static_cast<std::size_t>(n_ + i)];
            auto& slot = out[static_cast<std::size_t>(i)];
            if (first)
                slot = deg;
            else if (slot != deg)
                slot = -1;
        }
        first = false;
    }
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    check_ring(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    check_ring(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs)
{
    lhs.check_ring(rhs);
    MultiPoly out(lhs.n_);
    const auto vars = static_cast<std::size_t>(2 * lhs.n_);
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            Monomial m;
            m.degree = static_cast<std::uint16_t>(ml.degree + mr.degree);
            for (std::size_t v = 0; v < vars; ++v) {
                const int e = ml.exps[v] + mr.exps[v];
                if (e > 255)
                    throw Error("exponent overflow in polynomial product");
                m.exps[v] = static_cast<std::uint8_t>(e);
            }
            out.add_term(m, cl * cr);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& rhs)
{
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= rhs;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const
{
    MultiPoly out = constant(n_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            out *= base;
        exponent >>= 1U;
        if (exponent > 0)
            base *= base;
    }
    return out;
}

mpq_class MultiPoly::evaluate(std::span<const mpq_class> a_values, std::span<const mpq_class> b_values) const
{
    if (a_values.size() != static_cast<std::size_t>(n_) || b_values.size() != static_cast<std::size_t>(n_))
        throw DimensionMismatch("evaluation point has the wrong number of coordinates");
    mpq_class sum = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < n_; ++i) {
            for (int e = 0; e < m.exps[static_cast<std::size_t>(i)]; ++e)
                term *= a_values[static_cast<std::size_t>(i)];
            for (int e = 0; e < m.exps[static_cast<std::size_t>(n_ + i)]; ++e)
                term *= b_values[static_cast<std::size_t>(i)];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& replacement) const
{
    check_ring(replacement);
    MultiPoly out(n_);
    std::vector<MultiPoly> powers{constant(n_, 1)};
    for (const auto& [m, c] : terms_) {
        const std::uint8_t e = m.exps[var];
        while (powers.size() <= e)
            powers.push_back(powers.back() * replacement);
        Monomial rest = m;
        rest.exps[var] = 0;
        rest.degree = static_cast<std::uint16_t>(m.degree - e);
        MultiPoly term(n_);
        term.add_term(rest, c);
        out += term * powers[e];
    }
    return out;
}

MultiPoly MultiPoly::substitute_a(int index, const MultiPoly& replacement) const
{
    return substitute(static_cast<std::size_t>(index - 1), replacement);
}

MultiPoly MultiPoly::substitute_b(int index, const MultiPoly& replacement) const
{
    return substitute(static_cast<std::size_t>(n_ + index - 1), replacement);
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const mpq_class magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string factors;
        for (int v = 0; v < 2 * n_; ++v) {
            const int e = m.exps[static_cast<std::size_t>(v)];
            if (e == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += (v < n_ ? "a" : "b") + std::to_string(v < n_ ? v + 1 : v - n_ + 1);
            if (e > 1)
                factors += "^" + std::to_string(e);
        }
        if (factors.empty())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += factors;
        else
            out += magnitude.get_str() + "*" + factors;
    }
    return out;
}

} // namespace staudt
