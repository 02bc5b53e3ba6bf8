#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "staudt/errors.hpp"

namespace staudt {

/// Which exact field a value lives in: the rationals or a prime field F_p.
class FieldSpec
{
public:
    enum class Kind { rationals, prime };

    /// Defaults to the rationals.
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    /// Throws BadField unless p is a prime below 2^62.
    static FieldSpec prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime() const { return kind_ == Kind::prime; }
    /// Modulus; zero for the rationals.
    std::uint64_t modulus() const { return p_; }
    /// 0 for the rationals, p otherwise.
    std::uint64_t characteristic() const { return p_; }

    /// Throws BadField unless the characteristic is 0 or exceeds `bound`.
    void require_characteristic_above(std::uint64_t bound) const;

    /// "rationals" or "prime:p"; the same syntax `parse` accepts.
    std::string to_string() const;
    static FieldSpec parse(std::string_view text);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    friend class Scalar;

    Kind kind_ = Kind::rationals;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of an exact field.  Rationals are held in lowest terms with a
/// positive denominator; residues live in [0, p).
class Scalar
{
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, long value);
    static Scalar from_mpz(const FieldSpec& field, const mpz_class& value);
    /// Reduces into F_p when needed; throws BadField if p divides the
    /// denominator.
    static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
    /// Accepts "n" or "n/d" in decimal.
    static Scalar parse(const FieldSpec& field, std::string_view text);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    /// Only valid for rational scalars.
    const mpq_class& rational() const;
    /// Only valid for prime-field scalars.
    std::uint64_t residue() const;

    /// Decimal "n" or "n/d"; residues print as their representative.
    std::string to_string() const;

    Scalar inverse() const;
    Scalar pow(unsigned exponent) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Values from different fields compare unequal.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

private:
    struct Residue
    {
        std::uint64_t value;
        std::uint64_t p;
    };

    explicit Scalar(mpq_class value) : value_(std::move(value)) {}
    explicit Scalar(Residue value) : value_(value) {}

    void check_same_field(const Scalar& other) const;

    std::variant<mpq_class, Residue> value_;
};

/// Reduces a rational scalar into F_p.  Throws BadField when p divides the
/// denominator.
Scalar reduce_mod(const Scalar& value, const FieldSpec& prime_field);

} // namespace staudt
