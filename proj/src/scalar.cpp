#include "staudt/scalar.hpp"

#include <charconv>

namespace staudt {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t mpz_mod_u64(const mpz_class& value, std::uint64_t p)
{
    mpz_class r;
    mpz_class modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0)
            return n == small;
    }
    std::uint64_t odd = n - 1;
    int twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t witness : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(witness, odd, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < twos; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p >= (1ULL << 62U) || !staudt::is_prime(p))
        throw BadField("modulus " + std::to_string(p) + " is not a prime below 2^62");
    FieldSpec field;
    field.kind_ = Kind::prime;
    field.p_ = p;
    return field;
}

void FieldSpec::require_characteristic_above(std::uint64_t bound) const
{
    if (is_prime() && p_ <= bound)
        throw BadField("field " + to_string() + " needs characteristic 0 or larger than " + std::to_string(bound));
}

std::string FieldSpec::to_string() const
{
    return is_rationals() ? std::string("rationals") : "prime:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text)
{
    if (text == "rationals" || text == "Q")
        return rationals();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw ParseError("bad field modulus in '" + std::string(text) + "'");
        return prime(p);
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected rationals or prime:p)");
}

Scalar Scalar::zero(const FieldSpec& field)
{
    return from_int(field, 0);
}

Scalar Scalar::one(const FieldSpec& field)
{
    return from_int(field, 1);
}

Scalar Scalar::from_int(const FieldSpec& field, long value)
{
    return from_mpz(field, mpz_class(value));
}

Scalar Scalar::from_mpz(const FieldSpec& field, const mpz_class& value)
{
    if (field.is_rationals())
        return Scalar(mpq_class(value));
    return Scalar(Residue{mpz_mod_u64(value, field.modulus()), field.modulus()});
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value)
{
    if (field.is_rationals()) {
        mpq_class copy = value;
        copy.canonicalize();
        return Scalar(std::move(copy));
    }
    const std::uint64_t p = field.modulus();
    const std::uint64_t den = mpz_mod_u64(value.get_den(), p);
    if (den == 0)
        throw BadField("denominator of " + value.get_str() + " vanishes modulo " + std::to_string(p));
    const std::uint64_t num = mpz_mod_u64(value.get_num(), p);
    return Scalar(Residue{mul_mod(num, pow_mod(den, p - 2, p), p), p});
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::string s(part);
        if (!s.empty() && s.front() == '+')
            s.erase(0, 1);
        mpz_class out;
        if (s.empty() || out.set_str(s, 10) != 0)
            throw ParseError("bad scalar '" + std::string(text) + "'");
        return out;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_mpz(field, parse_int(text));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return from_rational(field, mpq_class(parse_int(text.substr(0, slash)), den));
}

FieldSpec Scalar::field() const
{
    FieldSpec out;
    if (const auto* r = std::get_if<Residue>(&value_)) {
        out.kind_ = FieldSpec::Kind::prime;
        out.p_ = r->p;
    }
    return out;
}

bool Scalar::is_zero() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return r->value == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return *q;
    throw FieldMismatch("scalar is not rational");
}

std::uint64_t Scalar::residue() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return r->value;
    throw FieldMismatch("scalar is not a prime-field residue");
}

std::string Scalar::to_string() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

void Scalar::check_same_field(const Scalar& other) const
{
    const auto* a = std::get_if<Residue>(&value_);
    const auto* b = std::get_if<Residue>(&other.value_);
    if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p))
        throw FieldMismatch("scalars from different fields: " + field().to_string() + " vs " + other.field().to_string());
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
    mpq_class inv = 1 / std::get<mpq_class>(value_);
    inv.canonicalize();
    return Scalar(std::move(inv));
}

Scalar Scalar::pow(unsigned exponent) const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{pow_mod(r->value, exponent, r->p), r->p});
    const auto& q = std::get<mpq_class>(value_);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), exponent);
    return Scalar(std::move(out));
}

Scalar Scalar::operator-() const
{
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        const std::uint64_t sum = r->value + std::get<Residue>(rhs.value_).value;
        r->value = sum >= r->p ? sum - r->p : sum;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        const std::uint64_t other = std::get<Residue>(rhs.value_).value;
        r->value = r->value >= other ? r->value - other : r->value + r->p - other;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_))
        r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->p);
    else
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    if (std::holds_alternative<Residue>(value_))
        return *this *= rhs.inverse();
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
    return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs)
{
    const auto* a = std::get_if<Scalar::Residue>(&lhs.value_);
    const auto* b = std::get_if<Scalar::Residue>(&rhs.value_);
    if (a != nullptr && b != nullptr)
        return a->p == b->p && a->value == b->value;
    if (a == nullptr && b == nullptr)
        return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
    return false;
}

Scalar reduce_mod(const Scalar& value, const FieldSpec& prime_field)
{
    return Scalar::from_rational(prime_field, value.rational());
}

} // namespace staudt
