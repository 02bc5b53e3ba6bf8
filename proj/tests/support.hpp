#pragma once

// Conversions between library values and the plain vectors the oracles use.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "staudt/projective.hpp"
#include "staudt/rnc.hpp"

namespace support {

using namespace staudt;

inline const FieldSpec Q = FieldSpec::rationals();

inline oracle::Vec to_mpq(const std::vector<Scalar>& v)
{
    oracle::Vec out;
    for (const auto& s : v)
        out.push_back(s.rational());
    return out;
}

inline std::vector<Scalar> from_mpq(const oracle::Vec& v, const FieldSpec& field = Q)
{
    std::vector<Scalar> out;
    for (const auto& x : v)
        out.push_back(Scalar::from_rational(field, x));
    return out;
}

inline ProjectivePoint point(std::initializer_list<long> coords, const FieldSpec& field = Q)
{
    return ProjectivePoint::from_ints(field, coords);
}

/// iota([t:1]) on the standard curve.
inline ProjectivePoint on_curve(long t, int d, const FieldSpec& field = Q)
{
    return veronese_embed(ParamPoint::from_ints(field, t, 1), d);
}

inline Configuration curve_configuration(std::initializer_list<long> ts, int d, const FieldSpec& field = Q)
{
    std::vector<ProjectivePoint> pts;
    for (long t : ts)
        pts.push_back(on_curve(t, d, field));
    return Configuration(std::move(pts));
}

/// A point with small random integer coordinates.
inline ProjectivePoint random_point(std::mt19937_64& rng, int d, const FieldSpec& field = Q, long bound = 50)
{
    std::uniform_int_distribution<long> draw(-bound, bound);
    for (;;) {
        std::vector<Scalar> coords;
        bool nonzero = false;
        for (int i = 0; i <= d; ++i) {
            const long c = draw(rng);
            nonzero = nonzero || c != 0;
            coords.push_back(Scalar::from_int(field, c));
        }
        if (nonzero)
            return ProjectivePoint(std::move(coords));
    }
}

inline std::vector<ParamPoint> params(std::initializer_list<long> ts, const FieldSpec& field = Q)
{
    std::vector<ParamPoint> out;
    for (long t : ts)
        out.push_back(ParamPoint::from_ints(field, t, 1));
    return out;
}

} // namespace support
