#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "staudt/projective.hpp"
#include "staudt/rnc.hpp"
#include "staudt/wdn.hpp"

namespace staudt {

/// Two osculating simplices of the standard rational normal curve.  Indices
/// 1..d+1 form the first group (T1), d+2..2d+2 the second (T2); vectors are
/// 0-based, so Q[i-1] is Q_i.
struct VonStaudtInstance
{
    int d = 0;
    FieldSpec field;
    /// Present when the instance was sampled.
    std::optional<std::uint64_t> seed;
    std::optional<long> height;
    std::vector<ParamPoint> Q;
    std::vector<ProjectivePoint> P;
    std::vector<Hyperplane> planes;
    /// R_i is the intersection of the same-side planes other than planes_i.
    Configuration R;
};

/// Throws DegenerateInput on repeated parameters, BadField when the
/// characteristic is at most d, DimensionMismatch unless |Q| = 2d+2.
VonStaudtInstance build_instance(int d, std::vector<ParamPoint> Q, const FieldSpec& field);

inline constexpr long kDefaultHeight = 20;

/// `count` distinct parameters drawn with the given seed: [a:b] with
/// |a|, b <= height over the rationals, uniform points of P^1(F_p)
/// otherwise.  Throws BadField when the field or height is too small.
std::vector<ParamPoint> sample_params(std::size_t count, const FieldSpec& field, std::uint64_t seed,
                                      long height = kDefaultHeight);

/// build_instance on sample_params(2d+2, ...).  Prime fields need p > 2d+2.
VonStaudtInstance sample_instance(int d, const FieldSpec& field, std::uint64_t seed, long height = kDefaultHeight);

/// Rebuilds a rational instance over F_p from its reduced parameters.
/// Throws BadField when a parameter does not reduce or two collide.
VonStaudtInstance reduce_instance(const VonStaudtInstance& inst, const FieldSpec& prime_field);

struct VerifyOptions
{
    bool castelnuovo = false;
    /// Check only this many seeded equations instead of all of them.
    std::optional<std::uint64_t> sample;
    std::uint64_t sample_seed = 0;
    ParallelFor parallel = serial_for;
};

struct Certificate
{
    int d = 0;
    FieldSpec field;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> sampled;
    bool glp_ok = false;
    std::uint64_t psi_total = 0;
    std::uint64_t psi_zero = 0;
    /// Every failing equation, in enumeration order.
    std::vector<PsiIndex> psi_failures;
    std::optional<bool> castelnuovo_ok;
    bool verdict = false;
};

/// General position of R, then the bracket equations on R; optionally fits
/// a curve through R_1..R_{d+3} and checks it contains every R_i.  Never
/// throws on a failed check; failures land in the certificate.
Certificate verify_instance(const VonStaudtInstance& inst, const VerifyOptions& options = {});

/// The plane coefficient vectors as points of the dual space.
Configuration dual_configuration(const VonStaudtInstance& inst);

/// Canonical points reduced into F_p.
Configuration reduce_configuration(const Configuration& config, const FieldSpec& prime_field);

} // namespace staudt
