#include "staudt/vonstaudt.hpp"

#include <algorithm>
#include <random>

namespace staudt {

namespace {

std::vector<ProjectivePoint> simplex_vertices(int d, const std::vector<ParamPoint>& Q)
{
    std::vector<ProjectivePoint> R;
    for (int i = 1; i <= 2 * d + 2; ++i) {
        const int first = i <= d + 1 ? 1 : d + 2;
        std::vector<ParamPoint> others;
        for (int j = first; j < first + d + 1; ++j)
            if (j != i)
                others.push_back(Q[static_cast<std::size_t>(j - 1)]);
        R.push_back(simplex_vertex(others));
    }
    return R;
}

} // namespace

VonStaudtInstance build_instance(int d, std::vector<ParamPoint> Q, const FieldSpec& field)
{
    if (d < 2)
        throw Error("von Staudt instances need d >= 2");
    if (Q.size() != static_cast<std::size_t>(2 * d + 2))
        throw DimensionMismatch("need 2d+2 = " + std::to_string(2 * d + 2) + " parameters, got " +
                                std::to_string(Q.size()));
    for (const auto& q : Q)
        if (!(q.field() == field))
            throw FieldMismatch("parameter " + q.to_string() + " is not over " + field.to_string());
    field.require_characteristic_above(static_cast<std::uint64_t>(d));
    require_distinct(Q);

    std::vector<ProjectivePoint> P;
    std::vector<Hyperplane> planes;
    for (const auto& q : Q) {
        P.push_back(veronese_embed(q, d));
        planes.push_back(osculating_hyperplane(q, d));
    }
    Configuration R(simplex_vertices(d, Q));
    return VonStaudtInstance{d, field, std::nullopt, std::nullopt, std::move(Q), std::move(P), std::move(planes),
                             std::move(R)};
}

std::vector<ParamPoint> sample_params(std::size_t count, const FieldSpec& field, std::uint64_t seed, long height)
{
    if (field.is_prime() && field.modulus() + 1 < count)
        throw BadField("field " + field.to_string() + " has fewer than " + std::to_string(count) + " points on P^1");
    if (field.is_rationals() && height < 1)
        throw Error("sampling height must be positive");

    std::mt19937_64 rng(seed);
    std::vector<ParamPoint> Q;
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; Q.size() < count; ++attempt) {
        if (attempt == kMaxAttempts)
            throw BadField("height " + std::to_string(height) + " admits too few distinct parameters");
        std::optional<ParamPoint> q;
        if (field.is_rationals()) {
            std::uniform_int_distribution<long> num(-height, height);
            std::uniform_int_distribution<long> den(0, height);
            const long a = num(rng);
            const long b = den(rng);
            if (a == 0 && b == 0)
                continue;
            q = ParamPoint::from_ints(field, a, b);
        } else {
            // p affine points plus the point at infinity.
            std::uniform_int_distribution<std::uint64_t> draw(0, field.modulus());
            const std::uint64_t x = draw(rng);
            q = x == field.modulus() ? ParamPoint::from_ints(field, 1, 0)
                                     : ParamPoint::affine(Scalar::from_mpz(field, mpz_class(static_cast<unsigned long>(x))));
        }
        if (std::find(Q.begin(), Q.end(), *q) == Q.end())
            Q.push_back(*q);
    }
    return Q;
}

VonStaudtInstance sample_instance(int d, const FieldSpec& field, std::uint64_t seed, long height)
{
    if (d < 2)
        throw Error("von Staudt instances need d >= 2");
    const auto needed = static_cast<std::size_t>(2 * d + 2);
    if (field.is_prime() && field.modulus() <= needed)
        throw BadField("field " + field.to_string() + " is too small: sampling needs p > 2d+2 = " +
                       std::to_string(needed));
    auto inst = build_instance(d, sample_params(needed, field, seed, height), field);
    inst.seed = seed;
    if (field.is_rationals())
        inst.height = height;
    return inst;
}

VonStaudtInstance reduce_instance(const VonStaudtInstance& inst, const FieldSpec& prime_field)
{
    std::vector<ParamPoint> Q;
    for (const auto& q : inst.Q)
        Q.emplace_back(reduce_mod(q.a(), prime_field), reduce_mod(q.b(), prime_field));
    for (std::size_t i = 0; i < Q.size(); ++i)
        for (std::size_t j = i + 1; j < Q.size(); ++j)
            if (Q[i] == Q[j])
                throw BadField("parameters " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " collide modulo " + prime_field.to_string());
    auto out = build_instance(inst.d, std::move(Q), prime_field);
    out.seed = inst.seed;
    return out;
}

Configuration reduce_configuration(const Configuration& config, const FieldSpec& prime_field)
{
    std::vector<ProjectivePoint> points;
    for (const auto& p : config.points()) {
        std::vector<Scalar> coords;
        for (const auto& c : p.coords())
            coords.push_back(reduce_mod(c, prime_field));
        points.emplace_back(std::move(coords));
    }
    return Configuration(std::move(points));
}

Certificate verify_instance(const VonStaudtInstance& inst, const VerifyOptions& options)
{
    const int d = inst.d;
    const int n = 2 * d + 2;
    if (inst.R.size() != static_cast<std::size_t>(n) || inst.R.dim() != d)
        throw DimensionMismatch("instance must carry 2d+2 points in P^d");

    Certificate cert;
    cert.d = d;
    cert.field = inst.field;
    cert.seed = inst.seed;
    cert.sampled = options.sample;

    const auto table = BracketTable::all(inst.R, options.parallel);
    cert.glp_ok = table.all_nonzero();

    const auto indices = options.sample ? sample_psi_indices(d, n, *options.sample, options.sample_seed)
                                        : enumerate_psi_indices(d, n);
    const auto membership = wdn_membership(table, indices, options.parallel);
    cert.psi_total = membership.reports.size();
    for (const auto& report : membership.reports) {
        if (report.value.is_zero())
            ++cert.psi_zero;
        else
            cert.psi_failures.push_back(report.index);
    }

    cert.verdict = cert.glp_ok && cert.psi_zero == cert.psi_total;

    if (options.castelnuovo) {
        bool ok = false;
        try {
            std::vector<ProjectivePoint> head(inst.R.points().begin(), inst.R.points().begin() + (d + 3));
            const auto model = fit_rnc(Configuration(std::move(head)));
            ok = true;
            for (const auto& p : inst.R.points())
                if (!curve_contains(model, p))
                    ok = false;
        } catch (const DegenerateInput&) {
            ok = false;
        }
        cert.castelnuovo_ok = ok;
        cert.verdict = cert.verdict && ok;
    }
    return cert;
}

Configuration dual_configuration(const VonStaudtInstance& inst)
{
    std::vector<ProjectivePoint> points;
    for (const auto& plane : inst.planes)
        points.push_back(dual_point(plane));
    return Configuration(std::move(points));
}

} // namespace staudt
