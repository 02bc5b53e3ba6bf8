#include "staudt/rnc.hpp"

#include "staudt/combinatorics.hpp"

namespace staudt {

Scalar param_bracket(const ParamPoint& lhs, const ParamPoint& rhs)
{
    return lhs.a() * rhs.b() - rhs.a() * lhs.b();
}

void require_distinct(std::span<const ParamPoint> params)
{
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j])
                throw DegenerateInput("repeated parameter point " + params[i].to_string() + " at positions " +
                                      std::to_string(i + 1) + " and " + std::to_string(j + 1));
}

namespace {

template <class Tag>
detail::BinaryPolynomial<Tag> convolve(const detail::BinaryPolynomial<Tag>& lhs,
                                       const detail::BinaryPolynomial<Tag>& rhs)
{
    const FieldSpec field = lhs.coeffs.front().field();
    detail::BinaryPolynomial<Tag> out{
        std::vector<Scalar>(lhs.coeffs.size() + rhs.coeffs.size() - 1, Scalar::zero(field))};
    for (std::size_t i = 0; i < lhs.coeffs.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs.size(); ++j)
            out.coeffs[i + j] += lhs.coeffs[i] * rhs.coeffs[j];
    return out;
}

template <class Tag>
detail::BinaryPolynomial<Tag> raise(const detail::BinaryPolynomial<Tag>& base, int exponent)
{
    if (exponent < 0)
        throw Error("negative exponent");
    detail::BinaryPolynomial<Tag> out{{Scalar::one(base.coeffs.front().field())}};
    for (int i = 0; i < exponent; ++i)
        out = convolve(out, base);
    return out;
}

// x (x-1) ... (x-r+1)
Scalar falling_factorial(const FieldSpec& field, int x, int r)
{
    Scalar out = Scalar::one(field);
    for (int i = 0; i < r; ++i)
        out *= Scalar::from_int(field, x - i);
    return out;
}

} // namespace

BinaryForm linear_form(const ParamPoint& q)
{
    return BinaryForm{{q.a(), q.b()}};
}

DiffOperator annihilator(const ParamPoint& q)
{
    return DiffOperator{{q.b(), -q.a()}};
}

BinaryForm multiply(const BinaryForm& lhs, const BinaryForm& rhs)
{
    return convolve(lhs, rhs);
}

DiffOperator multiply(const DiffOperator& lhs, const DiffOperator& rhs)
{
    return convolve(lhs, rhs);
}

BinaryForm power(const BinaryForm& base, int exponent)
{
    return raise(base, exponent);
}

DiffOperator power(const DiffOperator& base, int exponent)
{
    return raise(base, exponent);
}

BinaryForm apolarity_apply(const DiffOperator& op, const BinaryForm& f)
{
    const int m = op.degree();
    const int n = f.degree();
    if (m > n)
        throw Error("operator degree " + std::to_string(m) + " exceeds form degree " + std::to_string(n));
    const FieldSpec field = f.coeffs.front().field();
    BinaryForm out{std::vector<Scalar>(static_cast<std::size_t>(n - m + 1), Scalar::zero(field))};
    for (int i = 0; i <= m; ++i) {
        if (op.coeffs[i].is_zero())
            continue;
        // d0^(m-i) d1^i applied to x0^(n-j) x1^j lands on x1^(j-i).
        for (int j = i; j <= n - m + i; ++j) {
            if (f.coeffs[j].is_zero())
                continue;
            out.coeffs[j - i] += op.coeffs[i] * f.coeffs[j] * falling_factorial(field, n - j, m - i) *
                                 falling_factorial(field, j, i);
        }
    }
    return out;
}

Scalar apolarity_pairing(const DiffOperator& op, const BinaryForm& f)
{
    if (op.degree() != f.degree())
        throw Error("apolarity pairing needs equal degrees");
    return apolarity_apply(op, f).coeffs.front();
}

Matrix apolarity_matrix(const FieldSpec& field, int degree)
{
    const auto size = static_cast<std::size_t>(degree + 1);
    Matrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) {
        DiffOperator op{std::vector<Scalar>(size, Scalar::zero(field))};
        op.coeffs[i] = Scalar::one(field);
        for (std::size_t j = 0; j < size; ++j) {
            BinaryForm f{std::vector<Scalar>(size, Scalar::zero(field))};
            f.coeffs[j] = Scalar::one(field);
            m(i, j) = apolarity_pairing(op, f);
        }
    }
    return m;
}

ProjectivePoint veronese_embed(const ParamPoint& q, int d)
{
    if (d < 1)
        throw Error("curve degree must be at least 1");
    const FieldSpec field = q.field();
    field.require_characteristic_above(static_cast<std::uint64_t>(d));
    std::vector<Scalar> coords;
    for (int i = 0; i <= d; ++i)
        coords.push_back(Scalar::from_mpz(field, mpz_class(static_cast<unsigned long>(binomial(d, i)))) *
                         q.a().pow(static_cast<unsigned>(d - i)) * q.b().pow(static_cast<unsigned>(i)));
    return ProjectivePoint(std::move(coords));
}

Hyperplane osculating_hyperplane(const ParamPoint& q, int d)
{
    if (d < 1)
        throw Error("curve degree must be at least 1");
    q.field().require_characteristic_above(static_cast<std::uint64_t>(d));
    std::vector<Scalar> coeffs;
    for (int i = 0; i <= d; ++i) {
        Scalar c = q.a().pow(static_cast<unsigned>(i)) * q.b().pow(static_cast<unsigned>(d - i));
        coeffs.push_back(i % 2 == 0 ? c : -c);
    }
    return Hyperplane(std::move(coeffs));
}

std::vector<Scalar> simplex_vertex_coords(std::span<const ParamPoint> params)
{
    if (params.empty())
        throw Error("simplex vertex needs at least one parameter");
    // r_k is the coefficient of t^k in prod_j (a_j + b_j t).
    const FieldSpec field = params.front().field();
    std::vector<Scalar> r{Scalar::one(field)};
    for (const auto& q : params) {
        std::vector<Scalar> next(r.size() + 1, Scalar::zero(field));
        for (std::size_t k = 0; k < r.size(); ++k) {
            next[k] += r[k] * q.a();
            next[k + 1] += r[k] * q.b();
        }
        r = std::move(next);
    }
    return r;
}

ProjectivePoint simplex_vertex(std::span<const ParamPoint> params)
{
    require_distinct(params);
    params.front().field().require_characteristic_above(params.size());
    return ProjectivePoint(simplex_vertex_coords(params));
}

RNCModel fit_rnc(const Configuration& points)
{
    const int d = points.dim();
    if (points.size() != static_cast<std::size_t>(d + 3))
        throw DimensionMismatch("curve fitting needs exactly d+3 points, got " + std::to_string(points.size()));
    if (!is_general_linear_position(points))
        throw DegenerateInput("points for curve fitting are not in general linear position");
    const auto size = static_cast<std::size_t>(d + 1);

    std::vector<std::vector<Scalar>> frame;
    for (int i = 1; i <= d + 1; ++i)
        frame.push_back(points.at(i).coords());
    const Matrix basis = Matrix::from_columns(frame);
    const auto weights = solve(basis, points.at(d + 2).coords());
    if (!weights)
        throw DegenerateInput("first d+1 points are dependent");
    Matrix scaled = basis;
    for (std::size_t c = 0; c < size; ++c) {
        if ((*weights)[c].is_zero())
            throw DegenerateInput("unit point lies on a coordinate hyperplane of the frame");
        for (std::size_t r = 0; r < size; ++r)
            scaled(r, c) *= (*weights)[c];
    }
    auto frame_map = inverse(scaled);
    if (!frame_map)
        throw DegenerateInput("frame is singular");

    const auto q = (*frame_map) * std::span<const Scalar>(points.at(d + 3).coords());
    RNCModel model{d, *frame_map, {}};
    for (std::size_t i = 0; i < size; ++i) {
        if (q[i].is_zero())
            throw DegenerateInput("last point lies on a coordinate hyperplane of the frame");
        for (std::size_t j = 0; j < i; ++j)
            if (q[i] == q[j])
                throw DegenerateInput("last point has coincident frame coordinates");
        model.alphas.push_back(-q[i].inverse());
    }
    return model;
}

ProjectivePoint curve_point(const RNCModel& model, const ParamPoint& t)
{
    const auto size = static_cast<std::size_t>(model.dim + 1);
    if (model.alphas.size() != size)
        throw DimensionMismatch("model has the wrong number of alphas");
    std::vector<Scalar> x;
    for (std::size_t i = 0; i < size; ++i) {
        Scalar prod = Scalar::one(t.field());
        for (std::size_t j = 0; j < size; ++j)
            if (j != i)
                prod *= t.a() - model.alphas[j] * t.b();
        x.push_back(std::move(prod));
    }
    const auto back = inverse(model.frame_map);
    if (!back)
        throw DegenerateInput("model frame map is singular");
    return ProjectivePoint((*back) * std::span<const Scalar>(x));
}

std::optional<ParamPoint> curve_contains(const RNCModel& model, const ProjectivePoint& p)
{
    if (p.dim() != model.dim)
        throw DimensionMismatch("point and curve live in different dimensions");
    const auto x = model.frame_map * std::span<const Scalar>(p.coords());
    std::size_t nonzero = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) {
            ++nonzero;
            last_nonzero = i;
        }
    if (nonzero < x.size()) {
        // Only the frame points e_i have vanishing frame coordinates.
        if (nonzero != 1)
            return std::nullopt;
        return ParamPoint::affine(model.alphas[last_nonzero]);
    }
    // x_0 / x_1 = (u - alpha_1 v) / (u - alpha_0 v)
    ParamPoint t(x[0] * model.alphas[0] - x[1] * model.alphas[1], x[0] - x[1]);
    if (curve_point(model, t) == p)
        return t;
    return std::nullopt;
}

} // namespace staudt
