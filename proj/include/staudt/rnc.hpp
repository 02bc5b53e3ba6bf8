#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staudt/linalg.hpp"
#include "staudt/projective.hpp"

namespace staudt {

/// A point [a:b] of the projective line, canonicalized like ProjectivePoint.
class ParamPoint
{
public:
    ParamPoint(Scalar a, Scalar b) : h_({std::move(a), std::move(b)}) {}

    static ParamPoint from_ints(const FieldSpec& field, long a, long b)
    {
        return {Scalar::from_int(field, a), Scalar::from_int(field, b)};
    }
    /// [t:1]
    static ParamPoint affine(Scalar t) { return {t, Scalar::one(t.field())}; }

    const Scalar& a() const { return h_[0]; }
    const Scalar& b() const { return h_[1]; }
    FieldSpec field() const { return h_.field(); }
    std::string to_string() const { return h_.to_string(); }

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

private:
    Homogeneous<ParamTag> h_;
};

/// The 2x2 bracket |Q_i Q_j| = a_i b_j - a_j b_i.
Scalar param_bracket(const ParamPoint& lhs, const ParamPoint& rhs);

/// Throws DegenerateInput when two parameters coincide.
void require_distinct(std::span<const ParamPoint> params);

namespace detail {
template <class Tag>
struct BinaryPolynomial
{
    /// coeffs[i] multiplies the monomial with index i (see the aliases).
    std::vector<Scalar> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }
    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;
};
} // namespace detail

struct FormTag;
struct OperatorTag;

/// Element of k[x0,x1]_deg; coeffs[i] multiplies x0^(deg-i) x1^i.
using BinaryForm = detail::BinaryPolynomial<FormTag>;
/// Element of k[d0,d1]_deg; coeffs[i] multiplies d0^(deg-i) d1^i.
using DiffOperator = detail::BinaryPolynomial<OperatorTag>;

/// L = a x0 + b x1.
BinaryForm linear_form(const ParamPoint& q);
/// The operator b d0 - a d1 that kills a x0 + b x1.
DiffOperator annihilator(const ParamPoint& q);

BinaryForm multiply(const BinaryForm& lhs, const BinaryForm& rhs);
DiffOperator multiply(const DiffOperator& lhs, const DiffOperator& rhs);
BinaryForm power(const BinaryForm& base, int exponent);
DiffOperator power(const DiffOperator& base, int exponent);

/// Formal differentiation op o f.  Throws when op has the larger degree.
BinaryForm apolarity_apply(const DiffOperator& op, const BinaryForm& f);
/// The scalar op o f for equal degrees.
Scalar apolarity_pairing(const DiffOperator& op, const BinaryForm& f);
/// (deg+1) x (deg+1) matrix pairing the monomial bases of T_deg and S_deg.
Matrix apolarity_matrix(const FieldSpec& field, int degree);

/// The standard rational normal curve: [a:b] -> [... : C(d,i) a^(d-i) b^i : ...].
ProjectivePoint veronese_embed(const ParamPoint& q, int d);

/// Osculating hyperplane to the standard curve at q, coefficients
/// ((-1)^i a^i b^(d-i)) for i = 0..d.
Hyperplane osculating_hyperplane(const ParamPoint& q, int d);

/// Raw coordinates r_k = sum over (d-k)-subsets I of a_I b_{rest} for the
/// intersection of the osculating hyperplanes at the d given parameters.
std::vector<Scalar> simplex_vertex_coords(std::span<const ParamPoint> params);
/// Same point, canonicalized.  Throws DegenerateInput on repeated parameters.
ProjectivePoint simplex_vertex(std::span<const ParamPoint> params);

/// A rational normal curve t=[u:v] -> frame_map^{-1} (prod_{j != i} (u - alpha_j v))_i.
struct RNCModel
{
    int dim = 0;
    Matrix frame_map;
    std::vector<Scalar> alphas;

    friend bool operator==(const RNCModel&, const RNCModel&) = default;
};

/// The unique rational normal curve through d+3 points in general linear
/// position.  Throws DegenerateInput otherwise.
RNCModel fit_rnc(const Configuration& points);

ProjectivePoint curve_point(const RNCModel& model, const ParamPoint& t);

/// The parameter of p on the curve, or nullopt when p is off the curve.
std::optional<ParamPoint> curve_contains(const RNCModel& model, const ProjectivePoint& p);

} // namespace staudt
