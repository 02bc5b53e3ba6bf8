#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "staudt/linalg.hpp"
#include "staudt/scalar.hpp"

namespace staudt {

/// Homogeneous coordinate vector, stored in canonical form: the first nonzero
/// entry is scaled to 1.  Equality of canonical forms is projective equality.
template <class Tag>
class Homogeneous
{
public:
    /// Throws DegenerateInput for the zero vector and FieldMismatch when the
    /// entries disagree on the field.
    explicit Homogeneous(std::vector<Scalar> coords);

    static Homogeneous from_ints(const FieldSpec& field, std::initializer_list<long> coords)
    {
        std::vector<Scalar> v;
        for (long c : coords)
            v.push_back(Scalar::from_int(field, c));
        return Homogeneous(std::move(v));
    }

    /// Ambient projective dimension d (the vector has d+1 entries).
    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    FieldSpec field() const { return coords_.front().field(); }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    std::string to_string() const;

    friend bool operator==(const Homogeneous&, const Homogeneous&) = default;

private:
    std::vector<Scalar> coords_;
};

struct PointTag;
struct HyperplaneTag;
struct ParamTag;

using ProjectivePoint = Homogeneous<PointTag>;
/// Coefficient vector of a linear form; the hyperplane is its zero set.
using Hyperplane = Homogeneous<HyperplaneTag>;

extern template class Homogeneous<PointTag>;
extern template class Homogeneous<HyperplaneTag>;
extern template class Homogeneous<ParamTag>;

/// Sum of coords[i] * coeffs[i]; zero iff the point lies on the hyperplane.
Scalar pairing(const ProjectivePoint& point, const Hyperplane& plane);
bool lies_on(const ProjectivePoint& point, const Hyperplane& plane);

/// The coefficient vector of a hyperplane read as a point of the dual space.
ProjectivePoint dual_point(const Hyperplane& plane);

/// Ordered tuple of points in P^d over one field.
class Configuration
{
public:
    /// Throws on an empty list or on dimension/field disagreement.
    explicit Configuration(std::vector<ProjectivePoint> points);

    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    /// 1-based access, matching the index convention of the bracket equations.
    const ProjectivePoint& at(int index) const { return points_.at(static_cast<std::size_t>(index - 1)); }

    /// (d+1) x n matrix with the canonical coordinates as columns.
    Matrix coordinate_matrix() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    FieldSpec field_;
    int dim_ = 0;
    std::vector<ProjectivePoint> points_;
};

/// Determinant of the matrix whose j-th column is the j-th point's canonical
/// coordinate vector.  Needs exactly d+1 points.
Scalar bracket(std::span<const ProjectivePoint> points);

/// Same determinant on raw, unnormalized coordinate vectors.
Scalar bracket_raw(std::span<const std::vector<Scalar>> columns);

/// Bracket of the configuration points with the given 1-based indices, in
/// the given column order.
Scalar bracket(const Configuration& config, std::span<const int> indices);

/// Rank of the (d+1) x n coordinate matrix.
std::size_t rank(const Configuration& config);

/// Every subset of at most d+1 points is linearly independent.
bool is_general_linear_position(const Configuration& config);

/// All points lie on a common hyperplane.  Needs n >= d+1.
bool is_degenerate(const Configuration& config);

/// Runs body(i) for i in [0, count).  Library code only ever calls this
/// hook; the caller decides whether it fans out across threads.
using ParallelFor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

void serial_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Brackets of sorted (d+1)-subsets of a configuration, keyed by bitmask of
/// 1-based indices.  Immutable once built.
class BracketTable
{
public:
    /// Every (d+1)-subset of the configuration.
    static BracketTable all(const Configuration& config, const ParallelFor& parallel = serial_for);
    /// Only the listed subset masks.
    static BracketTable for_masks(const Configuration& config, std::vector<std::uint64_t> masks,
                                  const ParallelFor& parallel = serial_for);

    /// Bracket with columns in the order given; the sign follows the
    /// permutation relative to the sorted subset.
    Scalar ordered(std::span<const int> indices) const;
    const Scalar& sorted(std::uint64_t mask) const;

    std::size_t size() const { return masks_.size(); }
    const FieldSpec& field() const { return field_; }
    /// True when every stored bracket is nonzero.
    bool all_nonzero() const;

private:
    FieldSpec field_;
    std::vector<std::uint64_t> masks_;
    std::vector<Scalar> values_;
};

} // namespace staudt
