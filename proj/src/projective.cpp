#include "staudt/projective.hpp"

#include <algorithm>
#include <bit>

#include "staudt/combinatorics.hpp"

namespace staudt {

template <class Tag>
Homogeneous<Tag>::Homogeneous(std::vector<Scalar> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw DimensionMismatch("homogeneous vector needs at least one coordinate");
    const FieldSpec field = coords_.front().field();
    for (const auto& c : coords_)
        if (!(c.field() == field))
            throw FieldMismatch("coordinates from different fields");
    auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& c) { return !c.is_zero(); });
    if (lead == coords_.end())
        throw DegenerateInput("the zero vector is not a projective point");
    if (!lead->is_one()) {
        const Scalar inv = lead->inverse();
        for (auto it = lead; it != coords_.end(); ++it)
            *it *= inv;
    }
}

template <class Tag>
std::string Homogeneous<Tag>::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0)
            out += ":";
        out += coords_[i].to_string();
    }
    return out + "]";
}

template class Homogeneous<PointTag>;
template class Homogeneous<HyperplaneTag>;
template class Homogeneous<ParamTag>;

Scalar pairing(const ProjectivePoint& point, const Hyperplane& plane)
{
    if (point.dim() != plane.dim())
        throw DimensionMismatch("point and hyperplane live in different dimensions");
    Scalar sum = Scalar::zero(point.field());
    for (std::size_t i = 0; i < point.coords().size(); ++i)
        sum += point[i] * plane[i];
    return sum;
}

bool lies_on(const ProjectivePoint& point, const Hyperplane& plane)
{
    return pairing(point, plane).is_zero();
}

ProjectivePoint dual_point(const Hyperplane& plane)
{
    return ProjectivePoint(plane.coords());
}

Configuration::Configuration(std::vector<ProjectivePoint> points) : points_(std::move(points))
{
    if (points_.empty())
        throw DimensionMismatch("a configuration needs at least one point");
    field_ = points_.front().field();
    dim_ = points_.front().dim();
    for (const auto& p : points_) {
        if (p.dim() != dim_)
            throw DimensionMismatch("configuration points of different dimensions");
        if (!(p.field() == field_))
            throw FieldMismatch("configuration points over different fields");
    }
}

Matrix Configuration::coordinate_matrix() const
{
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(points_.size());
    for (const auto& p : points_)
        cols.push_back(p.coords());
    return Matrix::from_columns(cols);
}

Scalar bracket_raw(std::span<const std::vector<Scalar>> columns)
{
    if (columns.empty())
        throw DimensionMismatch("bracket of no points");
    for (const auto& c : columns)
        if (c.size() != columns.size())
            throw DimensionMismatch("bracket needs exactly d+1 vectors of length d+1");
    return determinant(Matrix::from_columns(columns));
}

Scalar bracket(std::span<const ProjectivePoint> points)
{
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(points.size());
    for (const auto& p : points)
        cols.push_back(p.coords());
    return bracket_raw(cols);
}

Scalar bracket(const Configuration& config, std::span<const int> indices)
{
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(indices.size());
    for (int i : indices)
        cols.push_back(config.at(i).coords());
    return bracket_raw(cols);
}

std::size_t rank(const Configuration& config)
{
    return rank(config.coordinate_matrix());
}

bool is_general_linear_position(const Configuration& config)
{
    const auto n = static_cast<int>(config.size());
    const int d = config.dim();
    if (n <= d + 1)
        return rank(config) == static_cast<std::size_t>(n);
    // Subsets of independent sets are independent, so the (d+1)-subsets decide.
    for (const auto& subset : subsets_of(index_range(1, n), static_cast<std::size_t>(d + 1)))
        if (bracket(config, subset).is_zero())
            return false;
    return true;
}

bool is_degenerate(const Configuration& config)
{
    if (config.size() < static_cast<std::size_t>(config.dim() + 1))
        throw Error("degeneracy test needs at least d+1 points");
    return rank(config) <= static_cast<std::size_t>(config.dim());
}

void serial_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    for (std::size_t i = 0; i < count; ++i)
        body(i);
}

BracketTable BracketTable::all(const Configuration& config, const ParallelFor& parallel)
{
    std::vector<std::uint64_t> masks;
    for (const auto& subset : subsets_of(index_range(1, static_cast<int>(config.size())),
                                         static_cast<std::size_t>(config.dim() + 1)))
        masks.push_back(subset_mask(subset));
    return for_masks(config, std::move(masks), parallel);
}

BracketTable BracketTable::for_masks(const Configuration& config, std::vector<std::uint64_t> masks,
                                     const ParallelFor& parallel)
{
    if (config.size() > 64)
        throw Error("bracket tables support at most 64 points");
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    BracketTable table;
    table.field_ = config.field();
    table.values_.resize(masks.size());
    parallel(masks.size(), [&](std::size_t k) {
        std::vector<int> indices;
        for (int i = 0; i < 64; ++i)
            if ((masks[k] >> static_cast<unsigned>(i)) & 1U)
                indices.push_back(i + 1);
        table.values_[k] = bracket(config, indices);
    });
    table.masks_ = std::move(masks);
    return table;
}

const Scalar& BracketTable::sorted(std::uint64_t mask) const
{
    auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
    if (it == masks_.end() || *it != mask)
        throw std::out_of_range("bracket not present in table");
    return values_[static_cast<std::size_t>(it - masks_.begin())];
}

Scalar BracketTable::ordered(std::span<const int> indices) const
{
    const std::uint64_t mask = subset_mask(indices);
    if (static_cast<std::size_t>(std::popcount(mask)) != indices.size())
        return Scalar::zero(field_);
    const Scalar& value = sorted(mask);
    return inversion_parity(indices) == 0 ? value : -value;
}

bool BracketTable::all_nonzero() const
{
    return std::none_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace staudt
