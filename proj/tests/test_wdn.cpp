#include <gtest/gtest.h>

#include <set>

#include "staudt/combinatorics.hpp"
#include "staudt/rnc.hpp"
#include "staudt/wdn.hpp"
#include "support.hpp"

using namespace staudt;
using support::point;
using support::Q;

namespace {

/// Column orders written out by hand from the displayed equation
/// |4567||2367||1357||1247| - |3567||2467||1457||1237| on J = {1..7}.
std::vector<int> columns(const PsiIndex& idx, std::initializer_list<int> positions)
{
    std::vector<int> out;
    for (int p : positions)
        out.push_back(idx.I[static_cast<std::size_t>(p - 1)]);
    out.insert(out.end(), idx.complement.begin(), idx.complement.end());
    return out;
}

mpq_class oracle_bracket(const Configuration& config, const std::vector<int>& cols)
{
    std::vector<oracle::Vec> vs;
    for (int c : cols)
        vs.push_back(support::to_mpq(config.at(c).coords()));
    return oracle::det_of_columns(vs);
}

mpq_class oracle_psi(const Configuration& config, const PsiIndex& idx)
{
    const mpq_class m1 = oracle_bracket(config, columns(idx, {4, 5, 6})) *
                         oracle_bracket(config, columns(idx, {2, 3, 6})) *
                         oracle_bracket(config, columns(idx, {1, 3, 5})) *
                         oracle_bracket(config, columns(idx, {1, 2, 4}));
    const mpq_class m2 = oracle_bracket(config, columns(idx, {3, 5, 6})) *
                         oracle_bracket(config, columns(idx, {2, 4, 6})) *
                         oracle_bracket(config, columns(idx, {1, 4, 5})) *
                         oracle_bracket(config, columns(idx, {1, 2, 3}));
    return m1 - m2;
}

Configuration random_configuration(std::mt19937_64& rng, int d, int n)
{
    std::vector<ProjectivePoint> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back(support::random_point(rng, d));
    return Configuration(std::move(pts));
}

} // namespace

TEST(PsiIndex, Counts)
{
    EXPECT_EQ(psi_index_count(3, 8), 56U);
    EXPECT_EQ(enumerate_psi_indices(3, 8).size(), 56U);
    EXPECT_EQ(psi_index_count(2, 6), 1U);
    const auto single = enumerate_psi_indices(2, 6);
    ASSERT_EQ(single.size(), 1U);
    EXPECT_EQ(single[0].J, index_range(1, 6));
    EXPECT_EQ(single[0].I, index_range(1, 6));
    EXPECT_EQ(psi_index_count(4, 10), 1260U);
    for (int d = 2; d <= 6; ++d)
        for (int n = d + 4; n <= 2 * d + 4; ++n)
            EXPECT_EQ(psi_index_count(d, n), oracle::binomial(n, d + 4) * oracle::binomial(d + 4, 6));
    EXPECT_THROW(psi_index_count(3, 6), Error);
    EXPECT_THROW(psi_index_count(1, 8), Error);
}

TEST(PsiIndex, EnumerationOrderAndRanks)
{
    const auto all = enumerate_psi_indices(4, 10);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<PsiIndex>(all.begin(), all.end()).size(), all.size());
    for (std::uint64_t r = 0; r < all.size(); r += 37)
        EXPECT_EQ(psi_index_at(4, 10, r), all[r]);
    EXPECT_THROW(psi_index_at(4, 10, all.size()), std::out_of_range);
    for (const auto& idx : all) {
        EXPECT_EQ(idx.J.size(), 8U);
        EXPECT_EQ(idx.I.size(), 6U);
        EXPECT_EQ(idx.complement.size(), 2U);
        EXPECT_TRUE(std::includes(idx.J.begin(), idx.J.end(), idx.I.begin(), idx.I.end()));
    }
}

TEST(PsiIndex, Validation)
{
    EXPECT_NO_THROW(PsiIndex::make(3, 8, index_range(1, 7), index_range(1, 6)));
    EXPECT_THROW(PsiIndex::make(3, 8, index_range(1, 6), index_range(1, 6)), Error);
    EXPECT_THROW(PsiIndex::make(3, 8, {1, 2, 3, 4, 5, 6, 9}, index_range(1, 6)), Error);
    EXPECT_THROW(PsiIndex::make(3, 8, index_range(1, 7), {1, 2, 3, 4, 5, 8}), Error);
    EXPECT_THROW(PsiIndex::make(3, 8, {2, 1, 3, 4, 5, 6, 7}, index_range(1, 6)), Error);
}

TEST(PsiIndex, DisplayedEquation)
{
    const auto idx = PsiIndex::make(3, 8, index_range(1, 7), index_range(1, 6));
    EXPECT_EQ(psi_display(idx), "|4567||2367||1357||1247| - |3567||2467||1457||1237|");
    EXPECT_EQ(idx.first_monomial()[0], (std::vector<int>{4, 5, 6, 7}));
    EXPECT_EQ(idx.second_monomial()[3], (std::vector<int>{1, 2, 3, 7}));

    const auto wide = PsiIndex::make(2, 12, {2, 4, 6, 8, 10, 12}, {2, 4, 6, 8, 10, 12});
    EXPECT_EQ(psi_display(wide), "|8,10,12||4,6,12||2,6,10||2,4,8| - |6,10,12||4,8,12||2,8,10||2,4,6|");
}

TEST(PsiIndex, SamplingIsSeededAndDistinct)
{
    const auto a = sample_psi_indices(6, 14, 500, 42);
    const auto b = sample_psi_indices(6, 14, 500, 42);
    const auto c = sample_psi_indices(6, 14, 500, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    EXPECT_EQ(a.size(), 500U);
    EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
    EXPECT_EQ(std::set<PsiIndex>(a.begin(), a.end()).size(), 500U);
    EXPECT_EQ(sample_psi_indices(3, 8, 1000, 1), enumerate_psi_indices(3, 8));
}

TEST(PsiEval, MatchesLeibnizOracle)
{
    std::mt19937_64 rng(2);
    for (int d = 2; d <= 4; ++d) {
        const int n = d + 5;
        const auto config = random_configuration(rng, d, n);
        const auto table = BracketTable::all(config);
        for (const auto& idx : sample_psi_indices(d, n, 40, 7)) {
            const auto report = psi_eval(config, idx);
            EXPECT_EQ(report.value.rational(), oracle_psi(config, idx));
            EXPECT_EQ(report.value, report.m1 - report.m2);
            EXPECT_EQ(psi_eval(table, idx).value, report.value);
        }
    }
}

TEST(PsiEval, SixPointsOnAConic)
{
    // Points iota([1:t]), t = 0..5; [1:1:0] keeps them in general position.
    const auto idx = enumerate_psi_indices(2, 6).front();
    std::vector<ProjectivePoint> curve;
    for (long t = 0; t <= 5; ++t)
        curve.push_back(veronese_embed(ParamPoint::from_ints(Q, 1, t), 2));
    const Configuration on(curve);
    EXPECT_TRUE(psi_eval(on, idx).value.is_zero());
    EXPECT_EQ(oracle_psi(on, idx), 0);

    auto pts = on.points();
    pts.back() = point({1, 1, 0});
    const Configuration off(pts);
    EXPECT_TRUE(is_general_linear_position(off));
    EXPECT_FALSE(psi_eval(off, idx).value.is_zero());
    EXPECT_NE(oracle_psi(off, idx), 0);
}

TEST(PsiEval, VanishingIsScaleInvariant)
{
    // Rescaling the raw coordinates of one point multiplies both monomials
    // by the same nonzero factor.
    std::mt19937_64 rng(3);
    const int d = 3;
    const auto config = random_configuration(rng, d, 8);
    for (const auto& idx : enumerate_psi_indices(d, 8)) {
        const mpq_class base = oracle_psi(config, idx);
        for (int target : idx.J) {
            auto pts = config.points();
            std::vector<oracle::Vec> raw;
            for (const auto& p : pts)
                raw.push_back(support::to_mpq(p.coords()));
            for (auto& x : raw[static_cast<std::size_t>(target - 1)])
                x *= -7;
            // Brackets on raw coordinates, through the library.
            auto raw_bracket = [&](std::initializer_list<int> positions) {
                std::vector<std::vector<Scalar>> cols;
                for (int c : columns(idx, positions))
                    cols.push_back(support::from_mpq(raw[static_cast<std::size_t>(c - 1)]));
                return bracket_raw(cols).rational();
            };
            const mpq_class scaled = raw_bracket({4, 5, 6}) * raw_bracket({2, 3, 6}) * raw_bracket({1, 3, 5}) *
                                         raw_bracket({1, 2, 4}) -
                                     raw_bracket({3, 5, 6}) * raw_bracket({2, 4, 6}) * raw_bracket({1, 4, 5}) *
                                         raw_bracket({1, 2, 3});
            // The factor is (-7)^k, k the number of first-monomial brackets
            // holding the target; the second monomial has the same count.
            int occurrences = 0;
            for (auto positions : {std::vector<int>{4, 5, 6}, {2, 3, 6}, {1, 3, 5}, {1, 2, 4}}) {
                std::vector<int> cols;
                for (int q : positions)
                    cols.push_back(idx.I[static_cast<std::size_t>(q - 1)]);
                cols.insert(cols.end(), idx.complement.begin(), idx.complement.end());
                occurrences += static_cast<int>(std::count(cols.begin(), cols.end(), target));
            }
            mpq_class factor = 1;
            for (int k = 0; k < occurrences; ++k)
                factor *= -7;
            EXPECT_EQ(scaled, base * factor);
        }
    }
}

TEST(Membership, PointsOnTwistedCubic)
{
    const auto config = support::curve_configuration({-4, -1, 0, 1, 2, 3, 5, 8}, 3);
    const auto result = wdn_membership(config);
    EXPECT_TRUE(result.member);
    EXPECT_EQ(result.reports.size(), 56U);
    for (const auto& r : result.reports)
        EXPECT_TRUE(r.value.is_zero());
    EXPECT_TRUE(lies_on_rnc(config));
}

TEST(Membership, CurvePointsAlwaysSatisfy)
{
    std::mt19937_64 rng(4);
    for (int d = 2; d <= 5; ++d) {
        for (int n = d + 4; n <= d + 6; ++n) {
            std::vector<ProjectivePoint> pts;
            std::set<long> used;
            std::uniform_int_distribution<long> draw(-40, 40);
            while (pts.size() < static_cast<std::size_t>(n)) {
                const long t = draw(rng);
                if (used.insert(t).second)
                    pts.push_back(support::on_curve(t, d));
            }
            EXPECT_TRUE(wdn_membership(Configuration(pts)).member) << d << " " << n;
        }
    }
}

TEST(Membership, DegenerateConfigurationsSatisfy)
{
    std::mt19937_64 rng(5);
    for (int d = 2; d <= 4; ++d) {
        std::vector<ProjectivePoint> pts;
        for (int i = 0; i < d + 5; ++i) {
            auto p = support::random_point(rng, d);
            auto coords = p.coords();
            coords.back() = Scalar::zero(Q); // all on X_d = 0
            if (std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); }))
                coords.front() = Scalar::one(Q);
            pts.emplace_back(coords);
        }
        const Configuration config(pts);
        EXPECT_TRUE(is_degenerate(config));
        EXPECT_TRUE(wdn_membership(config).member);
        EXPECT_FALSE(lies_on_rnc(config));
    }
}

TEST(Membership, PerturbedPointFails)
{
    std::mt19937_64 rng(8);
    auto pts = support::curve_configuration({-4, -1, 0, 1, 2, 3, 5, 8}, 3).points();
    do
        pts[6] = support::random_point(rng, 3);
    while (!is_general_linear_position(Configuration(pts)));
    const Configuration config(pts);
    EXPECT_FALSE(wdn_membership(config).member);
    EXPECT_FALSE(lies_on_rnc(config));
}

TEST(LiesOnRnc, Examples)
{
    EXPECT_TRUE(lies_on_rnc(support::curve_configuration({0, 1, 2, 3, 4, 5}, 2)));
    const Configuration line({point({1, 0, 0}), point({0, 1, 0}), point({1, 1, 0}), point({1, 2, 0}), point({1, 3, 0}),
                              point({1, 4, 0})});
    EXPECT_FALSE(lies_on_rnc(line));
}

TEST(LiesOnRnc, AgreesWithCurveFitting)
{
    std::mt19937_64 rng(6);
    for (int d = 2; d <= 4; ++d) {
        // A curve in a random frame, via the fit through random points.
        std::vector<ProjectivePoint> frame;
        for (int i = 0; i < d + 3; ++i)
            frame.push_back(support::random_point(rng, d));
        const Configuration head(frame);
        if (!is_general_linear_position(head))
            continue;
        const auto model = fit_rnc(head);
        auto pts = frame;
        std::uniform_int_distribution<long> draw(-30, 30);
        for (int k = 0; k < 3; ++k)
            pts.push_back(curve_point(model, ParamPoint::from_ints(Q, draw(rng), 1 + k)));
        const Configuration config(pts);
        if (!is_general_linear_position(config))
            continue;
        EXPECT_TRUE(lies_on_rnc(config));
        for (const auto& p : config.points())
            EXPECT_TRUE(curve_contains(model, p));
    }
}

TEST(Membership, SampledModeUsesTheSample)
{
    const auto config = support::curve_configuration({-4, -1, 0, 1, 2, 3, 5, 8, 9, 11}, 4);
    WdnOptions options;
    options.sample = 100;
    options.seed = 9;
    const auto result = wdn_membership(config, options);
    EXPECT_EQ(result.reports.size(), 100U);
    EXPECT_TRUE(result.member);
    for (std::size_t i = 0; i < result.reports.size(); ++i)
        EXPECT_EQ(result.reports[i].index, sample_psi_indices(4, 10, 100, 9)[i]);
}

TEST(Membership, ParallelHookGivesSameReports)
{
    auto pts = support::curve_configuration({-4, -1, 0, 1, 2, 3, 5, 8, 9}, 3).points();
    pts[2] = point({1, 1, 1, 2});
    const Configuration config(pts);
    WdnOptions reversed;
    reversed.parallel = [](std::size_t count, const std::function<void(std::size_t)>& body) {
        for (std::size_t i = count; i-- > 0;)
            body(i);
    };
    const auto a = wdn_membership(config);
    const auto b = wdn_membership(config, reversed);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i)
        EXPECT_EQ(a.reports[i].value, b.reports[i].value);
    EXPECT_FALSE(a.member);
}
