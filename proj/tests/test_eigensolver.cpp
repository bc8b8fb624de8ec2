#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "canospec/eigensolver.hpp"
#include "canospec/exact_forms.hpp"
#include "canospec/order.hpp"
#include "canospec/precision.hpp"

using namespace canospec;

TEST(RefineRoot, ConvergesOnStandardFunctions)
{
    // cos has a root at pi/2; start from a deliberately lopsided bracket
    auto f1 = [](double x) { return std::cos(x); };
    const double r1 = detail::refine_root<double>(f1, 1.0, 3.1, f1(1.0), f1(3.1), 53);
    EXPECT_NEAR(r1, M_PI / 2.0, 1e-12);
    // a root with a steep slope on one side
    auto f2 = [](double x) { return std::exp(5.0 * x) - 2.0; };
    const double r2 = detail::refine_root<double>(f2, -1.0, 2.0, f2(-1.0), f2(2.0), 53);
    EXPECT_NEAR(r2, std::log(2.0) / 5.0, 1e-12);
    // bracket without a sign change is refused
    auto f3 = [](double x) { return x * x + 1.0; };
    EXPECT_THROW(detail::refine_root<double>(f3, 0.0, 1.0, f3(0.0), f3(1.0), 53),
                 std::runtime_error);
}

TEST(FindRoots, Alpha1ArithmeticProgression)
{
    const OperatorOrder order(1);
    const auto roots = find_roots<double>(order, 0.1, 6.5 * M_PI, 53);
    ASSERT_EQ(roots.size(), 6u);
    for (std::size_t i = 0; i < roots.size(); ++i)
        EXPECT_NEAR(roots[i], (i + 1) * M_PI, 1e-10);
}

TEST(FindRoots, Alpha2BeamRoots)
{
    const OperatorOrder order(2);
    const auto roots = find_roots<double>(order, 0.1, 12.0, 53);
    const double expected[] = {4.730040744862704, 7.853204624095838, 10.99560783800167};
    ASSERT_EQ(roots.size(), 3u);
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(roots[i], expected[i], 1e-10);
}

TEST(FindRoots, Alpha3MixedClosedForms)
{
    const OperatorOrder order(3);
    const auto roots = find_roots<double>(order, 5.0, 16.0, 53);
    // n = 2, 3, 4, 5 in this window
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_NEAR(roots[0], 2.0 * M_PI, 1e-10);
    EXPECT_NEAR(roots[1], 9.427055570888516, 1e-9);
    EXPECT_NEAR(roots[2], 4.0 * M_PI, 1e-10);
    EXPECT_NEAR(roots[3], 15.707953378550503, 1e-9);
}

TEST(FindRoots, RejectsBadWindow)
{
    const OperatorOrder order(2);
    EXPECT_THROW(find_roots<double>(order, -1.0, 5.0, 53), std::domain_error);
    EXPECT_THROW(find_roots<double>(order, 5.0, 2.0, 53), std::domain_error);
}

TEST(AssignIndices, OddUsesNearestMultipleOfPi)
{
    const OperatorOrder order(3);
    const std::vector<double> roots = {2.0 * M_PI, 9.427055570888516, 4.0 * M_PI};
    const auto spec = assign_indices(order, roots);
    ASSERT_EQ(spec.records.size(), 3u);
    EXPECT_EQ(spec.records[0].n, 2);
    EXPECT_EQ(spec.records[1].n, 3);
    EXPECT_EQ(spec.records[2].n, 4);
    EXPECT_NEAR(spec.records[1].delta, 0.0022776101, 1e-9);
    EXPECT_TRUE(spec.anomalies.empty());
}

TEST(AssignIndices, EvenUsesHalfOffsetBase)
{
    const OperatorOrder order(2);
    const std::vector<double> roots = {4.730040744862704, 7.853204624095838};
    const auto spec = assign_indices(order, roots);
    EXPECT_EQ(spec.records[0].n, 1);
    EXPECT_EQ(spec.records[1].n, 2);
    EXPECT_NEAR(spec.records[0].delta, 4.730040744862704 - 1.5 * M_PI, 1e-14);
    EXPECT_TRUE(spec.anomalies.empty());
}

TEST(AssignIndices, SurfacesCollisionsAndGaps)
{
    const OperatorOrder order(1);
    const std::vector<double> collide = {M_PI, M_PI + 1e-6};
    EXPECT_EQ(assign_indices(order, collide).anomalies.size(), 1u);
    const std::vector<double> gap = {M_PI, 3.0 * M_PI};
    const auto g = assign_indices(order, gap);
    ASSERT_EQ(g.anomalies.size(), 1u);
    EXPECT_NE(g.anomalies[0].find("gap"), std::string::npos);
}

TEST(Spectrum, Alpha1MatchesExactSpectrum)
{
    const auto spec = spectrum<double>(OperatorOrder(1), 8, 53);
    ASSERT_EQ(spec.records.size(), 8u);
    EXPECT_TRUE(spec.anomalies.empty());
    for (const auto& rec : spec.records) {
        EXPECT_NEAR(rec.mu, rec.n * M_PI, 1e-10);
        EXPECT_NEAR(rec.lambda, spectrum1<double>(rec.n), 1e-7 * rec.lambda);
    }
    EXPECT_EQ(spec.records.front().n, 1);
}

TEST(Spectrum, Alpha2RecordsSolveTheBeamEquation)
{
    const auto spec = spectrum<double>(OperatorOrder(2), 6, 53);
    ASSERT_EQ(spec.records.size(), 6u);
    EXPECT_TRUE(spec.anomalies.empty());
    for (const auto& rec : spec.records) {
        EXPECT_EQ(rec.method, RootMethod::closed_form_alpha2);
        EXPECT_LT(std::abs(eq2_residual(rec.mu)), 1e-10);
        // lambda is the fourth power of mu
        EXPECT_NEAR(rec.lambda, std::pow(rec.mu, 4.0), 1e-9 * rec.lambda);
    }
    EXPECT_EQ(spec.records.front().n, 1);
    EXPECT_NEAR(spec.records.front().mu, 4.730040744862704, 1e-10);
}

TEST(Spectrum, Alpha3EvenRootsSnapExactly)
{
    const auto spec = spectrum<BigFloat>(OperatorOrder(3), 7, 246);
    ASSERT_EQ(spec.records.size(), 7u);
    EXPECT_TRUE(spec.anomalies.empty());
    EXPECT_EQ(spec.records.front().n, 2);
    for (const auto& rec : spec.records) {
        if (rec.n % 2 == 0) {
            EXPECT_EQ(rec.method, RootMethod::closed_form_alpha3_even);
            EXPECT_EQ(rec.delta, BigFloat(0));
            EXPECT_EQ(rec.mu, BigFloat(rec.n) * pi_v<BigFloat>());
        } else {
            EXPECT_EQ(rec.method, RootMethod::transcendental_alpha3_odd);
            EXPECT_LT(static_cast<double>(abs(odd_equation_residual3(rec.mu))), 1e-40);
        }
    }
    // the tabulated first odd correction
    EXPECT_NEAR(static_cast<double>(spec.records[1].delta), 0.0022776101, 1e-9);
}

TEST(Spectrum, RootsInterlaceWithAsymptoticSpacing)
{
    // successive roots are separated by roughly pi for every order
    for (const int alpha : {4, 5, 6}) {
        const auto spec = spectrum<double>(OperatorOrder(alpha), 6, 53);
        EXPECT_TRUE(spec.anomalies.empty()) << "alpha=" << alpha;
        for (std::size_t i = 1; i < spec.records.size(); ++i) {
            const double gap = spec.records[i].mu - spec.records[i - 1].mu;
            EXPECT_GT(gap, 0.5 * M_PI) << "alpha=" << alpha;
            EXPECT_LT(gap, 1.5 * M_PI) << "alpha=" << alpha;
        }
    }
}

TEST(Spectrum, FirstIndexTracksThePredictedOnset)
{
    // n_0 grows like 0.4684 alpha; allow generous slack either side
    for (const int alpha : {5, 6, 8}) {
        const auto spec = spectrum<double>(OperatorOrder(alpha), 3, 53);
        const double hint = predict_first_index<double>(alpha);
        EXPECT_GE(spec.records.front().n, static_cast<int>(hint) - 1) << "alpha=" << alpha;
        EXPECT_LE(spec.records.front().n, static_cast<int>(hint) + 2) << "alpha=" << alpha;
    }
}

TEST(Spectrum, ResidualIsCertifiedSmall)
{
    // |F(mu)| at an accepted root must be tiny compared with the local
    // slope times the refinement tolerance (finite-difference certificate)
    for (const int alpha : {2, 4, 5}) {
        const OperatorOrder order(alpha);
        const auto phase = calibrate_det_phase<double>(order, 53);
        const auto spec = spectrum<double>(order, 4, 53);
        for (const auto& rec : spec.records) {
            const double tol = detail::refinement_tolerance<double>(53, rec.mu);
            const double h = 1e-4;
            const double slope = std::abs(normalized_real_det(order, rec.mu + h, 53, phase) -
                                          normalized_real_det(order, rec.mu - h, 53, phase)) /
                                 (2.0 * h);
            EXPECT_LE(rec.residual, 10.0 * tol * slope + 1e-300)
                << "alpha=" << alpha << " n=" << rec.n;
        }
    }
}

TEST(Spectrum, DeterministicAcrossRuns)
{
    const auto a = spectrum<double>(OperatorOrder(5), 5, 53);
    const auto b = spectrum<double>(OperatorOrder(5), 5, 53);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        // bit-identical, not merely close
        EXPECT_EQ(a.records[i].mu, b.records[i].mu);
        EXPECT_EQ(a.records[i].lambda, b.records[i].lambda);
        EXPECT_EQ(a.records[i].residual, b.records[i].residual);
    }
}

TEST(Spectrum, MinEigenvalueMatchesKnownValues)
{
    EXPECT_NEAR(min_eigenvalue<double>(OperatorOrder(1), 53).mu, M_PI, 1e-10);
    EXPECT_NEAR(min_eigenvalue<double>(OperatorOrder(2), 53).mu, 4.730040744862704, 1e-10);
    EXPECT_NEAR(min_eigenvalue<double>(OperatorOrder(3), 53).mu, 2.0 * M_PI, 1e-10);
}

TEST(Spectrum, RejectsBadArguments)
{
    EXPECT_THROW(spectrum<double>(OperatorOrder(2), 0, 53), std::domain_error);
    EXPECT_THROW(spectrum<double>(OperatorOrder(2), 3, 40), std::invalid_argument);
}
