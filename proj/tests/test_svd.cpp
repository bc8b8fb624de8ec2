#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "canospec/precision.hpp"
#include "canospec/svd.hpp"

using namespace canospec;
using C = std::complex<double>;

namespace {

// determinant by plain complex LU, used as an independent oracle: the
// product of the singular values must equal |det|
C lu_det(std::vector<C> a, int n)
{
    C det(1.0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a[r * n + k]) > std::abs(a[piv * n + k]))
                piv = r;
        if (piv != k) {
            for (int c = 0; c < n; ++c)
                std::swap(a[k * n + c], a[piv * n + c]);
            det = -det;
        }
        const C p = a[k * n + k];
        if (p == C(0.0))
            return C(0.0);
        det *= p;
        for (int r = k + 1; r < n; ++r) {
            const C f = a[r * n + k] / p;
            for (int c = k; c < n; ++c)
                a[r * n + c] -= f * a[k * n + c];
        }
    }
    return det;
}

std::vector<C> to_colmajor(const std::vector<C>& rowmajor, int n)
{
    std::vector<C> cm(rowmajor.size());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            cm[c * n + r] = rowmajor[r * n + c];
    return cm;
}

} // namespace

TEST(Svd, DiagonalMatrixGivesModuliSorted)
{
    const int n = 4;
    std::vector<C> a(n * n, C(0.0));
    const C d[4] = {C(0.0, -3.0), C(1.0, 0.0), C(0.3, 0.4), C(-7.0, 0.0)};
    for (int j = 0; j < n; ++j)
        a[j * n + j] = d[j];
    const auto sigma = singular_values_jacobi<double>(a, n);
    ASSERT_EQ(sigma.size(), 4u);
    EXPECT_NEAR(sigma[0], 7.0, 1e-14);
    EXPECT_NEAR(sigma[1], 3.0, 1e-14);
    EXPECT_NEAR(sigma[2], 1.0, 1e-14);
    EXPECT_NEAR(sigma[3], 0.5, 1e-14);
}

TEST(Svd, UnitaryMatrixHasUnitSingularValues)
{
    // DFT matrix / sqrt(n) is unitary
    const int n = 5;
    std::vector<C> a(n * n);
    const double w = 2.0 * M_PI / n;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[c * n + r] = std::polar(1.0 / std::sqrt(double(n)), w * r * c);
    const auto sigma = singular_values_jacobi<double>(a, n);
    for (const double s : sigma)
        EXPECT_NEAR(s, 1.0, 1e-13);
}

TEST(Svd, ZeroColumnGivesZeroSmallestSingularValue)
{
    const int n = 3;
    std::vector<C> a(n * n, C(0.0));
    a[0 * n + 0] = C(2.0, 0.0);
    a[0 * n + 1] = C(0.0, 1.0);
    a[2 * n + 0] = C(1.0, 1.0);
    a[2 * n + 2] = C(4.0, 0.0);
    // column 1 is identically zero
    const auto sigma = singular_values_jacobi<double>(a, n);
    EXPECT_EQ(sigma.back(), 0.0);
}

TEST(Svd, ProductOfSingularValuesMatchesDeterminantModulus)
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 7;
        std::vector<C> rowmajor(n * n);
        for (auto& v : rowmajor)
            v = C(dist(rng), dist(rng));
        const double abs_det = std::abs(lu_det(rowmajor, n));
        const auto sigma = singular_values_jacobi<double>(to_colmajor(rowmajor, n), n);
        double prod = 1.0;
        for (const double s : sigma)
            prod *= s;
        EXPECT_NEAR(prod, abs_det, 1e-10 * std::max(1.0, abs_det));
    }
}

TEST(Svd, FrobeniusNormIsPreserved)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const int n = 6;
    std::vector<C> a(n * n);
    double fro2 = 0.0;
    for (auto& v : a) {
        v = C(dist(rng), dist(rng));
        fro2 += std::norm(v);
    }
    const auto sigma = singular_values_jacobi<double>(a, n);
    double sum2 = 0.0;
    for (const double s : sigma)
        sum2 += s * s;
    EXPECT_NEAR(sum2, fro2, 1e-11 * fro2);
}

TEST(Svd, BigFloatTierAgreesWithDouble)
{
    const int n = 3;
    std::vector<C> a = {
        C(1.0, 0.0),  C(0.5, -0.5), C(0.0, 2.0),
        C(-1.0, 1.0), C(3.0, 0.0),  C(0.25, 0.0),
        C(0.0, 0.0),  C(1.0, 1.0),  C(-2.0, 0.5),
    };
    std::vector<BigComplex> ab(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        ab[i] = BigComplex(BigFloat(a[i].real()), BigFloat(a[i].imag()));
    const auto sd = singular_values_jacobi<double>(a, n);
    const auto sb = singular_values_jacobi<BigFloat>(ab, n);
    ASSERT_EQ(sd.size(), sb.size());
    for (std::size_t i = 0; i < sd.size(); ++i)
        EXPECT_NEAR(sd[i], static_cast<double>(sb[i]), 1e-13);
}

TEST(Svd, RejectsBadDimensions)
{
    std::vector<C> a(5, C(1.0, 0.0));
    EXPECT_THROW(singular_values_jacobi<double>(a, 2), std::invalid_argument);
    EXPECT_THROW(singular_values_jacobi<double>(a, 0), std::invalid_argument);
}
